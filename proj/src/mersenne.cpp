#include "pp/mersenne.hpp"

#include <numeric>

#include "pp/factor.hpp"
#include "pp/intarith.hpp"

namespace pp {

Poly mersenne_poly(MersennePair m) {
    if (m.a == 0 || m.b == 0) raise(errc::domain, "mersenne_poly requires a, b >= 1");
    return Poly::one() + pow(Poly::x(), m.a) * pow(Poly::x() + Poly::one(), m.b);
}

std::vector<MersennePair> enumerate_mersenne(uint64_t max_degree) {
    if (max_degree < 2) raise(errc::domain, "enumerate_mersenne requires max_degree >= 2");
    std::vector<MersennePair> out;
    for (uint64_t m = 2; m <= max_degree; ++m) {
        for (uint64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            MersennePair pair{a, m - a};
            if (is_irreducible(mersenne_poly(pair))) out.push_back(pair);
        }
    }
    return out;
}

std::optional<MersennePair> as_mersenne_prime_unchecked(const Poly& p) {
    if (p.is_zero() || p.is_one()) return std::nullopt;
    if (p.degree() < 2) return std::nullopt;
    auto split = split_exponents(p + Poly::one());
    if (!split || split->u == 0 || split->v == 0) return std::nullopt;
    return MersennePair{split->u, split->v};
}

std::optional<MersennePair> as_mersenne_prime(const Poly& p) {
    if (p.is_zero()) raise(errc::domain, "Mersenne test on the zero polynomial");
    auto pair = as_mersenne_prime_unchecked(p);
    if (!pair) return std::nullopt;
    if (!is_irreducible(p)) return std::nullopt;
    return pair;
}

uint64_t count_irreducibles(uint64_t m) {
    if (m < 1 || m > kMaxCountDegree) raise(errc::domain, "count_irreducibles: degree out of range");
    __int128 sum = 0;
    for (uint64_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        __int128 term = static_cast<__int128>(1) << (m / d);
        sum += mu > 0 ? term : -term;
    }
    if (sum % m != 0) raise(errc::internal, "necklace sum not divisible by m");
    return static_cast<uint64_t>(sum / m);
}

}  // namespace pp
