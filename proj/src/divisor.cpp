#include "pp/divisor.hpp"

#include <bit>

#include "pp/text.hpp"

namespace pp {

Poly sigma_prime_power(const Poly& prime, uint64_t h) {
    if (prime.is_zero() || prime.is_one()) raise(errc::domain, "sigma_prime_power: not a prime power base");
    Poly numerator = pow(prime, h + 1) + Poly::one();
    return exact_div(numerator, prime + Poly::one());
}

Poly sigma(const Poly& a) {
    if (a.is_zero()) raise(errc::domain, "sigma(0) is undefined");
    Poly out = Poly::one();
    Factorization f = factorize(a);
    for (const auto& [prime, mult] : f.entries()) out *= sigma_prime_power(prime, mult);
    return out;
}

Poly sigma_star(const Poly& a) {
    if (a.is_zero()) raise(errc::domain, "sigma*(0) is undefined");
    Poly out = Poly::one();
    Factorization f = factorize(a);
    for (const auto& [prime, mult] : f.entries()) out *= pow(prime, mult) + Poly::one();
    return out;
}

bool is_perfect(const Poly& a) { return sigma(a) == a; }

bool is_unitary_perfect(const Poly& a) { return sigma_star(a) == a; }

bool is_special_perfect(const Poly& a) {
    if (a.is_zero()) raise(errc::domain, "special-perfect test on zero");
    if (a.is_one()) return false;
    Poly linear_x = Poly::x();
    Poly linear_x1 = Poly::x() + Poly::one();
    Factorization f = factorize(a);
    Poly s = Poly::one();
    for (const auto& [prime, mult] : f.entries()) {
        if (mult != 2) return false;
        if (prime == linear_x || prime == linear_x1) return false;
        s *= sigma_prime_power(prime, mult);
    }
    return s == a;
}

bool is_indecomposable(const Poly& a, PerfectMode mode) {
    bool perfect = mode == PerfectMode::perfect ? is_perfect(a) : is_unitary_perfect(a);
    if (!perfect) raise(errc::domain, "indecomposability is defined for (unitary) perfect inputs");
    Factorization f = factorize(a);
    uint32_t omega = f.omega();
    if (omega > kMaxIndecomposableOmega)
        raise(errc::limit, "indecomposability: too many distinct prime factors");
    if (omega < 2) return true;
    std::vector<Poly> component(omega), component_sigma(omega);
    for (uint32_t i = 0; i < omega; ++i) {
        const auto& e = f.entries()[i];
        component[i] = pow(e.prime, e.multiplicity);
        component_sigma[i] = mode == PerfectMode::perfect
                                 ? sigma_prime_power(e.prime, e.multiplicity)
                                 : component[i] + Poly::one();
    }
    // Subsets containing component 0 vs their nonempty complements.
    uint64_t half = 1ull << (omega - 1);
    for (uint64_t mask = 0; mask + 1 < half; ++mask) {
        Poly part = component[0], part_sigma = component_sigma[0];
        Poly rest = Poly::one(), rest_sigma = Poly::one();
        for (uint32_t i = 1; i < omega; ++i) {
            if (mask >> (i - 1) & 1) {
                part *= component[i];
                part_sigma *= component_sigma[i];
            } else {
                rest *= component[i];
                rest_sigma *= component_sigma[i];
            }
        }
        if (part == part_sigma && rest == rest_sigma) return false;
    }
    return true;
}

Poly u_iterate(MersennePair m, uint64_t h) {
    if (h < 1 || h > kMaxIterateH) raise(errc::domain, "u_iterate: h out of range");
    Poly M = mersenne_poly(m);
    if (!is_irreducible(M)) raise(errc::domain, "u_iterate: 1+x^a(x+1)^b is reducible");
    return sigma(sigma_prime_power(M, 2 * h));
}

namespace {

Poly build(std::initializer_list<std::pair<const char*, uint32_t>> factors) {
    Poly out = Poly::one();
    for (const auto& [text, e] : factors) out *= pow(parse_poly(text), e);
    return out;
}

}  // namespace

const std::array<Poly, 11>& perfect_list() {
    static const std::array<Poly, 11> list = {
        build({{"x", 2}, {"x+1", 1}, {"M(1,1)", 1}}),
        conjugate(build({{"x", 2}, {"x+1", 1}, {"M(1,1)", 1}})),
        build({{"x", 4}, {"x+1", 3}, {"M(1,3)", 1}}),
        conjugate(build({{"x", 4}, {"x+1", 3}, {"M(1,3)", 1}})),
        build({{"x", 4}, {"x+1", 4}, {"M(1,3)", 1}, {"M(3,1)", 1}}),
        build({{"x", 6}, {"x+1", 3}, {"M(1,2)", 1}, {"M(2,1)", 1}}),
        conjugate(build({{"x", 6}, {"x+1", 3}, {"M(1,2)", 1}, {"M(2,1)", 1}})),
        build({{"x", 4}, {"x+1", 6}, {"M(1,2)", 1}, {"M(2,1)", 1}, {"M(1,3)", 1}}),
        conjugate(build({{"x", 4}, {"x+1", 6}, {"M(1,2)", 1}, {"M(2,1)", 1}, {"M(1,3)", 1}})),
        build({{"x", 2}, {"x+1", 1}, {"x^4+x+1", 1}, {"M(1,1)", 2}}),
        conjugate(build({{"x", 2}, {"x+1", 1}, {"x^4+x+1", 1}, {"M(1,1)", 2}})),
    };
    return list;
}

const std::array<Poly, 9>& unitary_base_list() {
    static const std::array<Poly, 9> list = {
        build({{"x", 3}, {"x+1", 3}, {"M(1,1)", 2}}),
        build({{"x", 3}, {"x+1", 2}, {"M(1,1)", 1}}),
        build({{"x", 5}, {"x+1", 4}, {"M(1,3)", 1}}),
        build({{"x", 7}, {"x+1", 4}, {"M(1,2)", 1}, {"M(2,1)", 1}}),
        build({{"x", 5}, {"x+1", 6}, {"M(1,1)", 2}, {"M(1,3)", 1}}),
        build({{"x", 5}, {"x+1", 5}, {"M(1,3)", 1}, {"M(3,1)", 1}}),
        build({{"x", 7}, {"x+1", 7}, {"M(1,2)", 2}, {"M(2,1)", 2}}),
        build({{"x", 7}, {"x+1", 6}, {"M(1,1)", 2}, {"M(1,2)", 1}, {"M(2,1)", 1}}),
        build({{"x", 7}, {"x+1", 5}, {"M(1,2)", 1}, {"M(2,1)", 1}, {"M(3,1)", 1}}),
    };
    return list;
}

Poly trivial_perfect(uint32_t n) {
    if (n < 1 || n > 32) raise(errc::domain, "trivial_perfect: n out of range");
    return pow(Poly::x() * (Poly::x() + Poly::one()), (1ull << n) - 1);
}

const char* perfect_kind_name(PerfectKind kind) noexcept {
    switch (kind) {
        case PerfectKind::not_perfect: return "not-perfect";
        case PerfectKind::trivial_perfect: return "trivial-perfect";
        case PerfectKind::paper_T: return "paper-T";
        case PerfectKind::unitary_paper_U: return "unitary-paper-U";
        case PerfectKind::other_perfect: return "other-perfect";
        case PerfectKind::other_unitary_perfect: return "other-unitary-perfect";
    }
    return "?";
}

PerfectClass classify_perfect(const Poly& a, PerfectMode mode) {
    if (a.is_zero()) raise(errc::domain, "classification of zero");
    PerfectClass out;
    out.witness = factorize(a);
    bool perfect = mode == PerfectMode::perfect ? is_perfect(a) : is_unitary_perfect(a);
    if (!perfect) {
        out.kind = PerfectKind::not_perfect;
        return out;
    }
    // (x^2+x)^(2^n - 1)?
    if (auto split = split_exponents(a); split && split->u == split->v && split->u >= 1 &&
                                         std::has_single_bit(split->u + 1)) {
        out.kind = PerfectKind::trivial_perfect;
        out.index = static_cast<uint32_t>(std::countr_zero(split->u + 1));
        return out;
    }
    Poly bar = conjugate(a);
    if (mode == PerfectMode::perfect) {
        const auto& list = perfect_list();
        for (uint32_t i = 0; i < list.size(); ++i) {
            if (a == list[i] || bar == list[i]) {
                out.kind = PerfectKind::paper_T;
                out.index = i + 1;
                out.conjugated = a != list[i];
                return out;
            }
        }
        out.kind = PerfectKind::other_perfect;
        return out;
    }
    const auto& bases = unitary_base_list();
    uint64_t deg = a.degree();
    for (uint32_t j = 0; j < bases.size(); ++j) {
        Poly candidate = bases[j];
        for (uint32_t n = 0; candidate.degree() <= deg; ++n) {
            if (a == candidate || bar == candidate) {
                out.kind = PerfectKind::unitary_paper_U;
                out.index = j + 1;
                out.power = n;
                out.conjugated = a != candidate;
                return out;
            }
            if (candidate.degree() > deg / 2) break;
            candidate = square(candidate);
        }
    }
    out.kind = PerfectKind::other_unitary_perfect;
    return out;
}

}  // namespace pp
