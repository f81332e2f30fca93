#include "pp/factor.hpp"

#include <algorithm>

#include "pp/intarith.hpp"

namespace pp {

namespace {

struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

Poly random_below_degree(uint64_t degree, SplitMix64& rng) {
    // ceil(degree/64) words hold coefficients 0..degree-1; a zero top
    // remainder means the last word is full.
    std::vector<uint64_t> w((degree + 63) / 64, 0);
    for (auto& word : w) word = rng.next();
    uint64_t top = degree % 64;
    if (top) w.back() &= (1ull << top) - 1;
    return Poly::from_words(std::move(w));
}

// Equal-degree splitting for a product of r >= 1 irreducibles of degree d,
// using the GF(2) trace map u + u^2 + ... + u^(2^(d-1)).
void equal_degree_split(const Poly& f, uint64_t d, SplitMix64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Poly u = random_below_degree(f.degree(), rng);
        if (u.is_zero()) continue;
        Poly trace = u, v = u;
        for (uint64_t i = 1; i < d; ++i) {
            v = divrem(square(v), f).rem;
            trace += v;
        }
        if (trace.is_zero()) continue;
        Poly g = gcd(trace, f);
        if (!g.is_one() && g != f) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

// Distinct-degree decomposition of a monic squarefree f:
// (product of its irreducible factors of degree d, d) pairs.
std::vector<std::pair<Poly, uint64_t>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, uint64_t>> out;
    Poly h = divrem(Poly::x(), f).rem;
    uint64_t d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = divrem(square(h), f).rem;
        Poly g = gcd(h + divrem(Poly::x(), f).rem, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = exact_div(f, g);
            if (f.is_one()) return out;
            h = divrem(h, f).rem;
        }
    }
    if (!f.is_one()) out.emplace_back(f, f.degree());
    return out;
}

}  // namespace

Factorization Factorization::from_entries(std::vector<FactorEntry> entries) {
    for (const auto& e : entries) {
        if (e.prime.is_zero() || e.prime.is_one())
            raise(errc::domain, "factorization entries must be nonconstant");
        if (e.multiplicity == 0) raise(errc::domain, "factorization multiplicity must be >= 1");
    }
    std::sort(entries.begin(), entries.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.prime < b.prime; });
    std::vector<FactorEntry> merged;
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().prime == e.prime)
            merged.back().multiplicity += e.multiplicity;
        else
            merged.push_back(std::move(e));
    }
    Factorization out;
    out.entries_ = std::move(merged);
    return out;
}

bool Factorization::squarefree() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const FactorEntry& e) { return e.multiplicity == 1; });
}

Poly Factorization::product() const {
    Poly out = Poly::one();
    for (const auto& e : entries_) out *= pow(e.prime, e.multiplicity);
    return out;
}

std::vector<FactorEntry> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) raise(errc::domain, "squarefree decomposition of zero");
    std::vector<FactorEntry> out;
    // Characteristic 2: p' = 0 iff p is a square.
    auto rec = [&out](auto&& self, Poly f, uint32_t scale) -> void {
        if (f.is_one()) return;
        Poly d = derivative(f);
        if (d.is_zero()) {
            self(self, sqrt_exact(f), 2 * scale);
            return;
        }
        Poly c = gcd(f, d);
        Poly w = exact_div(f, c);
        uint32_t i = 1;
        while (!w.is_one()) {
            Poly y = gcd(w, c);
            Poly z = exact_div(w, y);
            if (!z.is_one()) out.push_back({z, i * scale});
            ++i;
            w = std::move(y);
            c = exact_div(c, w);
        }
        if (!c.is_one()) self(self, sqrt_exact(c), 2 * scale);
    };
    rec(rec, p, 1);
    std::sort(out.begin(), out.end(), [](const FactorEntry& a, const FactorEntry& b) {
        return a.multiplicity != b.multiplicity ? a.multiplicity < b.multiplicity : a.prime < b.prime;
    });
    return out;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return divrem(a * b, m).rem; }

Poly powmod(const Poly& a, uint64_t e, const Poly& m) {
    Poly base = divrem(a, m).rem;
    Poly out = divrem(Poly::one(), m).rem;
    while (e) {
        if (e & 1) out = mulmod(out, base, m);
        e >>= 1;
        if (e) base = divrem(square(base), m).rem;
    }
    return out;
}

Poly frobenius_pow(uint64_t k, const Poly& m) {
    Poly h = divrem(Poly::x(), m).rem;
    for (uint64_t i = 0; i < k; ++i) h = divrem(square(h), m).rem;
    return h;
}

bool is_irreducible(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) raise(errc::domain, "irreducibility of a constant is undefined");
    uint64_t n = p.degree();
    if (n == 1) return true;
    // Cheap rejection: a repeated factor (or a perfect square) is reducible.
    Poly d = derivative(p);
    if (d.is_zero() || !gcd(p, d).is_one()) return false;
    Poly xr = divrem(Poly::x(), p).rem;
    if (frobenius_pow(n, p) != xr) return false;
    for (const auto& [r, e] : factor_u64(n)) {
        if (!gcd(frobenius_pow(n / r, p) + xr, p).is_one()) return false;
    }
    return true;
}

Factorization factorize(const Poly& p, uint64_t seed) {
    if (p.is_zero()) raise(errc::domain, "factorization of zero");
    std::vector<FactorEntry> entries;
    for (const auto& [part, mult] : squarefree_decompose(p)) {
        for (const auto& [g, d] : distinct_degree(part)) {
            SplitMix64 rng{seed ^ g.hash() ^ (d * 0x9e3779b97f4a7c15ull)};
            std::vector<Poly> primes;
            equal_degree_split(g, d, rng, primes);
            for (auto& prime : primes) entries.push_back({std::move(prime), mult});
        }
    }
    return Factorization::from_entries(std::move(entries));
}

uint64_t poly_order(const Poly& p) {
    if (!is_irreducible(p)) raise(errc::domain, "poly_order requires an irreducible polynomial");
    if (p == Poly::x()) raise(errc::domain, "poly_order is undefined for x");
    uint64_t d = p.degree();
    if (d > kMaxOrderDegree) raise(errc::limit, "poly_order: degree exceeds the configured bound");
    uint64_t n = (d == 64) ? ~0ull : (1ull << d) - 1;
    uint64_t order = n;
    for (const auto& [q, e] : factor_u64(n)) {
        while (order % q == 0 && powmod(Poly::x(), order / q, p).is_one()) order /= q;
    }
    return order;
}

bool is_primitive(const Poly& p) {
    uint64_t order = poly_order(p);
    uint64_t d = p.degree();
    return order == ((d == 64) ? ~0ull : (1ull << d) - 1);
}

}  // namespace pp
