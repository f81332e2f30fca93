#pragma once

#include <cstdint>
#include <vector>

#include "pp/poly.hpp"

namespace pp {

struct FactorEntry {
    Poly prime;
    uint32_t multiplicity = 1;
    bool operator==(const FactorEntry&) const = default;
};

/// Complete factorization in canonical order: entries sorted by
/// (degree, coefficient bits), pairwise distinct, multiplicities >= 1.
class Factorization {
public:
    Factorization() = default;

    /// Normalizes: sorts canonically and merges duplicate primes.
    static Factorization from_entries(std::vector<FactorEntry> entries);

    const std::vector<FactorEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    uint32_t omega() const noexcept { return static_cast<uint32_t>(entries_.size()); }
    bool squarefree() const noexcept;

    Poly product() const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<FactorEntry> entries_;
};

inline constexpr uint64_t kDefaultFactorSeed = 0x70657266706f6c79ull;

/// Squarefree decomposition via derivative and square-root extraction:
/// pairwise-coprime squarefree parts with their multiplicities, ordered
/// by multiplicity. The product of part^multiplicity recovers p.
std::vector<FactorEntry> squarefree_decompose(const Poly& p);

/// Finite-field irreducibility test with a derivative-gcd prefilter.
/// Constant (or zero) input is an error.
bool is_irreducible(const Poly& p);

/// Squarefree step, then distinct-degree, then equal-degree splitting.
/// The equal-degree stage draws from a generator derived from `seed`
/// and the input, so results are reproducible and thread-independent
/// (the canonical output order never depends on the seed).
Factorization factorize(const Poly& p, uint64_t seed = kDefaultFactorSeed);

inline constexpr uint64_t kMaxOrderDegree = 64;

/// Multiplicative order of x in GF(2)[x]/(p): p must be irreducible,
/// distinct from x, of degree <= kMaxOrderDegree.
uint64_t poly_order(const Poly& p);

/// True iff poly_order(p) = 2^deg(p) - 1.
bool is_primitive(const Poly& p);

/// x^(2^k) mod m, by k modular squarings.
Poly frobenius_pow(uint64_t k, const Poly& m);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, uint64_t e, const Poly& m);

}  // namespace pp
