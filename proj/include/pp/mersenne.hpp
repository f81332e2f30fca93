#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pp/poly.hpp"

namespace pp {

/// Exponent pair (a, b) naming the polynomial 1 + x^a (x+1)^b.
struct MersennePair {
    uint64_t a = 0;
    uint64_t b = 0;
    auto operator<=>(const MersennePair&) const = default;
};

/// Expands 1 + x^a (x+1)^b; requires a, b >= 1. No irreducibility check.
Poly mersenne_poly(MersennePair m);

/// All pairs (a, b) with a + b <= max_degree whose polynomial is
/// irreducible, ordered by (degree, a). Only a with gcd(a, a+b) = 1 can
/// yield an irreducible polynomial, so the sweep skips the rest.
std::vector<MersennePair> enumerate_mersenne(uint64_t max_degree);

/// Recovers (a, b) when p is a Mersenne prime: p irreducible and p+1 =
/// x^a (x+1)^b with a, b >= 1. Nullopt for everything else (including
/// irreducibles like x^4+x+1 whose p+1 only partially splits).
std::optional<MersennePair> as_mersenne_prime(const Poly& p);

/// Split test on p+1 only; for use on polynomials already known to be
/// irreducible (e.g. factorization output).
std::optional<MersennePair> as_mersenne_prime_unchecked(const Poly& p);

inline constexpr uint64_t kMaxCountDegree = 64;

/// N2(m): number of irreducible polynomials of degree m over GF(2),
/// by the Moebius necklace formula (1/m) sum_{d|m} mu(d) 2^(m/d).
uint64_t count_irreducibles(uint64_t m);

}  // namespace pp
