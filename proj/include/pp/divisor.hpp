#pragma once

#include <array>
#include <cstdint>

#include "pp/factor.hpp"
#include "pp/mersenne.hpp"
#include "pp/poly.hpp"

namespace pp {

/// sigma(P^h) = 1 + P + ... + P^h for irreducible P, computed as the
/// exact division (P^(h+1) + 1)/(P + 1).
Poly sigma_prime_power(const Poly& prime, uint64_t h);

/// Sum of all divisors; multiplicative over the factorization. a != 0.
Poly sigma(const Poly& a);

/// Sum of unitary divisors: product of (1 + P^h) over prime powers.
Poly sigma_star(const Poly& a);

bool is_perfect(const Poly& a);
bool is_unitary_perfect(const Poly& a);

/// Perfect with every prime factor odd of multiplicity exactly 2.
bool is_special_perfect(const Poly& a);

enum class PerfectMode { perfect, unitary };

inline constexpr uint32_t kMaxIndecomposableOmega = 20;

/// A (unitary) perfect polynomial is indecomposable when no partition
/// of its prime-power components into two coprime nonconstant parts
/// yields two (unitary) perfect polynomials. Input must be perfect in
/// the given mode; subset enumeration rejects omega > 20.
bool is_indecomposable(const Poly& a, PerfectMode mode);

/// sigma(sigma(M^(2h))) for the Mersenne prime named by the pair.
Poly u_iterate(MersennePair m, uint64_t h);
inline constexpr uint64_t kMaxIterateH = 512;

enum class PerfectKind {
    not_perfect,
    trivial_perfect,        // (x^2+x)^(2^n - 1), n >= 1
    paper_T,                // one of the eleven listed T_i
    unitary_paper_U,        // U_j^(2^n), j in 1..9, n >= 0
    other_perfect,
    other_unitary_perfect,
};

struct PerfectClass {
    PerfectKind kind = PerfectKind::not_perfect;
    uint32_t index = 0;      // T index 1..11, U base index 1..9, trivial n
    uint32_t power = 0;      // n in U_j^(2^n)
    bool conjugated = false; // matched the conjugate of the listed entry
    Factorization witness;
};

const char* perfect_kind_name(PerfectKind kind) noexcept;

/// Matches against the published lists up to conjugation (A and its
/// conjugate share a classification row).
PerfectClass classify_perfect(const Poly& a, PerfectMode mode);

/// The eleven nontrivial perfect polynomials T_1..T_11 (index i-1).
const std::array<Poly, 11>& perfect_list();

/// The nine unitary bases U_1..U_9 (index j-1).
const std::array<Poly, 9>& unitary_base_list();

/// (x^2+x)^(2^n - 1).
Poly trivial_perfect(uint32_t n);

}  // namespace pp
