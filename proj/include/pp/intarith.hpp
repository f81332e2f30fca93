#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pp/poly.hpp"

namespace pp {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n) noexcept;

/// Trial division + Pollard rho; sorted (prime, exponent) pairs.
std::vector<std::pair<uint64_t, uint32_t>> factor_u64(uint64_t n);

uint64_t euler_phi(uint64_t n);
int moebius(uint64_t n);

/// Least k >= 1 with 2^k = 1 (mod p); p must be an odd prime.
uint64_t ord2_mod(uint64_t p);

struct PrimeProfile {
    uint64_t p = 0;
    uint64_t ord2 = 0;
    bool is_mersenne_number = false;  // p = 2^m - 1
    bool is_fermat_prime = false;     // p = 2^(2^w) + 1
};

/// Profile of an odd prime; composite or even input is an error.
PrimeProfile classify_prime(uint64_t p);

}  // namespace pp
