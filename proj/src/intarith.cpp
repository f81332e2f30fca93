#include "pp/intarith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pp {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Pollard rho, Brent's cycle finding; c advances deterministically.
uint64_t rho(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod(y, y, n) + c) % n;
            ++lam;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(uint64_t n) noexcept {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::pair<uint64_t, uint32_t>> factor_u64(uint64_t n) {
    if (n == 0) raise(errc::domain, "factor_u64(0)");
    std::vector<uint64_t> primes;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, uint32_t>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

uint64_t euler_phi(uint64_t n) {
    if (n == 0) raise(errc::domain, "euler_phi(0)");
    uint64_t out = n;
    for (const auto& [p, e] : factor_u64(n)) out = out / p * (p - 1);
    return out;
}

int moebius(uint64_t n) {
    if (n == 0) raise(errc::domain, "moebius(0)");
    int out = 1;
    for (const auto& [p, e] : factor_u64(n)) {
        if (e > 1) return 0;
        out = -out;
    }
    return out;
}

uint64_t ord2_mod(uint64_t p) {
    if (p % 2 == 0 || !is_prime_u64(p)) raise(errc::domain, "ord2 requires an odd prime");
    uint64_t order = p - 1;
    for (const auto& [q, e] : factor_u64(p - 1)) {
        while (order % q == 0 && powmod(2, order / q, p) == 1) order /= q;
    }
    return order;
}

PrimeProfile classify_prime(uint64_t p) {
    PrimeProfile out;
    out.p = p;
    out.ord2 = ord2_mod(p);  // validates oddness and primality
    out.is_mersenne_number = std::has_single_bit(p + 1);
    uint64_t t = p - 1;
    out.is_fermat_prime = std::has_single_bit(t) && std::has_single_bit(static_cast<uint64_t>(std::countr_zero(t)));
    return out;
}

}  // namespace pp
