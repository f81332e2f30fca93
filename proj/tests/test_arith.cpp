#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pp/intarith.hpp"

TEST_CASE("primality") {
    CHECK(pp::is_prime_u64(2));
    CHECK(pp::is_prime_u64(3));
    CHECK_FALSE(pp::is_prime_u64(1));
    CHECK_FALSE(pp::is_prime_u64(0));
    CHECK(pp::is_prime_u64(673));
    CHECK_FALSE(pp::is_prime_u64(341));            // 2-pseudoprime
    CHECK(pp::is_prime_u64(2147483647ull));        // 2^31 - 1
    CHECK(pp::is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(pp::is_prime_u64(~0ull));
}

TEST_CASE("factor_u64") {
    using V = std::vector<std::pair<uint64_t, uint32_t>>;
    CHECK(pp::factor_u64(1) == V{});
    CHECK(pp::factor_u64(12) == V{{2, 2}, {3, 1}});
    CHECK(pp::factor_u64(97) == V{{97, 1}});
    // 2^49 - 1 = 127 * 4432676798593 needs the rho stage
    CHECK(pp::factor_u64((1ull << 49) - 1) == V{{127, 1}, {4432676798593ull, 1}});
    // 2^59 - 1 = 179951 * 3203431780337
    CHECK(pp::factor_u64((1ull << 59) - 1) == V{{179951, 1}, {3203431780337ull, 1}});
    CHECK_THROWS_AS(pp::factor_u64(0), pp::error);

    for (uint64_t n = 2; n < 2000; ++n) {
        uint64_t back = 1;
        for (const auto& [p, e] : pp::factor_u64(n)) {
            CHECK(pp::is_prime_u64(p));
            for (uint32_t i = 0; i < e; ++i) back *= p;
        }
        CHECK(back == n);
    }
}

TEST_CASE("phi and moebius") {
    CHECK(pp::euler_phi(1) == 1);
    CHECK(pp::euler_phi(4) == 2);
    CHECK(pp::euler_phi(97) == 96);
    CHECK(pp::moebius(1) == 1);
    CHECK(pp::moebius(6) == 1);
    CHECK(pp::moebius(30) == -1);
    CHECK(pp::moebius(12) == 0);
    // sum over divisors of phi(d) = n
    for (uint64_t n = 1; n <= 200; ++n) {
        uint64_t total = 0;
        for (uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) total += pp::euler_phi(d);
        CHECK(total == n);
    }
}

TEST_CASE("ord2 examples") {
    CHECK(pp::ord2_mod(3) == 2);
    CHECK(pp::ord2_mod(7) == 3);
    CHECK(pp::ord2_mod(17) == 8);
    CHECK(pp::ord2_mod(97) == 48);
    CHECK(pp::ord2_mod(673) == 48);
    CHECK_THROWS_AS(pp::ord2_mod(15), pp::error);
    CHECK_THROWS_AS(pp::ord2_mod(2), pp::error);
}

TEST_CASE("ord2 is the least exponent, brute force below 10^4") {
    for (uint64_t p = 3; p < 10000; p += 2) {
        if (!pp::is_prime_u64(p)) continue;
        uint64_t order = pp::ord2_mod(p);
        CHECK((p - 1) % order == 0);
        uint64_t value = 1;
        for (uint64_t k = 1; k < order; ++k) {
            value = value * 2 % p;
            CHECK(value != 1);
        }
        CHECK(value * 2 % p == 1);
    }
}

TEST_CASE("classify_prime") {
    pp::PrimeProfile seven = pp::classify_prime(7);
    CHECK(seven.is_mersenne_number);
    CHECK_FALSE(seven.is_fermat_prime);
    CHECK(seven.ord2 == 3);

    pp::PrimeProfile five = pp::classify_prime(5);
    CHECK(five.is_fermat_prime);
    CHECK_FALSE(five.is_mersenne_number);
    CHECK(five.ord2 == 4);

    pp::PrimeProfile three = pp::classify_prime(3);
    CHECK(three.is_mersenne_number);
    CHECK(three.is_fermat_prime);  // 3 = 2^(2^0) + 1
    CHECK(three.ord2 == 2);

    CHECK_THROWS_AS(pp::classify_prime(6), pp::error);
}

TEST_CASE("fermat primes have ord2 = 2^(w+1); the converse fails") {
    CHECK(pp::ord2_mod(17) == 8);      // w = 2
    CHECK(pp::ord2_mod(257) == 16);    // w = 3
    CHECK(pp::ord2_mod(65537) == 32);  // w = 4
    for (uint64_t p : {17, 257, 65537}) CHECK(pp::ord2_mod(p) % 8 == 0);

    // 97 and 673 have 8 | ord2 without being Mersenne or Fermat
    for (uint64_t p : {97, 673}) {
        pp::PrimeProfile profile = pp::classify_prime(p);
        CHECK(profile.ord2 % 8 == 0);
        CHECK_FALSE(profile.is_mersenne_number);
        CHECK_FALSE(profile.is_fermat_prime);
    }
}

TEST_CASE("ord2 divides p-1") {
    for (uint64_t p : {3ull, 5ull, 31ull, 127ull, 8191ull, 131071ull, 2147483647ull})
        CHECK((p - 1) % pp::ord2_mod(p) == 0);
}
