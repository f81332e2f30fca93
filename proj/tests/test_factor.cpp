#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pp/divisor.hpp"
#include "pp/factor.hpp"
#include "pp/mersenne.hpp"
#include "pp/text.hpp"
#include "oracles.hpp"

using pp::Poly;
using pp::parse_poly;

namespace {
Poly P(const char* text) { return parse_poly(text); }

std::vector<std::pair<Poly, uint32_t>> entries_of(const pp::Factorization& f) {
    std::vector<std::pair<Poly, uint32_t>> out;
    for (const auto& e : f.entries()) out.emplace_back(e.prime, e.multiplicity);
    return out;
}
}

TEST_CASE("squarefree decomposition") {
    auto parts = pp::squarefree_decompose(P("x^2*(x+1)"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].prime == P("x+1"));
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].prime == P("x"));
    CHECK(parts[1].multiplicity == 2);

    parts = pp::squarefree_decompose(P("(x^3+x+1)^2"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].prime == P("x^3+x+1"));
    CHECK(parts[0].multiplicity == 2);

    CHECK(pp::squarefree_decompose(Poly::one()).empty());
    CHECK_THROWS_AS(pp::squarefree_decompose(Poly::zero()), pp::error);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Poly p = oracle::random_nonzero(rng, 40);
        Poly product = Poly::one();
        uint32_t last_mult = 0;
        for (const auto& [part, mult] : pp::squarefree_decompose(p)) {
            CHECK(mult > last_mult);  // strictly ascending multiplicities
            last_mult = mult;
            CHECK(pp::gcd(part, pp::derivative(part)).is_one());  // squarefree part
            product *= pp::pow(part, mult);
        }
        CHECK(product == p);
    }
}

TEST_CASE("sigma(M^(2h)) is squarefree for small h") {
    Poly m2 = pp::mersenne_poly({1, 2});
    for (uint64_t h = 1; h <= 10; ++h) {
        Poly s = pp::sigma_prime_power(m2, 2 * h);
        CHECK(pp::factorize(s).squarefree());
    }
}

TEST_CASE("is_irreducible") {
    CHECK(pp::is_irreducible(P("x")));
    CHECK(pp::is_irreducible(P("x+1")));
    CHECK(pp::is_irreducible(P("x^4+x+1")));
    CHECK_FALSE(pp::is_irreducible(P("x^5+x^4+1")));  // (x^2+x+1)(x^3+x+1)
    CHECK(P("x^2+x+1") * P("x^3+x+1") == P("x^5+x^4+1"));
    CHECK(pp::is_irreducible(P("x^4+x^3+x^2+x+1")));
    CHECK_FALSE(pp::is_irreducible(P("x^6+x^2+1")));  // a square
    CHECK_THROWS_AS(pp::is_irreducible(Poly::one()), pp::error);
    CHECK_THROWS_AS(pp::is_irreducible(Poly::zero()), pp::error);

    // agreement with the sieve table through degree 6
    auto table = oracle::irreducible_table(6);
    size_t found = 0;
    for (uint64_t bits = 2; bits < (1ull << 7); ++bits) {
        Poly p = oracle::from_bits(bits);
        bool in_table = std::find(table.begin(), table.end(), p) != table.end();
        CHECK(pp::is_irreducible(p) == in_table);
        if (in_table) ++found;
    }
    CHECK(found == table.size());
}

TEST_CASE("factorize golden displays") {
    Poly m2 = pp::mersenne_poly({1, 2});

    auto f6 = entries_of(pp::factorize(pp::sigma_prime_power(m2, 6)));
    REQUIRE(f6.size() == 3);
    CHECK(f6[0] == std::pair{P("x^3+x^2+1"), 1u});
    CHECK(f6[1] == std::pair{P("x^6+x^5+1"), 1u});
    CHECK(f6[2] == std::pair{P("x^9+x^7+x^5+x+1"), 1u});

    auto f8 = entries_of(pp::factorize(pp::sigma_prime_power(m2, 8)));
    REQUIRE(f8.size() == 4);
    CHECK(f8[0] == std::pair{P("x^2+x+1"), 1u});
    CHECK(f8[1] == std::pair{P("x^4+x^3+1"), 1u});
    CHECK(f8[2] == std::pair{P("x^6+x+1"), 1u});
    CHECK(f8[3] == std::pair{P("x^12+x^8+x^7+x^4+1"), 1u});

    // sigma(M1^2) = 1 + M1 + M1^2 = x^4+x+1, irreducible
    Poly m1 = pp::mersenne_poly({1, 1});
    Poly s = Poly::one() + m1 + pp::square(m1);
    CHECK(s == P("x^4+x+1"));
    auto f = entries_of(pp::factorize(s));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == std::pair{P("x^4+x+1"), 1u});
}

TEST_CASE("factorize equals trial division through degree 12") {
    for (uint64_t bits = 2; bits < (1ull << 13); ++bits) {
        Poly p = oracle::from_bits(bits);
        auto expected = oracle::trial_division_factorize(p);
        auto got = entries_of(pp::factorize(p));
        REQUIRE(got == expected);
    }
}

TEST_CASE("factorize round-trips on random inputs") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        Poly p = oracle::random_nonzero(rng, 64);
        pp::Factorization f = pp::factorize(p);
        CHECK(f.product() == p);
        for (const auto& e : f.entries()) CHECK(pp::is_irreducible(e.prime));
    }
}

TEST_CASE("seed changes nothing observable") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 40; ++i) {
        Poly p = oracle::random_nonzero(rng, 48);
        CHECK(pp::factorize(p, 1) == pp::factorize(p, 999));
    }
}

TEST_CASE("is_irreducible agrees with single-factor factorizations") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 200; ++i) {
        Poly p = oracle::random_poly(rng, 32);
        if (p.is_zero() || p.degree() == 0) continue;
        pp::Factorization f = pp::factorize(p);
        bool single = f.omega() == 1 && f.entries()[0].multiplicity == 1;
        CHECK(pp::is_irreducible(p) == single);
    }
}

TEST_CASE("irreducible count per degree matches N2") {
    for (uint64_t m = 1; m <= 16; ++m) {
        uint64_t count = 0;
        for (uint64_t bits = 1ull << m; bits < (1ull << (m + 1)); ++bits) {
            if (pp::is_irreducible(oracle::from_bits(bits))) ++count;
        }
        CHECK(count == pp::count_irreducibles(m));
    }
}

TEST_CASE("poly_order and primitivity") {
    CHECK(pp::poly_order(P("x^2+x+1")) == 3);
    CHECK(pp::poly_order(P("x^4+x^3+x^2+x+1")) == 5);
    CHECK(pp::poly_order(P("x^4+x+1")) == 15);
    CHECK(pp::is_primitive(P("x^2+x+1")));
    CHECK_FALSE(pp::is_primitive(P("x^4+x^3+x^2+x+1")));
    CHECK(pp::is_primitive(P("x^4+x+1")));
    CHECK_THROWS_AS(pp::poly_order(P("x")), pp::error);
    CHECK_THROWS_AS(pp::poly_order(P("x^5+x^4+1")), pp::error);  // reducible

    // order always divides 2^d - 1, and x^order = 1
    std::mt19937_64 rng(35);
    int tested = 0;
    while (tested < 40) {
        Poly p = oracle::random_poly(rng, 20);
        if (p.is_zero() || p.degree() < 2 || !pp::is_irreducible(p)) continue;
        ++tested;
        uint64_t order = pp::poly_order(p);
        uint64_t full = (1ull << p.degree()) - 1;
        CHECK(full % order == 0);
        CHECK(pp::powmod(Poly::x(), order, p).is_one());
    }
}

TEST_CASE("irreducibles of prime-Mersenne degree are primitive") {
    // degrees m with 2^m - 1 prime: 2, 3, 5, 7
    for (uint64_t m : {2, 3, 5, 7}) {
        for (uint64_t bits = 1ull << m; bits < (1ull << (m + 1)); ++bits) {
            Poly p = oracle::from_bits(bits);
            if (!pp::is_irreducible(p)) continue;
            CHECK(pp::is_primitive(p));
        }
    }
}

TEST_CASE("sigma(M^(k-1)) divides sigma(M^(2h)) when k divides 2h+1") {
    for (pp::MersennePair m : pp::enumerate_mersenne(6)) {
        Poly M = pp::mersenne_poly(m);
        for (uint64_t h = 1; h <= 15; ++h) {
            Poly big = pp::sigma_prime_power(M, 2 * h);
            for (uint64_t k = 1; k <= 2 * h + 1; ++k) {
                if ((2 * h + 1) % k) continue;
                CHECK(pp::divrem(big, pp::sigma_prime_power(M, k - 1)).rem.is_zero());
            }
        }
    }
}

TEST_CASE("no degree-3 irreducible divides sigma(M^2)") {
    // 2^3-1 = 7 is a prime different from p = 3, so neither degree-3
    // irreducible may divide sigma(M^2).
    for (pp::MersennePair m : pp::enumerate_mersenne(8)) {
        Poly s = pp::sigma_prime_power(pp::mersenne_poly(m), 2);
        CHECK_FALSE(pp::divrem(s, P("x^3+x+1")).rem.is_zero());
        CHECK_FALSE(pp::divrem(s, P("x^3+x^2+1")).rem.is_zero());
    }
}
