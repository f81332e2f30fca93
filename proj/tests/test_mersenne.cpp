#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pp/factor.hpp"
#include "pp/intarith.hpp"
#include "pp/mersenne.hpp"
#include "pp/text.hpp"
#include "oracles.hpp"

using pp::MersennePair;
using pp::Poly;
using pp::parse_poly;

namespace {
std::vector<MersennePair> slice(const std::vector<MersennePair>& all, uint64_t degree) {
    std::vector<MersennePair> out;
    for (MersennePair m : all)
        if (m.a + m.b == degree) out.push_back(m);
    return out;
}
}

TEST_CASE("mersenne_poly expands 1 + x^a (x+1)^b") {
    CHECK(pp::mersenne_poly({1, 1}) == parse_poly("x^2+x+1"));
    CHECK(pp::mersenne_poly({1, 2}) == parse_poly("x^3+x+1"));
    CHECK(pp::mersenne_poly({3, 1}) == parse_poly("x^4+x^3+1"));
    CHECK(pp::mersenne_poly({2, 3}) == parse_poly("x^5+x^4+x^3+x^2+1"));
    CHECK(pp::mersenne_poly({4, 7}).degree() == 11);
    CHECK_THROWS_AS(pp::mersenne_poly({0, 2}), pp::error);
}

TEST_CASE("enumeration slices") {
    auto all = pp::enumerate_mersenne(24);

    CHECK(slice(all, 2) == std::vector<MersennePair>{{1, 1}});
    CHECK(slice(all, 3) == std::vector<MersennePair>{{1, 2}, {2, 1}});
    CHECK(slice(all, 4) == std::vector<MersennePair>{{1, 3}, {3, 1}});
    CHECK(slice(all, 5) == std::vector<MersennePair>{{2, 3}, {3, 2}});
    CHECK(slice(all, 8).empty());
    CHECK(slice(all, 16).empty());
    CHECK(slice(all, 24).empty());

    // x^4+x+1 is irreducible but not of Mersenne form
    CHECK(pp::is_irreducible(parse_poly("x^4+x+1")));
    CHECK(slice(all, 4).size() == 2);

    for (MersennePair m : all) {
        CHECK(std::gcd(m.a, m.b) == 1);
        CHECK(pp::is_irreducible(pp::mersenne_poly(m)));
    }
    CHECK_THROWS_AS(pp::enumerate_mersenne(1), pp::error);
}

TEST_CASE("slice sizes stay under phi(m), with non-Mersenne irreducibles left over") {
    auto all = pp::enumerate_mersenne(24);
    for (uint64_t m = 2; m <= 24; ++m) {
        uint64_t count = slice(all, m).size();
        CHECK(count <= pp::euler_phi(m));
        if (m >= 4) CHECK(count < pp::count_irreducibles(m));
    }
}

TEST_CASE("conjugation closure") {
    auto all = pp::enumerate_mersenne(20);
    for (MersennePair m : all) {
        MersennePair swapped{m.b, m.a};
        CHECK(std::find(all.begin(), all.end(), swapped) != all.end());
        CHECK(pp::conjugate(pp::mersenne_poly(m)) == pp::mersenne_poly(swapped));
    }
}

TEST_CASE("mersenne recognition factors p+1") {
    auto pair = pp::as_mersenne_prime(parse_poly("x^3+x+1"));
    REQUIRE(pair.has_value());
    CHECK(*pair == MersennePair{1, 2});

    // irreducible, but x^4+x = x(x+1)(x^2+x+1) does not split
    CHECK_FALSE(pp::as_mersenne_prime(parse_poly("x^4+x+1")));

    // irreducible with p+1 = x(x+1)^2(x^3+x+1)^2: a partial split only
    Poly q9 = parse_poly("x^9+x^7+x^5+x+1");
    CHECK(pp::is_irreducible(q9));
    CHECK(q9 == parse_poly("1+x*(x+1)^2*(x^3+x+1)^2"));
    CHECK_FALSE(pp::as_mersenne_prime(q9));

    // x^6+x+1 = 1 + x(x+1)M3 is irreducible but not Mersenne
    Poly q6 = parse_poly("x^6+x+1");
    CHECK(q6 == Poly::one() + Poly::x() * (Poly::x() + Poly::one()) * pp::mersenne_poly({1, 3}));
    CHECK_FALSE(pp::as_mersenne_prime(q6));

    CHECK_FALSE(pp::as_mersenne_prime(parse_poly("x^5+x^4+1")));  // reducible
    CHECK_FALSE(pp::as_mersenne_prime(parse_poly("x+1")));
    CHECK_THROWS_AS(pp::as_mersenne_prime(Poly::zero()), pp::error);
}

TEST_CASE("count_irreducibles") {
    CHECK(pp::count_irreducibles(1) == 2);
    CHECK(pp::count_irreducibles(2) == 1);
    CHECK(pp::count_irreducibles(3) == 2);
    CHECK(pp::count_irreducibles(4) == 3);
    CHECK(pp::count_irreducibles(16) == 4080);
    CHECK(pp::count_irreducibles(64) == (((__int128)1 << 64) - (1ull << 32)) / 64);
    CHECK_THROWS_AS(pp::count_irreducibles(0), pp::error);
    CHECK_THROWS_AS(pp::count_irreducibles(65), pp::error);
}

TEST_CASE("counting bounds") {
    for (uint64_t m = 4; m <= 64; ++m) CHECK(pp::euler_phi(m) < pp::count_irreducibles(m));
    for (uint64_t m = 4; m <= 32; ++m) {
        long double lower =
            (std::exp2((long double)m) - 2.0L * (std::exp2((long double)m / 2) - 1.0L)) / m;
        CHECK(pp::count_irreducibles(m) >= (uint64_t)std::ceil(lower));
    }
    // the m = 4 bound is exactly tight: ceil(10/4) = 3 = N2(4)
    CHECK(pp::count_irreducibles(4) == 3);
}

TEST_CASE("degree-8k candidates all have an even factor count") {
    for (uint64_t m : {8, 16, 24}) {
        for (uint64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            CHECK(pp::factorize(pp::mersenne_poly({a, m - a})).omega() % 2 == 0);
        }
    }
}
