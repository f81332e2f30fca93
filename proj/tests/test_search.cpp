#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pp/intarith.hpp"
#include "pp/jsonl.hpp"
#include "pp/search.hpp"
#include "pp/text.hpp"
#include "oracles.hpp"

using pp::MersennePair;
using pp::PerfectMode;
using pp::Poly;
using pp::parse_poly;

namespace {

std::set<Poly> hit_polys(const std::vector<pp::SearchHit>& hits) {
    std::set<Poly> out;
    for (const auto& h : hits) out.insert(h.polynomial);
    return out;
}

// Brute-force sweep: every polynomial of degree <= max_degree that is
// even and has Mersenne-only odd part, kept when fixed by the divisor
// sum. Independent of the signature enumeration.
std::set<Poly> sweep(uint64_t max_degree, PerfectMode mode) {
    std::set<Poly> out;
    for (uint64_t bits = 2; bits < (1ull << (max_degree + 1)); ++bits) {
        Poly p = oracle::from_bits(bits);
        bool even = !p.coeff(0) || pp::divrem(p, parse_poly("x+1")).rem.is_zero();
        if (!even) continue;
        pp::Factorization f = pp::factorize(p);
        bool eligible = true;
        for (const auto& e : f.entries()) {
            if (e.prime.degree() == 1) continue;
            if (!pp::as_mersenne_prime_unchecked(e.prime)) {
                eligible = false;
                break;
            }
        }
        if (!eligible) continue;
        Poly s = mode == PerfectMode::perfect ? pp::sigma(p) : pp::sigma_star(p);
        if (s == p) out.insert(p);
    }
    return out;
}

}  // namespace

TEST_CASE("hypothesis tags") {
    using Tags = std::vector<std::string>;
    CHECK(pp::hypothesis_tags({1, 1}, 5) == Tags{"m1-m3-family"});
    CHECK(pp::hypothesis_tags({1, 3}, 1) == Tags{"m1-m3-family"});
    CHECK(pp::hypothesis_tags({1, 2}, 1) == Tags{});
    CHECK(pp::hypothesis_tags({1, 2}, 2) == Tags{"m2-family-h2"});
    CHECK(pp::hypothesis_tags({2, 3}, 1) == Tags{"mersenne-p"});   // 2h+1 = 3
    CHECK(pp::hypothesis_tags({2, 3}, 3) == Tags{});               // 2h+1 = 7 is excluded
    CHECK(pp::hypothesis_tags({1, 5}, 3) == Tags{});               // 2h+1 = 7 is excluded
    CHECK(pp::hypothesis_tags({1, 5}, 8) == Tags{"ord8-p"});       // 2h+1 = 17, ord = 8
    CHECK(pp::hypothesis_tags({1, 5}, 15) == Tags{"mersenne-p"});  // 2h+1 = 31
    CHECK(pp::hypothesis_tags({1, 5}, 48) == Tags{"ord8-p"});      // 2h+1 = 97
}

TEST_CASE("hypothesis tag for 2h+1 = 21 uses the factor 3") {
    CHECK(pp::hypothesis_tags({1, 5}, 10) == std::vector<std::string>{"mersenne-p"});
}

TEST_CASE("perfect search at degree 20 finds the trivial family plus T1..T9") {
    auto hits = pp::search_perfect(20, PerfectMode::perfect);
    std::set<Poly> expected;
    for (uint32_t n = 1; n <= 3; ++n) expected.insert(pp::trivial_perfect(n));
    for (int i = 0; i < 9; ++i) expected.insert(pp::perfect_list()[i]);
    CHECK(hit_polys(hits) == expected);
    CHECK(hits.size() == 12);
    for (const auto& h : hits) {
        CHECK(h.polynomial.degree() == h.a + h.b +
                  [&] {
                      uint64_t d = 0;
                      for (const auto& p : h.powers) d += (p.pair.a + p.pair.b) * p.h;
                      return d;
                  }());
        CHECK(h.indecomposable);
        CHECK((h.classification.kind == pp::PerfectKind::trivial_perfect ||
               h.classification.kind == pp::PerfectKind::paper_T));
    }
}

TEST_CASE("unitary search at degree 26 finds the U classes and trivial powers") {
    auto hits = pp::search_perfect(26, PerfectMode::unitary);
    std::set<Poly> expected;
    for (Poly t = parse_poly("x^2+x"); t.degree() <= 26; t = pp::square(t)) expected.insert(t);
    for (const Poly& base : pp::unitary_base_list()) {
        for (Poly u : {base, pp::conjugate(base)}) {
            while (u.degree() <= 26) {
                expected.insert(u);
                u = pp::square(u);
            }
        }
    }
    CHECK(hit_polys(hits) == expected);
    CHECK(hits.size() == 24);
    for (const auto& h : hits) {
        auto kind = h.classification.kind;
        CHECK((kind == pp::PerfectKind::trivial_perfect ||
               kind == pp::PerfectKind::other_unitary_perfect ||
               kind == pp::PerfectKind::unitary_paper_U));
        if (kind == pp::PerfectKind::other_unitary_perfect) {
            // only the trivial powers (x^2+x)^(2^n), n >= 1 land here
            auto split = pp::split_exponents(h.polynomial);
            REQUIRE(split.has_value());
            CHECK(split->u == split->v);
        }
    }
}

TEST_CASE("search agrees with the brute-force sweep at small degrees") {
    for (PerfectMode mode : {PerfectMode::perfect, PerfectMode::unitary}) {
        std::set<Poly> expected = sweep(10, mode);
        CHECK(hit_polys(pp::search_perfect(10, mode)) == expected);
        pp::SearchOptions unpruned;
        unpruned.prune = false;
        CHECK(hit_polys(pp::search_perfect(10, mode, unpruned)) == expected);
    }
}

TEST_CASE("search order is deterministic and parallelism preserves it") {
    pp::SearchOptions four;
    four.jobs = 4;
    auto sequential = pp::search_perfect(22, PerfectMode::perfect);
    auto parallel = pp::search_perfect(22, PerfectMode::perfect, four);
    REQUIRE(sequential.size() == parallel.size());
    for (size_t i = 0; i < sequential.size(); ++i) {
        CHECK(sequential[i].polynomial == parallel[i].polynomial);
        CHECK(pp::jsonl_search_hit(sequential[i]) == pp::jsonl_search_hit(parallel[i]));
    }
}

TEST_CASE("search resume skips completed partitions") {
    auto full = pp::search_perfect(14, PerfectMode::perfect);
    REQUIRE(!full.empty());
    uint32_t cut = full[full.size() / 2].partition + 1;
    pp::SearchOptions resume;
    resume.skip_partitions = cut;
    auto rest = pp::search_perfect(14, PerfectMode::perfect, resume);
    std::vector<Poly> expected;
    for (const auto& h : full)
        if (h.partition >= cut) expected.push_back(h.polynomial);
    REQUIRE(rest.size() == expected.size());
    for (size_t i = 0; i < rest.size(); ++i) CHECK(rest[i].polynomial == expected[i]);
}

TEST_CASE("search rejects out-of-cap degrees") {
    CHECK_THROWS_AS(pp::search_perfect(41, PerfectMode::perfect), pp::error);
    CHECK_THROWS_AS(pp::search_special_perfect(41), pp::error);
}

TEST_CASE("special perfect candidates enumerate squares of distinct Mersenne products") {
    auto candidates = pp::special_perfect_candidates(12);
    REQUIRE(!candidates.empty());
    CHECK(candidates[0] == std::vector<MersennePair>{{1, 1}});       // M1^2
    CHECK(candidates[1] == std::vector<MersennePair>{{1, 1}, {1, 2}});  // M1^2 M2^2
    for (const auto& c : candidates) {
        uint64_t degree = 0;
        for (MersennePair m : c) degree += 2 * (m.a + m.b);
        CHECK(degree <= 12);
        CHECK(std::set<MersennePair>(c.begin(), c.end()).size() == c.size());
    }
}

TEST_CASE("special perfect search is empty") {
    CHECK(pp::search_special_perfect(4).empty());
    CHECK(pp::search_special_perfect(30).empty());
}

TEST_CASE("conjecture scan rows") {
    auto rows = pp::conjecture_scan_collect(5, 3);
    // Mersenne primes of degree <= 5: (1,1),(1,2),(2,1),(1,3),(3,1),(2,3),(3,2)
    REQUIRE(rows.size() == 7 * 3);

    auto find = [&](MersennePair m, uint32_t h) -> const pp::SigmaReport& {
        for (const auto& r : rows)
            if (r.m == m && r.h == h) return r;
        REQUIRE(false);
        return rows[0];
    };

    // (M2, 1): sigma(M2^2) = M1 * conj(M3), all Mersenne, the known exception
    const auto& m2h1 = find({1, 2}, 1);
    CHECK(m2h1.all_mersenne);
    CHECK(m2h1.squarefree);
    CHECK(m2h1.known_exception);
    CHECK(m2h1.tags.empty());
    REQUIRE(m2h1.factors.size() == 2);
    CHECK(m2h1.factors[0].prime == parse_poly("x^2+x+1"));
    CHECK(m2h1.factors[1].prime == parse_poly("x^4+x^3+1"));

    // (M3, 1): sigma(M3^2) = M1 * (x^6+x^5+x^4+x^2+1), second factor not Mersenne
    const auto& m3h1 = find({1, 3}, 1);
    CHECK_FALSE(m3h1.all_mersenne);
    REQUIRE(m3h1.factors.size() == 2);
    CHECK(m3h1.factors[1].prime == parse_poly("x^6+x^5+x^4+x^2+1"));
    CHECK_FALSE(m3h1.factors[1].mersenne.has_value());

    // (M2, 3): the non-Mersenne prime x^9+x^7+x^5+x+1 appears
    const auto& m2h3 = find({1, 2}, 3);
    bool found = false;
    for (const auto& f : m2h3.factors)
        if (f.prime == parse_poly("x^9+x^7+x^5+x+1")) {
            found = true;
            CHECK_FALSE(f.mersenne.has_value());
        }
    CHECK(found);
    CHECK_FALSE(m2h3.all_mersenne);
}

TEST_CASE("scan invariants from the covering lemmas") {
    auto rows = pp::conjecture_scan_collect(8, 12);
    for (const auto& row : rows) {
        // tagged rows (minus the known exception) must have a non-Mersenne factor
        if (!row.tags.empty() && !row.known_exception) CHECK_FALSE(row.all_mersenne);
        // all-Mersenne squarefree rows: U splits evenly and is a square
        if (row.all_mersenne && row.squarefree) {
            CHECK(row.u_splits);
            CHECK(row.u_square);
            REQUIRE(row.split.has_value());
            CHECK(row.split->u % 2 == 0);
            CHECK(row.split->v % 2 == 0);
            // ord_p(2) divides every factor degree, for each prime p | 2h+1
            for (const auto& [p, e] : pp::factor_u64(2ull * row.h + 1))
                for (const auto& f : row.factors)
                    CHECK(f.prime.degree() % pp::ord2_mod(p) == 0);
        }
        bool mersenne_flags_consistent = true;
        for (const auto& f : row.factors)
            if (!f.mersenne) mersenne_flags_consistent = false;
        CHECK(row.all_mersenne == mersenne_flags_consistent);
    }
}

TEST_CASE("scan streams are byte-identical across worker counts") {
    std::string one, four;
    pp::SearchOptions opt1, opt4;
    opt4.jobs = 4;
    pp::conjecture_scan(7, 6, opt1, [&](const pp::SigmaReport& r) {
        one += pp::jsonl_sigma_report(r);
        one += '\n';
        return true;
    });
    pp::conjecture_scan(7, 6, opt4, [&](const pp::SigmaReport& r) {
        four += pp::jsonl_sigma_report(r);
        four += '\n';
        return true;
    });
    CHECK(one == four);
    CHECK(!one.empty());
}

TEST_CASE("scan respects caps and stop requests") {
    CHECK_THROWS_AS(pp::conjecture_scan_collect(17, 2), pp::error);
    CHECK_THROWS_AS(pp::conjecture_scan_collect(4, 65), pp::error);
    int seen = 0;
    pp::conjecture_scan(6, 4, {}, [&](const pp::SigmaReport&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("reduction corollary instances for p in {3, 7}") {
    // x^2+x+1 divides sigma(M^(p-1)) iff M != x^2+x+1 and p = 3;
    // the two degree-3 primes divide iff M differs and p = 7.
    Poly m1 = parse_poly("x^2+x+1");
    Poly q1 = parse_poly("x^3+x^2+1");
    Poly q2 = parse_poly("x^3+x+1");
    for (MersennePair m : pp::enumerate_mersenne(8)) {
        Poly M = pp::mersenne_poly(m);
        Poly s2 = pp::sigma_prime_power(M, 2);   // p = 3
        Poly s6 = pp::sigma_prime_power(M, 6);   // p = 7
        CHECK(pp::divrem(s2, m1).rem.is_zero() == (M != m1));
        CHECK_FALSE(pp::divrem(s6, m1).rem.is_zero());
        CHECK(pp::divrem(s6, q1).rem.is_zero() == (M != q1));
        CHECK(pp::divrem(s6, q2).rem.is_zero() == (M != q2));
        CHECK_FALSE(pp::divrem(s2, q1).rem.is_zero());
        CHECK_FALSE(pp::divrem(s2, q2).rem.is_zero());
    }
}
