#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "pp/cache.hpp"
#include "pp/jsonl.hpp"
#include "pp/search.hpp"
#include "pp/text.hpp"
#include "oracles.hpp"

using pp::Poly;
using pp::parse_poly;

namespace {

struct TempFile {
    std::string path;
    TempFile() {
        path = (std::filesystem::temp_directory_path() /
                ("pp_cache_" + std::to_string(std::random_device{}()) + ".jsonl"))
                   .string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cache round-trip") {
    TempFile tmp;
    Poly p = parse_poly("x^6+x^3+x^2+x+1");
    {
        pp::FactorCache cache(tmp.path);
        CHECK(cache.size() == 0);
        CHECK_FALSE(cache.get(p));
        cache.put(p, pp::factorize(p));
        CHECK(cache.size() == 1);
    }
    pp::FactorCache reloaded(tmp.path);
    CHECK(reloaded.warnings().empty());
    auto hit = reloaded.get(p);
    REQUIRE(hit.has_value());
    CHECK(*hit == pp::factorize(p));
}

TEST_CASE("cache never changes results, only work") {
    TempFile tmp;
    pp::FactorCache cache(tmp.path);
    std::mt19937_64 rng(51);
    for (int i = 0; i < 30; ++i) {
        Poly p = oracle::random_nonzero(rng, 40);
        auto cold = pp::factorize_cached(p, pp::kDefaultFactorSeed, &cache);
        auto warm = pp::factorize_cached(p, pp::kDefaultFactorSeed, &cache);
        CHECK(cold == pp::factorize(p));
        CHECK(warm == cold);
    }
}

TEST_CASE("corrupt and stale cache lines are bypassed with warnings") {
    TempFile tmp;
    Poly good = parse_poly("x^5+x^4+1");
    {
        pp::FactorCache cache(tmp.path);
        cache.put(good, pp::factorize(good));
    }
    {
        std::ofstream out(tmp.path, std::ios::app);
        out << "not json at all\n";
        out << R"({"version":0,"key":"0x7","factors":[["0x7",1]]})" << "\n";     // stale version
        out << R"({"version":1,"key":"0x7","factors":[["0x6",1]]})" << "\n";     // reducible factor
        out << R"({"version":1,"key":"0x7","factors":[["0xb",1]]})" << "\n";     // wrong product
    }
    pp::FactorCache cache(tmp.path);
    CHECK(cache.warnings().size() == 4);
    CHECK(cache.size() == 1);
    CHECK(cache.get(good).has_value());
    CHECK_FALSE(cache.get(parse_poly("0x7")).has_value());
    // and results still come out right through the read-through helper
    CHECK(pp::factorize_cached(parse_poly("0x7"), pp::kDefaultFactorSeed, &cache) ==
          pp::factorize(parse_poly("0x7")));
}

TEST_CASE("scan output is identical with and without a cache") {
    TempFile tmp;
    pp::SearchOptions with_cache;
    pp::FactorCache cache(tmp.path);
    with_cache.cache = &cache;

    std::string plain, cached, rewarmed;
    pp::conjecture_scan(6, 5, {}, [&](const pp::SigmaReport& r) {
        plain += pp::jsonl_sigma_report(r) + "\n";
        return true;
    });
    pp::conjecture_scan(6, 5, with_cache, [&](const pp::SigmaReport& r) {
        cached += pp::jsonl_sigma_report(r) + "\n";
        return true;
    });
    pp::conjecture_scan(6, 5, with_cache, [&](const pp::SigmaReport& r) {
        rewarmed += pp::jsonl_sigma_report(r) + "\n";  // every row now a cache hit
        return true;
    });
    CHECK(plain == cached);
    CHECK(plain == rewarmed);
    CHECK(cache.size() > 0);
}

TEST_CASE("jsonl schemas") {
    CHECK(pp::jsonl_mersenne_row({1, 2}) == R"({"a":1,"b":2,"degree":3,"poly_hex":"0xb"})");

    auto rows = pp::conjecture_scan_collect(4, 3);
    const pp::SigmaReport* m2h3 = nullptr;
    for (const auto& r : rows)
        if (r.m == pp::MersennePair{1, 2} && r.h == 3) m2h3 = &r;
    REQUIRE(m2h3);
    std::string line = pp::jsonl_sigma_report(*m2h3);
    CHECK(line.substr(0, 49) == R"({"a":1,"b":2,"h":3,"squarefree":true,"all_mersenn)");
    CHECK(line.find("\"all_mersenne\":false") != std::string::npos);
    CHECK(line.find("\"0x2a3\"") != std::string::npos);

    auto hits = pp::search_perfect(6, pp::PerfectMode::perfect);
    REQUIRE(!hits.empty());
    std::string hit_line = pp::jsonl_search_hit(hits[0]);
    CHECK(hit_line.find("\"mode\":\"perfect\"") != std::string::npos);
    CHECK(hit_line.find("\"poly_hex\":") != std::string::npos);
}

TEST_CASE("factorization display") {
    Poly p = parse_poly("x^6+x^3+x^2+x+1");
    CHECK(pp::display_factorization(pp::factorize(p)) == "(x^2+x+1)\xc2\xb7(x^4+x^3+1)");
    Poly sq = parse_poly("x^2*(x+1)");
    CHECK(pp::display_factorization(pp::factorize(sq)) == "(x)^2\xc2\xb7(x+1)");
}
