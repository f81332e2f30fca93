#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pp/cache.hpp"
#include "pp/divisor.hpp"
#include "pp/mersenne.hpp"

namespace pp {

inline constexpr uint32_t kMaxSearchDegree = 40;
inline constexpr uint32_t kMaxScanDegree = 16;
inline constexpr uint32_t kMaxScanH = 64;

struct SearchOptions {
    uint32_t jobs = 1;
    uint64_t seed = kDefaultFactorSeed;
    bool prune = true;           // unpruned mode exists for oracle comparison
    FactorCache* cache = nullptr;
    uint32_t skip_partitions = 0;  // resume support: partitions already done
};

struct PrimePower {
    MersennePair pair;
    uint32_t h = 1;
    bool operator==(const PrimePower&) const = default;
};

struct SearchHit {
    Poly polynomial;
    uint64_t a = 0;
    uint64_t b = 0;
    std::vector<PrimePower> powers;  // ascending by (degree, pair)
    PerfectMode mode = PerfectMode::perfect;
    PerfectClass classification;
    bool indecomposable = false;
    uint32_t partition = 0;
};

struct SigmaFactor {
    Poly prime;
    uint32_t multiplicity = 1;
    std::optional<MersennePair> mersenne;
};

/// Analysis record for one (M, h): the factorization of sigma(M^(2h)),
/// per-factor Mersenne recovery, and the shape of U = sigma(sigma(M^(2h))).
struct SigmaReport {
    MersennePair m;
    uint32_t h = 0;
    std::vector<SigmaFactor> factors;
    bool squarefree = false;
    bool all_mersenne = false;
    bool u_splits = false;
    bool u_square = false;
    std::optional<SplitExponents> split;
    std::vector<std::string> tags;  // hypothesis clauses covering (M, h)
    bool known_exception = false;   // (M2 or its conjugate, h = 1)
    uint64_t seed = 0;
    uint32_t partition = 0;
};

/// Hypothesis clauses covering (M, h); empty means uncovered.
///   "m1-m3-family"    M in {M1, M3, conj(M3)}
///   "m2-family-h2"    M in {M2, conj(M2)} and h >= 2
///   "mersenne-p"      M outside the five and some prime p | 2h+1 is a
///                     Mersenne number other than 7
///   "ord8-p"          M outside the five and some prime p | 2h+1 has
///                     8 | ord_p(2)
std::vector<std::string> hypothesis_tags(MersennePair m, uint32_t h);

/// Exhaustive signature search: all A = x^a (x+1)^b prod P_i^(h_i) with
/// Mersenne primes P_i, a+b >= 1, deg(A) <= max_degree, kept when A is
/// perfect (resp. unitary perfect). Deterministic order, lexicographic
/// in (a, b, prime powers). Partitioned by (a, b) for parallel runs.
std::vector<SearchHit> search_perfect(uint32_t max_degree, PerfectMode mode,
                                      const SearchOptions& options = {});

/// Candidates are squares of products of distinct Mersenne primes.
std::vector<SearchHit> search_special_perfect(uint32_t max_degree,
                                              const SearchOptions& options = {});

/// The candidate signatures search_special_perfect filters (exposed so
/// enumeration completeness is testable).
std::vector<std::vector<MersennePair>> special_perfect_candidates(uint32_t max_degree);

/// One report per Mersenne prime M of degree <= max_m_degree and each
/// 1 <= h <= max_h. Partitioned by M; reports stream in deterministic
/// order regardless of worker count. Returning false from emit stops
/// the scan early.
void conjecture_scan(uint32_t max_m_degree, uint32_t max_h, const SearchOptions& options,
                     const std::function<bool(const SigmaReport&)>& emit);

std::vector<SigmaReport> conjecture_scan_collect(uint32_t max_m_degree, uint32_t max_h,
                                                 const SearchOptions& options = {});

}  // namespace pp
