#pragma once

#include <string>

#include "pp/mersenne.hpp"
#include "pp/search.hpp"
#include "pp/verify.hpp"

namespace pp {

/// Canonical one-line JSON encodings: fixed key order, polynomials as
/// hex strings, so identical inputs always serialize byte-identically.
std::string jsonl_mersenne_row(MersennePair m);
std::string jsonl_search_hit(const SearchHit& hit);
std::string jsonl_sigma_report(const SigmaReport& report);
std::string jsonl_check_result(const CheckResult& row);
std::string jsonl_factorization(const Poly& p, const Factorization& f);

/// Short human-readable companions for table output.
std::string display_mersenne_row(MersennePair m);
std::string display_search_hit(const SearchHit& hit);
std::string display_sigma_report(const SigmaReport& report);
std::string display_check_result(const CheckResult& row);

/// "(f1)·(f2)^e·..." with factors in canonical order.
std::string display_factorization(const Factorization& f);

}  // namespace pp
