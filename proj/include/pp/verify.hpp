#pragma once

#include <span>
#include <string>
#include <vector>

#include "pp/poly.hpp"

namespace pp {

enum class CheckStatus { pass, fail, discrepancy };

const char* check_status_name(CheckStatus status) noexcept;

struct CheckResult {
    std::string check_id;  // stable across releases
    CheckStatus status = CheckStatus::fail;
    std::string expected;
    std::string actual;
    std::string anchor;  // which published statement the check replays
};

/// Replays the displayed identities, factorizations and lemma instances
/// and returns one row per check, ordered by check_id. Never aborts
/// early; "discrepancy" marks a computed truth that contradicts a
/// printed display (the sigma(M2^2) row is the one expected case).
std::vector<CheckResult> run_paper_suite(uint32_t jobs = 1);

/// Building block for the perfect-T row, parameterized so corrupted
/// inputs are testable.
CheckResult check_perfect_list(std::span<const Poly> list);

}  // namespace pp
