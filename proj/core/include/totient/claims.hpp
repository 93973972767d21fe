#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "totient/arithmetic.hpp"

namespace totient {

struct ClaimResult {
    std::string id;      // "C1" .. "C9"
    std::string title;
    bool pass = false;
    std::string detail;  // counts, or the first mismatch
};

/// The nine reference checks behind `totient verify`, desk-scale
/// (minutes, not hours). Each runs the public API end to end and reports
/// pass/fail with a one-line detail.
std::vector<ClaimResult> run_reference_checks(const Caps& caps = default_caps());

/// The 17 primes below 1000 that the v4 rule rejects.
extern const std::array<std::uint64_t, 17> expected_exceptions_below_1000;

/// Exact-set comparison against expected_exceptions_below_1000; factored
/// out so tests can feed it deliberately wrong lists.
bool exception_list_matches(const std::vector<std::uint64_t>& got);

}  // namespace totient
