#pragma once

#include <cstdint>
#include <iosfwd>

#include "cqg/instances.hpp"
#include "cqg/report.hpp"

namespace cqg {

/// Runs every registered invariant check of all modules against the instance
/// and returns one record per check, sorted by id. Deterministic for a given
/// (instance, seed, tolerance): randomized checks draw 100 elements with
/// coefficients uniform in the complex unit square over the full window
/// support, seeded per check. Checks that need a missing capability are
/// recorded as skipped with a reason. Expected-failure checks (e.g. plain
/// characters are not central off the Kac case) pass when the violation is
/// detected.
VerificationReport run_suite(const Instance& inst, std::uint64_t seed, double tolerance);

/// Human-readable one-line-per-check table.
void print_report(const VerificationReport& r, std::ostream& os);

}  // namespace cqg
