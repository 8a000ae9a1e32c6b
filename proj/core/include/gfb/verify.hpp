#pragma once

// Named structural checks over the tilings. Each check carries the statement
// it verifies so a report reads as a traceability table.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gfb/lattice.hpp"

namespace gfb {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus status);

struct CheckReport {
    std::string name;
    std::string reference;   ///< the statement being checked
    std::string parameters;  ///< depth range / sizes actually used
    CheckStatus status = CheckStatus::Skipped;
    std::uint64_t cases = 0;  ///< number of objects examined
    std::string witness;      ///< first counterexample when status == Fail
};

/// Every registered check name, in report order.
const std::vector<std::string>& check_names();

/// Runs the selected checks (empty selection or {"all"} means every check).
/// Checks that do not apply to `algo` come back Skipped. Report order is
/// registry order. Throws InvalidInput on an unknown name.
std::vector<CheckReport> run_checks(Algorithm algo, int depth_limit,
                                    std::span<const std::string> selection = {}, int jobs = 1);

/// Interiors of the two projected triangles are disjoint (separating edge test).
bool interiors_disjoint(const Basis& a, const Basis& b);

} // namespace gfb
