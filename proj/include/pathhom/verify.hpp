#pragma once

#include <string>
#include <vector>

namespace pathhom {

struct ClaimResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Small-instance reproduction checks: suspensions, the 8-vertex flow
/// graph, the layered-tower Betti formula, family counts and the
/// 4/5/6-vertex progenitor results.
std::vector<ClaimResult> verify_paper_suite();

/// Exhaustive <= 4-vertex and seeded random <= 8-vertex agreement between
/// the sparse pipeline and the dense oracle.
std::vector<ClaimResult> verify_oracle_suite();

/// Series-composition additivity of reduced Betti numbers on seeded
/// random 2-flow-graph pairs.
std::vector<ClaimResult> verify_series_suite(int n_pairs = 50);

bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace pathhom
