#pragma once

#include <optional>

#include "vinc/match.hpp"
#include "vinc/permutation.hpp"

namespace vinc {

/// Result of turning a B-occurrence (a,b,c,d) into an A-occurrence
/// (a, e, e+1, d), where e is the largest position below c whose value
/// exceeds max(h[a], h[c]).
struct WitnessResult {
    int e = 0;                // 1-based pivot position, b <= e < c
    Occurrence occurrence;    // (a, e, e+1, d); passes the A-characterization
};

/// Validates that `occ` satisfies the B-characterization (throwing
/// std::invalid_argument otherwise), then produces the A-occurrence witness.
WitnessResult transform_occurrence(const Permutation& host, const Occurrence& occ);

/// Lexicographically first position quadruple satisfying the
/// B-characterization, or nullopt when host avoids B.
std::optional<Occurrence> first_b_occurrence(const Permutation& host);

}  // namespace vinc
