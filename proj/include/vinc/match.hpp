#pragma once

#include <compare>
#include <vector>

#include "vinc/pattern.hpp"
#include "vinc/permutation.hpp"

namespace vinc {

/// A strictly increasing tuple of 1-based positions in a host permutation.
struct Occurrence {
    std::vector<int> positions;

    auto operator<=>(const Occurrence&) const = default;
};

/// All occurrences of `pattern` in `host`: position tuples that are strictly
/// increasing, adjacent wherever the pattern glues consecutive letters, and
/// whose host values are order-isomorphic to the pattern letters. Sorted
/// lexicographically by position tuple.
std::vector<Occurrence> find_occurrences(const Permutation& host,
                                         const VincularPattern& pattern);

/// True iff `host` contains at least one occurrence of `pattern`.
/// Short-circuits; agrees with find_occurrences being nonempty.
bool contains(const Permutation& host, const VincularPattern& pattern);

/// True iff `host` contains no occurrence of any pattern in `set`.
bool avoids_all(const Permutation& host, const PatternSet& set);

/// The closed-form test for "occ is an occurrence of some pattern in A":
/// positions a < b < c < d with c = b+1 and max(h[a],h[c]) < min(h[b],h[d]).
/// `occ` must have length 4 with valid, strictly increasing positions;
/// throws std::out_of_range / std::invalid_argument otherwise.
bool check_a_characterization(const Permutation& host, const Occurrence& occ);

/// Same without the adjacency condition: max(h[a],h[c]) < min(h[b],h[d])
/// characterizes occurrences of patterns in B.
bool check_b_characterization(const Permutation& host, const Occurrence& occ);

}  // namespace vinc
