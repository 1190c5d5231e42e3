#pragma once

#include <cstdint>
#include <vector>

#include "vinc/enumerate.hpp"
#include "vinc/permutation.hpp"

namespace vinc {

/// Names the four insertion maps: BEFORE = insert 1 immediately before the
/// new 2, AFTER = immediately after, END_ONE = append 1, END_TWO = swap the
/// new 2 down to 1 and append 2.
enum class MapTag { BEFORE, AFTER, END_ONE, END_TWO };

inline constexpr MapTag kAllMapTags[] = {MapTag::BEFORE, MapTag::AFTER,
                                         MapTag::END_ONE, MapTag::END_TWO};

const char* map_tag_name(MapTag tag);

/// Increment all values, insert 1 immediately before the value 2.
/// Requires a nonempty input.
Permutation f_before(const Permutation& p);

/// Increment all values, insert 1 immediately after the value 2.
/// Requires a nonempty input.
Permutation f_after(const Permutation& p);

/// Increment all values, append 1. Defined on the empty permutation.
Permutation f_end_one(const Permutation& p);

/// Increment all values, replace the new 2 by 1, append 2.
/// Requires a nonempty input.
Permutation f_end_two(const Permutation& p);

Permutation apply_map(MapTag tag, const Permutation& p);

/// The image shapes `p` matches: BEFORE iff 1 immediately precedes 2, AFTER
/// iff 2 immediately precedes 1, END_ONE iff the last value is 1, END_TWO
/// iff the last value is 2. Requires |p| >= 2. May be empty for arbitrary
/// permutations; nonempty whenever p avoids A.
std::vector<MapTag> classify(const Permutation& p);

/// Remove the value 1 and decrement the rest. Left inverse of f_before,
/// f_after and f_end_one on their images. Requires a nonempty input.
Permutation strip_one(const Permutation& p);

/// Remove the value 1, move the trailing 2 into its old slot, decrement the
/// rest. Left inverse of f_end_two. Requires |p| >= 2 and last value 2.
Permutation strip_one_swap_two(const Permutation& p);

/// Remove the values 1 and 2, decrement the rest by 2. Requires |p| >= 2.
Permutation g_reduce(const Permutation& p);

/// The raw four-image multiset of `prev.members`, in tag order then input
/// order, duplicates preserved. Exposed so the double-counting identity can
/// be tested directly.
std::vector<Permutation> four_images(const AvoiderLevel& prev);

/// Sorted, deduplicated union of the four images of Av_{n-1}(B); equals
/// Av_n(B) when `prev` is exactly Av_{n-1}(B).
AvoiderLevel generate_level(const AvoiderLevel& prev);

/// The members of `level` whose last two values are {1,2} in either order.
/// Requires level.n >= 2. These are exactly the permutations produced by two
/// of the four maps.
std::vector<Permutation> double_counted(const AvoiderLevel& level);

/// |Av_n(B)| for n = 1..max_n via iterated generation, never brute force.
/// Uses a packed 4-bit-per-value encoding internally, so max_n <= 16.
std::vector<std::uint64_t> generated_level_sizes(int max_n);

}  // namespace vinc
