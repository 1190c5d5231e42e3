#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vinc/match.hpp"
#include "vinc/pattern.hpp"
#include "vinc/permutation.hpp"

namespace vinc {

/// One level of an avoidance class: the sorted members of Av_n(set).
struct AvoiderLevel {
    int n = 0;
    std::string set_name;
    std::vector<Permutation> members;  // lexicographically sorted, no dups
};

/// Guard against factorial blowup; enumerate/count refuse n above this
/// unless the caller raises the cutoff explicitly.
inline constexpr int kDefaultCutoff = 10;

/// All length-n permutations avoiding every pattern in `set`, sorted
/// lexicographically. `jobs` > 1 partitions the scan by first element;
/// the result is identical to the single-threaded one.
/// Throws std::invalid_argument when n < 0 or n > cutoff.
AvoiderLevel enumerate_avoiders(int n, const PatternSet& set,
                                int cutoff = kDefaultCutoff, int jobs = 1);

/// |Av_n(set)| without materializing the members.
std::uint64_t count_avoiders(int n, const PatternSet& set,
                             int cutoff = kDefaultCutoff, int jobs = 1);

/// Visits all length-n permutations in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace vinc
