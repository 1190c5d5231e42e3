#include "vinc/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace vinc {

namespace {

void check_bounds(int n, int cutoff) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > cutoff)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " exceeds the enumeration cutoff " +
                                    std::to_string(cutoff) +
                                    "; raise the cutoff to override");
}

// Visits, in lexicographic order, every length-n permutation starting with
// `first` (or every permutation when first == 0, i.e. n == 0).
template <typename Fn>
void scan_with_first(int n, int first, Fn&& fn) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    std::vector<int> values(static_cast<std::size_t>(n));
    do {
        std::size_t i = 0;
        if (first > 0) values[i++] = first;
        for (int v : rest) values[i++] = v;
        fn(Permutation(std::vector<int>(values)));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n == 0) {
        fn(Permutation{});
        return;
    }
    for (int first = 1; first <= n; ++first) scan_with_first(n, first, fn);
}

// Partitions the lexicographic scan by first element. Worker w handles the
// first elements congruent to w mod jobs; buckets are merged in first-element
// order, so the output equals the single-threaded scan.
template <typename PerPerm>
static void parallel_scan(int n, int jobs, PerPerm per_perm_for_bucket) {
    jobs = std::clamp(jobs, 1, n);
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([=] {
            for (int first = w + 1; first <= n; first += jobs)
                scan_with_first(n, first, per_perm_for_bucket(first));
        });
    }
    for (auto& t : threads) t.join();
}

AvoiderLevel enumerate_avoiders(int n, const PatternSet& set, int cutoff, int jobs) {
    check_bounds(n, cutoff);
    AvoiderLevel level;
    level.n = n;
    level.set_name = set.name;
    if (n == 0) {
        level.members.push_back(Permutation{});  // vacuous avoider
        return level;
    }
    std::vector<std::vector<Permutation>> buckets(static_cast<std::size_t>(n) + 1);
    if (jobs <= 1) {
        for (int first = 1; first <= n; ++first)
            scan_with_first(n, first, [&](const Permutation& p) {
                if (avoids_all(p, set))
                    buckets[static_cast<std::size_t>(first)].push_back(p);
            });
    } else {
        parallel_scan(n, jobs, [&](int first) {
            auto* bucket = &buckets[static_cast<std::size_t>(first)];
            return [bucket, &set](const Permutation& p) {
                if (avoids_all(p, set)) bucket->push_back(p);
            };
        });
    }
    for (auto& bucket : buckets)
        level.members.insert(level.members.end(),
                             std::make_move_iterator(bucket.begin()),
                             std::make_move_iterator(bucket.end()));
    return level;
}

std::uint64_t count_avoiders(int n, const PatternSet& set, int cutoff, int jobs) {
    check_bounds(n, cutoff);
    if (n == 0) return 1;
    std::vector<std::uint64_t> per_first(static_cast<std::size_t>(n) + 1, 0);
    if (jobs <= 1) {
        for (int first = 1; first <= n; ++first)
            scan_with_first(n, first, [&](const Permutation& p) {
                if (avoids_all(p, set)) ++per_first[static_cast<std::size_t>(first)];
            });
    } else {
        parallel_scan(n, jobs, [&](int first) {
            auto* slot = &per_first[static_cast<std::size_t>(first)];
            return [slot, &set](const Permutation& p) {
                if (avoids_all(p, set)) ++*slot;
            };
        });
    }
    return std::accumulate(per_first.begin(), per_first.end(), std::uint64_t{0});
}

}  // namespace vinc
