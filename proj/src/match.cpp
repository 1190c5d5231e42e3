#include "vinc/match.hpp"

#include <stdexcept>

namespace vinc {

namespace {

// Places maximal glued blocks left to right. `positions` holds the host
// positions chosen for the first `filled` pattern letters; relative order
// against every earlier letter is checked as each new letter is placed, so
// dead placements are pruned before recursing.
class BlockMatcher {
public:
    BlockMatcher(const Permutation& host, const VincularPattern& pattern,
                 bool first_only)
        : host_(host),
          pattern_(pattern),
          blocks_(pattern.blocks()),
          first_only_(first_only) {
        positions_.resize(static_cast<std::size_t>(pattern.length()));
    }

    std::vector<Occurrence> run() {
        if (pattern_.length() == 0) {
            results_.push_back(Occurrence{});
            return std::move(results_);
        }
        place_block(0, 1, 0);
        return std::move(results_);
    }

private:
    // Returns true when the search should stop (first_only_ satisfied).
    bool place_block(std::size_t block_idx, int min_start, int filled) {
        if (block_idx == blocks_.size()) {
            results_.push_back(Occurrence{std::vector<int>(
                positions_.begin(), positions_.begin() + filled)});
            return first_only_;
        }
        const auto& block = blocks_[block_idx];
        const int max_start = host_.size() - remaining_length(block_idx) + 1;
        for (int start = min_start; start <= max_start; ++start) {
            int extended = filled;
            bool ok = true;
            for (int off = 0; off < block.length; ++off) {
                const int pos = start + off;
                if (!consistent(extended, pos)) {
                    ok = false;
                    break;
                }
                positions_[static_cast<std::size_t>(extended)] = pos;
                ++extended;
            }
            if (ok && place_block(block_idx + 1, start + block.length, extended))
                return true;
        }
        return false;
    }

    // Minimum host span still needed from this block onward. A dash allows
    // (but does not require) a gap, so the minimum is the block lengths alone.
    int remaining_length(std::size_t from) const {
        int len = 0;
        for (std::size_t i = from; i < blocks_.size(); ++i) len += blocks_[i].length;
        return len;
    }

    bool consistent(int filled, int pos) const {
        const int v = host_.at(pos);
        const int letter = pattern_.letters()[static_cast<std::size_t>(filled)];
        for (int q = 0; q < filled; ++q) {
            const int qv = host_.at(positions_[static_cast<std::size_t>(q)]);
            const int qletter = pattern_.letters()[static_cast<std::size_t>(q)];
            if ((letter < qletter) != (v < qv)) return false;
        }
        return true;
    }

    const Permutation& host_;
    const VincularPattern& pattern_;
    std::vector<VincularPattern::Block> blocks_;
    bool first_only_;
    std::vector<int> positions_;
    std::vector<Occurrence> results_;
};

void require_quadruple(const Permutation& host, const Occurrence& occ) {
    if (occ.positions.size() != 4)
        throw std::invalid_argument("characterization requires a length-4 occurrence");
    int prev = 0;
    for (int pos : occ.positions) {
        if (pos < 1 || pos > host.size())
            throw std::out_of_range("occurrence position " + std::to_string(pos) +
                                    " out of range");
        if (pos <= prev)
            throw std::invalid_argument("occurrence positions must strictly increase");
        prev = pos;
    }
}

}  // namespace

std::vector<Occurrence> find_occurrences(const Permutation& host,
                                         const VincularPattern& pattern) {
    return BlockMatcher(host, pattern, /*first_only=*/false).run();
}

bool contains(const Permutation& host, const VincularPattern& pattern) {
    return !BlockMatcher(host, pattern, /*first_only=*/true).run().empty();
}

bool avoids_all(const Permutation& host, const PatternSet& set) {
    for (const auto& p : set.patterns)
        if (contains(host, p)) return false;
    return true;
}

bool check_b_characterization(const Permutation& host, const Occurrence& occ) {
    require_quadruple(host, occ);
    const int a = host.at(occ.positions[0]);
    const int b = host.at(occ.positions[1]);
    const int c = host.at(occ.positions[2]);
    const int d = host.at(occ.positions[3]);
    return std::max(a, c) < std::min(b, d);
}

bool check_a_characterization(const Permutation& host, const Occurrence& occ) {
    require_quadruple(host, occ);
    return occ.positions[2] == occ.positions[1] + 1 &&
           check_b_characterization(host, occ);
}

}  // namespace vinc
