#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vinc {

/// A vincular (dashed) pattern: a permutation of {1..k} together with glue
/// flags between consecutive letters. glued[i] == true means there is no dash
/// between letters i and i+1, so the matched positions must be adjacent in
/// the host.
class VincularPattern {
public:
    VincularPattern() = default;

    /// Throws std::invalid_argument if `letters` is not a permutation of
    /// {1..k} or `glued` does not have length k-1 (empty when k <= 1).
    VincularPattern(std::vector<int> letters, std::vector<bool> glued);

    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }
    const std::vector<bool>& glued() const { return glued_; }

    /// Maximal glued runs as (start letter index, length) pairs, 0-based,
    /// in left-to-right order.
    struct Block {
        int start;
        int length;
    };
    std::vector<Block> blocks() const;

    auto operator<=>(const VincularPattern&) const = default;

private:
    std::vector<int> letters_;
    std::vector<bool> glued_;
};

/// Parses the dashed notation: digits 1-9, optionally separated by single
/// dashes ("1-32-4"). Throws std::invalid_argument for consecutive dashes,
/// leading/trailing dashes, non-digit characters, or letters that are not a
/// permutation of {1..k}.
VincularPattern parse_pattern(std::string_view text);

/// Canonical dashed form; inverse of parse_pattern.
std::string render_pattern(const VincularPattern& p);

/// A named, nonempty collection of vincular patterns.
struct PatternSet {
    std::string name;
    std::vector<VincularPattern> patterns;
};

/// The set A = {1-32-4, 1-42-3, 2-31-4, 2-41-3}.
const PatternSet& builtin_set_a();

/// The set B = {1-3-2-4, 1-4-2-3, 2-3-1-4, 2-4-1-3}.
const PatternSet& builtin_set_b();

/// Looks up "A" or "B"; throws std::invalid_argument for anything else.
const PatternSet& builtin_set(std::string_view name);

}  // namespace vinc
