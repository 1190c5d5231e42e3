#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vinc {

/// A permutation of {1..n} in one-line notation. Values and positions are
/// 1-based in every external representation; n = 0 (the empty permutation)
/// is allowed.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a permutation of {1..n}.
    /// Throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// Value at 1-based position `pos`. No bounds check.
    int at(int pos) const { return values_[static_cast<std::size_t>(pos) - 1]; }

    /// 1-based position of `value`. O(n).
    int position_of(int value) const;

    const std::vector<int>& values() const { return values_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// Parses either a compact digit string (only valid for n <= 9, e.g. "31542")
/// or comma-separated integers ("10,2,1,3,4,5,6,7,8,9"). The empty string is
/// the empty permutation. Throws std::invalid_argument on malformed input or
/// when the values are not a permutation of {1..n}.
Permutation parse_permutation(std::string_view text);

/// Canonical comma-separated form; inverse of parse_permutation.
std::string render_permutation(const Permutation& p);

/// Compact digit form, valid only for n <= 9.
std::string render_permutation_compact(const Permutation& p);

}  // namespace vinc
