#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vinc {

using BigInt = boost::multiprecision::cpp_int;

/// Indexed arbitrary-precision integer sequence: terms[i] is the value at
/// index offset + i.
struct SequenceTable {
    long long offset = 0;
    std::vector<BigInt> terms;

    long long first_index() const { return offset; }
    long long last_index() const {
        return offset + static_cast<long long>(terms.size()) - 1;
    }
    const BigInt& at_index(long long idx) const {
        return terms[static_cast<std::size_t>(idx - offset)];
    }
};

/// Indexing convention for the recurrence a_n = 4a_{n-1} - 2a_{n-2}:
/// `paper` starts at a_1 = 1, a_2 = 2; `oeis` holds the same values shifted
/// down one index, a_0 = 1, a_1 = 2.
enum class OffsetMode { paper, oeis };

/// The first `count` terms of the recurrence in the chosen convention.
SequenceTable recurrence_terms(int count, OffsetMode mode);

/// Parses an OEIS b-file: "index value" lines, '#' comments and blank lines
/// ignored. Indices must be consecutive and values nonnegative; throws
/// std::invalid_argument otherwise (or when no data lines are present).
SequenceTable parse_bfile(std::istream& in);

/// Index-by-index comparison over the overlapping range of two tables.
struct ComparisonReport {
    long long overlap_first = 0;
    long long overlap_last = 0;
    std::vector<long long> mismatched_indices;

    bool all_match() const { return mismatched_indices.empty(); }
    std::optional<long long> first_mismatch() const {
        if (mismatched_indices.empty()) return std::nullopt;
        return mismatched_indices.front();
    }
};

/// Throws std::invalid_argument when the index ranges are disjoint.
ComparisonReport compare_tables(const SequenceTable& computed,
                                const SequenceTable& reference);

}  // namespace vinc
