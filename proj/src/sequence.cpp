#include "vinc/sequence.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace vinc {

SequenceTable recurrence_terms(int count, OffsetMode mode) {
    if (count < 1) throw std::invalid_argument("count must be positive");
    SequenceTable table;
    table.offset = mode == OffsetMode::paper ? 1 : 0;
    table.terms.reserve(static_cast<std::size_t>(count));
    table.terms.push_back(1);
    if (count >= 2) table.terms.push_back(2);
    for (int i = 2; i < count; ++i)
        table.terms.push_back(4 * table.terms[i - 1] - 2 * table.terms[i - 2]);
    return table;
}

SequenceTable parse_bfile(std::istream& in) {
    SequenceTable table;
    bool have_offset = false;
    long long expected_index = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        long long index;
        std::string value_text;
        std::string extra;
        if (!(fields >> index >> value_text) || (fields >> extra))
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": expected 'index value'");
        BigInt value;
        try {
            value = BigInt(value_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": bad value '" + value_text + "'");
        }
        if (value < 0)
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": negative value");
        if (!have_offset) {
            table.offset = index;
            expected_index = index;
            have_offset = true;
        }
        if (index != expected_index)
            throw std::invalid_argument("b-file line " + std::to_string(lineno) +
                                        ": index " + std::to_string(index) +
                                        " breaks consecutiveness (expected " +
                                        std::to_string(expected_index) + ")");
        table.terms.push_back(std::move(value));
        ++expected_index;
    }
    if (table.terms.empty())
        throw std::invalid_argument("b-file contains no data lines");
    return table;
}

ComparisonReport compare_tables(const SequenceTable& computed,
                                const SequenceTable& reference) {
    const long long lo = std::max(computed.first_index(), reference.first_index());
    const long long hi = std::min(computed.last_index(), reference.last_index());
    if (lo > hi)
        throw std::invalid_argument("sequence tables have disjoint index ranges");
    ComparisonReport report;
    report.overlap_first = lo;
    report.overlap_last = hi;
    for (long long i = lo; i <= hi; ++i)
        if (computed.at_index(i) != reference.at_index(i))
            report.mismatched_indices.push_back(i);
    return report;
}

}  // namespace vinc
