#include "vinc/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace vinc {

namespace {

void validate_values(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : values) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range for length " + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

int parse_int_token(std::string_view tok) {
    if (tok.empty()) throw std::invalid_argument("empty token in permutation");
    int out = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad integer token '" + std::string(tok) + "'");
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate_values(values_);
}

int Permutation::position_of(int value) const {
    auto it = std::find(values_.begin(), values_.end(), value);
    if (it == values_.end())
        throw std::out_of_range("value " + std::to_string(value) + " not present");
    return static_cast<int>(it - values_.begin()) + 1;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            std::string_view tok = text.substr(
                start, comma == std::string_view::npos ? comma : comma - start);
            values.push_back(parse_int_token(tok));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (!text.empty()) {
        // Compact digit grammar, only unambiguous for n <= 9.
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(
                    std::string("bad character '") + c + "' in compact permutation");
            values.push_back(c - '0');
        }
        if (values.size() > 9)
            throw std::invalid_argument("compact grammar only covers n <= 9; use commas");
    }
    return Permutation(std::move(values));
}

std::string render_permutation(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.values().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.values()[i]);
    }
    return out;
}

std::string render_permutation_compact(const Permutation& p) {
    if (p.size() > 9)
        throw std::invalid_argument("compact form undefined for n > 9");
    std::string out;
    for (int v : p.values()) out += static_cast<char>('0' + v);
    return out;
}

}  // namespace vinc
