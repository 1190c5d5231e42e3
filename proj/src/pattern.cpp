#include "vinc/pattern.hpp"

#include <stdexcept>

namespace vinc {

namespace {

void validate_letters(const std::vector<int>& letters) {
    const int k = static_cast<int>(letters.size());
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int v : letters) {
        if (v < 1 || v > k)
            throw std::invalid_argument("pattern letters are not a permutation of {1..k}");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("duplicate pattern letter " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

}  // namespace

VincularPattern::VincularPattern(std::vector<int> letters, std::vector<bool> glued)
    : letters_(std::move(letters)), glued_(std::move(glued)) {
    validate_letters(letters_);
    const std::size_t expected = letters_.size() <= 1 ? 0 : letters_.size() - 1;
    if (glued_.size() != expected)
        throw std::invalid_argument("glue flags must have length k-1");
}

std::vector<VincularPattern::Block> VincularPattern::blocks() const {
    std::vector<Block> out;
    const int k = length();
    int start = 0;
    for (int i = 0; i < k; ++i) {
        bool run_ends = (i == k - 1) || !glued_[static_cast<std::size_t>(i)];
        if (run_ends) {
            out.push_back({start, i - start + 1});
            start = i + 1;
        }
    }
    return out;
}

VincularPattern parse_pattern(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty pattern");
    std::vector<int> letters;
    std::vector<bool> glued;
    bool expect_digit = true;
    for (char c : text) {
        if (c >= '1' && c <= '9') {
            // expect_digit is set exactly when the previous char was a dash
            if (!letters.empty()) glued.push_back(!expect_digit);
            letters.push_back(c - '0');
            expect_digit = false;
        } else if (c == '-') {
            if (expect_digit)
                throw std::invalid_argument("dash must sit between two digits");
            expect_digit = true;
        } else {
            throw std::invalid_argument(std::string("bad character '") + c +
                                        "' in pattern");
        }
    }
    if (expect_digit) throw std::invalid_argument("trailing dash in pattern");
    return VincularPattern(std::move(letters), std::move(glued));
}

std::string render_pattern(const VincularPattern& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0 && !p.glued()[static_cast<std::size_t>(i - 1)]) out += '-';
        out += static_cast<char>('0' + p.letters()[static_cast<std::size_t>(i)]);
    }
    return out;
}

namespace {

PatternSet make_set(std::string name, std::initializer_list<const char*> texts) {
    PatternSet set;
    set.name = std::move(name);
    for (const char* t : texts) set.patterns.push_back(parse_pattern(t));
    return set;
}

}  // namespace

const PatternSet& builtin_set_a() {
    static const PatternSet set =
        make_set("A", {"1-32-4", "1-42-3", "2-31-4", "2-41-3"});
    return set;
}

const PatternSet& builtin_set_b() {
    static const PatternSet set =
        make_set("B", {"1-3-2-4", "1-4-2-3", "2-3-1-4", "2-4-1-3"});
    return set;
}

const PatternSet& builtin_set(std::string_view name) {
    if (name == "A") return builtin_set_a();
    if (name == "B") return builtin_set_b();
    throw std::invalid_argument("unknown built-in pattern set '" + std::string(name) + "'");
}

}  // namespace vinc
