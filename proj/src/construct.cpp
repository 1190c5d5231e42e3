#include "vinc/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "vinc/match.hpp"

namespace vinc {

namespace {

std::vector<int> incremented(const Permutation& p) {
    std::vector<int> out;
    out.reserve(p.values().size() + 1);
    for (int v : p.values()) out.push_back(v + 1);
    return out;
}

void require_nonempty(const Permutation& p, const char* who) {
    if (p.empty())
        throw std::invalid_argument(std::string(who) + " requires a nonempty permutation");
}

}  // namespace

const char* map_tag_name(MapTag tag) {
    switch (tag) {
        case MapTag::BEFORE: return "before";
        case MapTag::AFTER: return "after";
        case MapTag::END_ONE: return "end-one";
        case MapTag::END_TWO: return "end-two";
    }
    return "?";
}

Permutation f_before(const Permutation& p) {
    require_nonempty(p, "f_before");
    std::vector<int> out = incremented(p);
    auto two = std::find(out.begin(), out.end(), 2);
    out.insert(two, 1);
    return Permutation(std::move(out));
}

Permutation f_after(const Permutation& p) {
    require_nonempty(p, "f_after");
    std::vector<int> out = incremented(p);
    auto two = std::find(out.begin(), out.end(), 2);
    out.insert(two + 1, 1);
    return Permutation(std::move(out));
}

Permutation f_end_one(const Permutation& p) {
    std::vector<int> out = incremented(p);
    out.push_back(1);
    return Permutation(std::move(out));
}

Permutation f_end_two(const Permutation& p) {
    require_nonempty(p, "f_end_two");
    std::vector<int> out = incremented(p);
    *std::find(out.begin(), out.end(), 2) = 1;
    out.push_back(2);
    return Permutation(std::move(out));
}

Permutation apply_map(MapTag tag, const Permutation& p) {
    switch (tag) {
        case MapTag::BEFORE: return f_before(p);
        case MapTag::AFTER: return f_after(p);
        case MapTag::END_ONE: return f_end_one(p);
        case MapTag::END_TWO: return f_end_two(p);
    }
    throw std::invalid_argument("bad map tag");
}

std::vector<MapTag> classify(const Permutation& p) {
    if (p.size() < 2)
        throw std::invalid_argument("classify requires length >= 2");
    std::vector<MapTag> tags;
    const int pos1 = p.position_of(1);
    const int pos2 = p.position_of(2);
    if (pos2 == pos1 + 1) tags.push_back(MapTag::BEFORE);
    if (pos1 == pos2 + 1) tags.push_back(MapTag::AFTER);
    if (p.at(p.size()) == 1) tags.push_back(MapTag::END_ONE);
    if (p.at(p.size()) == 2) tags.push_back(MapTag::END_TWO);
    return tags;
}

Permutation strip_one(const Permutation& p) {
    require_nonempty(p, "strip_one");
    std::vector<int> out;
    out.reserve(p.values().size() - 1);
    for (int v : p.values())
        if (v != 1) out.push_back(v - 1);
    return Permutation(std::move(out));
}

Permutation strip_one_swap_two(const Permutation& p) {
    if (p.size() < 2 || p.at(p.size()) != 2)
        throw std::invalid_argument("strip_one_swap_two requires a permutation ending in 2");
    std::vector<int> out;
    out.reserve(p.values().size() - 1);
    // Drop the trailing 2 and let the old slot of 1 take its place.
    for (int i = 1; i < p.size(); ++i) {
        const int v = p.at(i);
        out.push_back(v == 1 ? 1 : v - 1);
    }
    return Permutation(std::move(out));
}

Permutation g_reduce(const Permutation& p) {
    if (p.size() < 2)
        throw std::invalid_argument("g_reduce requires length >= 2");
    std::vector<int> out;
    out.reserve(p.values().size() - 2);
    for (int v : p.values())
        if (v > 2) out.push_back(v - 2);
    return Permutation(std::move(out));
}

std::vector<Permutation> four_images(const AvoiderLevel& prev) {
    std::vector<Permutation> out;
    out.reserve(prev.members.size() * 4);
    for (MapTag tag : kAllMapTags)
        for (const auto& p : prev.members) out.push_back(apply_map(tag, p));
    return out;
}

AvoiderLevel generate_level(const AvoiderLevel& prev) {
    AvoiderLevel next;
    next.n = prev.n + 1;
    next.set_name = prev.set_name;
    next.members = four_images(prev);
    std::sort(next.members.begin(), next.members.end());
    next.members.erase(std::unique(next.members.begin(), next.members.end()),
                       next.members.end());
    return next;
}

std::vector<Permutation> double_counted(const AvoiderLevel& level) {
    if (level.n < 2)
        throw std::invalid_argument("double_counted requires n >= 2");
    std::vector<Permutation> out;
    for (const auto& p : level.members) {
        const int last = p.at(p.size());
        const int second_last = p.at(p.size() - 1);
        if ((last == 1 && second_last == 2) || (last == 2 && second_last == 1))
            out.push_back(p);
    }
    return out;
}

namespace {

// Packed encoding for the level-size iteration: value-1 of position i in
// nibble i. Values stay below 16 up to n = 16, which covers the generator's
// reach well beyond anything brute force can check.
using Code = std::uint64_t;

Code encode(const std::vector<int>& values) {
    Code c = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        c |= static_cast<Code>(values[i] - 1) << (4 * i);
    return c;
}

void decode(Code c, int n, std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<int>((c >> (4 * i)) & 0xF) + 1;
}

}  // namespace

std::vector<std::uint64_t> generated_level_sizes(int max_n) {
    if (max_n < 1 || max_n > 16)
        throw std::invalid_argument("generated_level_sizes supports 1 <= max_n <= 16");
    std::vector<std::uint64_t> sizes;
    std::vector<Code> level = {encode({1})};  // Av_1(B) = {1}
    sizes.push_back(1);
    std::vector<int> values;
    std::vector<int> image;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Code> next;
        next.reserve(level.size() * 4);
        for (Code c : level) {
            decode(c, n - 1, values);
            const Permutation p{std::vector<int>(values)};
            for (MapTag tag : kAllMapTags) next.push_back(encode(apply_map(tag, p).values()));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
        sizes.push_back(level.size());
    }
    return sizes;
}

}  // namespace vinc
