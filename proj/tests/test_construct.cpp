#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vinc/construct.hpp"
#include "vinc/enumerate.hpp"

using namespace vinc;

namespace {

Permutation perm(const char* text) { return parse_permutation(text); }

// Independent restatement of the four maps, used as an oracle for the
// hand-derived examples: build the incremented word, then edit it.
Permutation naive_map(MapTag tag, const Permutation& p) {
    std::vector<int> w;
    for (int v : p.values()) w.push_back(v + 1);
    std::vector<int> out;
    switch (tag) {
        case MapTag::BEFORE:
            for (int v : w) {
                if (v == 2) out.push_back(1);
                out.push_back(v);
            }
            break;
        case MapTag::AFTER:
            for (int v : w) {
                out.push_back(v);
                if (v == 2) out.push_back(1);
            }
            break;
        case MapTag::END_ONE:
            out = w;
            out.push_back(1);
            break;
        case MapTag::END_TWO:
            for (int v : w) out.push_back(v == 2 ? 1 : v);
            out.push_back(2);
            break;
    }
    return Permutation(std::move(out));
}

}  // namespace

TEST_CASE("the worked example 31542") {
    auto pi = perm("31542");
    CHECK(f_before(pi) == perm("412653"));
    CHECK(f_after(pi) == perm("421653"));
    CHECK(f_end_one(pi) == perm("426531"));
    CHECK(f_end_two(pi) == perm("416532"));
}

TEST_CASE("map examples on tiny inputs") {
    CHECK(f_before(perm("1")) == perm("12"));
    CHECK(f_before(perm("21")) == perm("312"));
    CHECK(f_after(perm("1")) == perm("21"));
    CHECK(f_after(perm("12")) == perm("213"));
    CHECK(f_end_one(Permutation{}) == perm("1"));
    CHECK(f_end_one(perm("12")) == perm("231"));
    CHECK(f_end_two(perm("1")) == perm("12"));
    CHECK(f_end_two(perm("21")) == perm("312"));
}

TEST_CASE("maps agree with the naive restatement on all short inputs") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            for (MapTag tag : kAllMapTags)
                CHECK(apply_map(tag, p) == naive_map(tag, p));
        });
}

TEST_CASE("maps reject empty input where undefined") {
    CHECK_THROWS_AS(f_before(Permutation{}), std::invalid_argument);
    CHECK_THROWS_AS(f_after(Permutation{}), std::invalid_argument);
    CHECK_THROWS_AS(f_end_two(Permutation{}), std::invalid_argument);
}

TEST_CASE("classify") {
    auto tags = classify(perm("412653"));
    CHECK(tags == std::vector<MapTag>{MapTag::BEFORE});
    CHECK(classify(perm("3412")) ==
          std::vector<MapTag>{MapTag::BEFORE, MapTag::END_TWO});
    CHECK(classify(perm("3421")) ==
          std::vector<MapTag>{MapTag::AFTER, MapTag::END_ONE});
    CHECK(classify(perm("1423")).empty());
    CHECK_THROWS_AS(classify(perm("1")), std::invalid_argument);
}

TEST_CASE("strip_one inverts the insertion maps") {
    CHECK(strip_one(perm("412653")) == perm("31542"));
    CHECK(strip_one(perm("426531")) == perm("31542"));
    CHECK(strip_one(perm("1")) == Permutation{});
    CHECK_THROWS_AS(strip_one(Permutation{}), std::invalid_argument);
}

TEST_CASE("strip_one_swap_two inverts f_end_two") {
    CHECK(strip_one_swap_two(perm("416532")) == perm("31542"));
    CHECK(strip_one_swap_two(perm("12")) == perm("1"));
    auto r = strip_one_swap_two(perm("3412"));
    CHECK(r == perm("231"));
    CHECK(f_end_two(r) == perm("3412"));
    CHECK_THROWS_AS(strip_one_swap_two(perm("21")), std::invalid_argument);
}

TEST_CASE("g_reduce") {
    CHECK(g_reduce(perm("3412")) == perm("12"));
    CHECK(g_reduce(perm("3421")) == perm("12"));
    CHECK(g_reduce(perm("12")) == Permutation{});
    CHECK_THROWS_AS(g_reduce(perm("1")), std::invalid_argument);
}

TEST_CASE("inverse round-trips hold on every classified permutation") {
    for (int n = 2; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            for (MapTag tag : classify(p)) {
                if (tag == MapTag::END_TWO)
                    CHECK(f_end_two(strip_one_swap_two(p)) == p);
                else
                    CHECK(apply_map(tag, strip_one(p)) == p);
            }
        });
}

TEST_CASE("generate_level reproduces the brute-force levels") {
    AvoiderLevel level = enumerate_avoiders(1, builtin_set_b());
    for (int n = 2; n <= 7; ++n) {
        level = generate_level(level);
        CHECK(level.n == n);
        CHECK(level.members == enumerate_avoiders(n, builtin_set_b()).members);
    }
}

TEST_CASE("four_images keeps the duplicates the union removes") {
    auto lvl1 = enumerate_avoiders(1, builtin_set_b());
    auto imgs = four_images(lvl1);
    REQUIRE(imgs.size() == 4);
    // f_be(1)=12, f_af(1)=21, f_en(1)=21, f_bu(1)=12.
    CHECK(imgs[0] == perm("12"));
    CHECK(imgs[1] == perm("21"));
    CHECK(imgs[2] == perm("21"));
    CHECK(imgs[3] == perm("12"));
    CHECK(generate_level(lvl1).members.size() == 2);
}

TEST_CASE("double_counted members end with the pair {1,2}") {
    auto lvl2 = enumerate_avoiders(2, builtin_set_b());
    CHECK(double_counted(lvl2).size() == 2);

    auto lvl3 = enumerate_avoiders(3, builtin_set_b());
    auto dc3 = double_counted(lvl3);
    CHECK(dc3.size() == 2 * count_avoiders(1, builtin_set_b()));
    for (const auto& p : dc3) {
        const int last = p.at(p.size());
        const int prev = p.at(p.size() - 1);
        CHECK(std::min(last, prev) == 1);
        CHECK(std::max(last, prev) == 2);
    }

    auto lvl4 = enumerate_avoiders(4, builtin_set_b());
    CHECK(double_counted(lvl4).size() == 2 * count_avoiders(2, builtin_set_b()));

    CHECK_THROWS_AS(double_counted(enumerate_avoiders(1, builtin_set_b())),
                    std::invalid_argument);
}

TEST_CASE("double-counted members are exactly the two-tag ones") {
    for (int n = 2; n <= 6; ++n) {
        auto lvl = enumerate_avoiders(n, builtin_set_b());
        auto dc = double_counted(lvl);
        for (const auto& p : lvl.members) {
            const bool two_tags = classify(p).size() == 2;
            const bool in_dc = std::find(dc.begin(), dc.end(), p) != dc.end();
            CHECK(two_tags == in_dc);
        }
    }
}

TEST_CASE("g_reduce is 2-to-1 from the double-counted members") {
    for (int n = 3; n <= 7; ++n) {
        auto lvl = enumerate_avoiders(n, builtin_set_b());
        std::map<Permutation, int> hits;
        for (const auto& p : double_counted(lvl)) ++hits[g_reduce(p)];
        auto target = enumerate_avoiders(n - 2, builtin_set_b());
        CHECK(hits.size() == target.members.size());
        for (const auto& q : target.members) {
            auto it = hits.find(q);
            REQUIRE(it != hits.end());
            CHECK(it->second == 2);
        }
    }
}

TEST_CASE("every avoider of A is classified (structural observation)") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : enumerate_avoiders(n, builtin_set_a()).members)
            CHECK_FALSE(classify(p).empty());
}

TEST_CASE("strip_one preserves B-avoidance") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : enumerate_avoiders(n, builtin_set_b()).members)
            CHECK(avoids_all(strip_one(p), builtin_set_b()));
}

TEST_CASE("generated_level_sizes matches brute force and the recurrence") {
    auto sizes = generated_level_sizes(8);
    REQUIRE(sizes.size() == 8);
    std::vector<std::uint64_t> expected{1, 2, 6, 20, 68, 232, 792, 2704};
    CHECK(sizes == expected);
    CHECK_THROWS_AS(generated_level_sizes(17), std::invalid_argument);
}
