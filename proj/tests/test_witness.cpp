#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "vinc/enumerate.hpp"
#include "vinc/witness.hpp"

using namespace vinc;

namespace {
Permutation perm(const char* text) { return parse_permutation(text); }
}

TEST_CASE("transform_occurrence hand-checked examples") {
    {
        auto r = transform_occurrence(perm("1324"), Occurrence{{1, 2, 3, 4}});
        CHECK(r.e == 2);
        CHECK(r.occurrence.positions == std::vector<int>{1, 2, 3, 4});
    }
    {
        // Values 1,5,2,6 at positions 1,2,4,5; the pivot moves off b.
        auto r = transform_occurrence(perm("153264"), Occurrence{{1, 2, 4, 5}});
        CHECK(r.e == 3);
        CHECK(r.occurrence.positions == std::vector<int>{1, 3, 4, 5});
    }
    {
        auto r = transform_occurrence(perm("2413"), Occurrence{{1, 2, 3, 4}});
        CHECK(r.e == 2);
        CHECK(r.occurrence.positions == std::vector<int>{1, 2, 3, 4});
    }
}

TEST_CASE("transform_occurrence rejects non-B quadruples") {
    // Values 1,2,3,4: max{h1,h3}=3 is not below min{h2,h4}=2.
    CHECK_THROWS_AS(transform_occurrence(perm("1234"), Occurrence{{1, 2, 3, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(transform_occurrence(perm("1324"), Occurrence{{1, 2, 3}}),
                    std::invalid_argument);
}

TEST_CASE("first_b_occurrence") {
    auto occ = first_b_occurrence(perm("1324"));
    REQUIRE(occ.has_value());
    CHECK(occ->positions == std::vector<int>{1, 2, 3, 4});

    CHECK_FALSE(first_b_occurrence(perm("31542")).has_value());
    CHECK_FALSE(first_b_occurrence(perm("123")).has_value());

    // Lexicographically least valid quadruple, checked by independent scan.
    auto host = perm("251346");
    auto first = first_b_occurrence(host);
    REQUIRE(first.has_value());
    std::vector<Occurrence> all;
    const int n = host.size();
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b)
            for (int c = b + 1; c <= n - 1; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    Occurrence occ4{{a, b, c, d}};
                    if (check_b_characterization(host, occ4)) all.push_back(occ4);
                }
    REQUIRE(!all.empty());
    CHECK(*first == all.front());
}

TEST_CASE("first_b_occurrence agrees with avoids_all(B) on short hosts") {
    for (int n = 0; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& host) {
            CHECK(first_b_occurrence(host).has_value() ==
                  !avoids_all(host, builtin_set_b()));
        });
}

TEST_CASE("transform succeeds on every B-occurrence of every short host") {
    for (int n = 4; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& host) {
            for (int a = 1; a <= n - 3; ++a)
                for (int b = a + 1; b <= n - 2; ++b)
                    for (int c = b + 1; c <= n - 1; ++c)
                        for (int d = c + 1; d <= n; ++d) {
                            Occurrence occ{{a, b, c, d}};
                            if (!check_b_characterization(host, occ)) continue;
                            auto r = transform_occurrence(host, occ);
                            CHECK(b <= r.e);
                            CHECK(r.e < c);
                            CHECK(r.occurrence.positions ==
                                  std::vector<int>{a, r.e, r.e + 1, d});
                            CHECK(check_a_characterization(host, r.occurrence));
                        }
        });
    }
}
