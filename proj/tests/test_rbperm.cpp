#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "mira/rbperm.hpp"

using namespace mira;

TEST_CASE("validity: unmarked entries may not dominate marked ones") {
    CHECK(rb_is_valid({2, 1}, {1}));        // w(2)=1 < w(1)=2, position 2 > 1: fine
    CHECK_FALSE(rb_is_valid({1, 2}, {2}));  // i=1 unmarked, j=2 marked, i<j and w(i)<w(j)
    CHECK(rb_is_valid({1, 2}, {1, 2}));
    CHECK(rb_is_valid({1, 2}, {}));
    CHECK(rb_is_valid({3, 1, 2}, {2}));
}

TEST_CASE("enumeration counts 2, 7, 34") {
    CHECK(enumerate_rb(1).size() == 2);
    CHECK(enumerate_rb(2).size() == 7);
    CHECK(enumerate_rb(3).size() == 34);
    for (const auto& tw : enumerate_rb(3)) CHECK(rb_is_valid(tw));
    std::set<ColoredPerm> dedup;
    for (const auto& tw : enumerate_rb(3)) dedup.insert(tw);
    CHECK(dedup.size() == 34);
}

TEST_CASE("inverse is an involution and transports the marks by w") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            ColoredPerm inv = rb_inverse(tw);
            CHECK(rb_is_valid(inv));
            CHECK(rb_inverse(inv) == tw);
            CHECK(rb_length(inv) == rb_length(tw));
        }
    CHECK(rb_inverse(ColoredPerm{{2, 3, 1}, {1}}) == ColoredPerm{{3, 1, 2}, {2}});
}

TEST_CASE("length: base elements and extremes") {
    for (int N = 1; N <= 5; ++N)
        for (int k = 0; k <= N; ++k) CHECK(rb_length(rb_base(N, k)) == k);
    // the longest element with full marking maximizes the length
    ColoredPerm open{{2, 1}, {1, 2}};
    CHECK(rb_length(open) == 1 + 2);
    CHECK(rb_length(ColoredPerm{{2, 1}, {}}) == 1);
}

TEST_CASE("sigma/beta round-trip") {
    for (int N = 1; N <= 5; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            auto sigma = sigma_of(tw);
            CHECK(beta_of(tw.w, sigma) == tw.beta);
        }
    CHECK(sigma_of(ColoredPerm{{3, 1, 2}, {2}}) == std::vector<int>{2});
}

TEST_CASE("k_move is an involution on its domain") {
    for (int N = 2; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N))
            for (int i = 1; i + 1 < N; ++i)
                if (auto moved = k_move(tw, i)) {
                    CHECK(rb_is_valid(*moved));
                    auto back = k_move(*moved, i);
                    REQUIRE(back.has_value());
                    CHECK(*back == tw);
                }
}

TEST_CASE("fourier transform is an involution preserving validity") {
    for (int N = 1; N <= 5; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            ColoredPerm f = rb_fourier(tw);
            CHECK(rb_is_valid(f));
            CHECK(rb_fourier(f) == tw);
        }
    // complement through w0: marks at {1} for w = id_2 map to marks at {1}
    CHECK(rb_fourier(ColoredPerm{{1, 2}, {1, 2}}) == ColoredPerm{{1, 2}, {}});
}

TEST_CASE("generator case analysis covers every (tw, i) exactly once") {
    for (int N = 2; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N))
            for (int i = 1; i < N; ++i) {
                GenCase c = right_gen_case(tw, i);
                CHECK(c.id >= 1);
                CHECK(c.id <= 5);
                if (c.id != 3) CHECK(rb_is_valid(c.tws));
                if (c.id == 2) CHECK(rb_is_valid(c.tws_fork));
                if (c.id == 3 || c.id == 5) CHECK(rb_is_valid(c.twp));
                if (c.id == 3) CHECK(rb_is_valid(c.twps));
            }
}

TEST_CASE("star product: identity on Phi members, length +1 otherwise") {
    for (int N = 2; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N))
            for (int i = 1; i < N; ++i) {
                ColoredPerm r = star(tw, i, Side::Right);
                if (phi(tw, i))
                    CHECK(r == tw);
                else
                    CHECK(rb_length(r) == rb_length(tw) + 1);
                ColoredPerm l = star(tw, i, Side::Left);
                if (phi(rb_inverse(tw), i))
                    CHECK(l == tw);
                else
                    CHECK(rb_length(l) == rb_length(tw) + 1);
            }
}

TEST_CASE("text round-trip and a helpful parse error") {
    for (const auto& tw : enumerate_rb(3)) CHECK(parse_colored_perm(tw.to_string()) == tw);
    CHECK_THROWS_AS(parse_colored_perm("w=1 2; b=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored_perm("w=1 1; b="), std::invalid_argument);
}
