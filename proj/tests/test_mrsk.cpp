#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "mira/mrsk.hpp"
#include "mira/tableau.hpp"

using namespace mira;

namespace {
const ColoredPerm kBig{{7, 2, 5, 1, 6, 9, 3, 8, 10, 4}, {1, 2, 3, 4, 7}};
}

TEST_CASE("ten-point example: triple, tableaux, theta*") {
    MirabolicOutput out = mirabolic_rsk(kBig);
    CHECK(out.triple.nu == Partition({5, 3, 2}));
    CHECK(out.triple.theta == Partition({5, 2, 1}));
    CHECK(out.triple.nu_prime == Partition({5, 3, 2}));
    CHECK(out.t1 == Tableau({{1, 3, 5, 6, 9}, {2, 7, 8}, {4, 10}}));
    CHECK(out.t2 == Tableau({{1, 3, 4, 8, 10}, {2, 5, 6}, {7, 9}}));
    CHECK(out.theta_star == Partition({3, 3, 1}));
    CHECK(out.triple.consistent());
}

TEST_CASE("trace shows one state per step plus the flush states") {
    MirabolicTrace tr = mirabolic_rsk_trace(kBig);
    CHECK(tr.steps.size() == 10);
    CHECK(tr.flush.size() == 4);  // three flushed values plus the completed tableau
    CHECK(tr.output == mirabolic_rsk(kBig));
    // the auxiliary row always has length N
    for (const auto& st : tr.steps) CHECK(st.r_at.size() == 10);
    // intermediate states quoted in the reference computation
    CHECK(tr.steps[4].t_at.rows()[0] == std::vector<int>{1, 5, 11});
    CHECK(tr.steps[4].t_at.rows()[1] == std::vector<int>{2});
    CHECK(tr.steps[4].t_at.rows()[2] == std::vector<int>{7});
    CHECK(tr.steps[9].t_at.rows()[0][0] == 1);
    CHECK(tr.steps[9].t_at.rows()[1] == std::vector<int>{2, 5, 9});
}

TEST_CASE("insertion outputs are standard and mutually consistent") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            MirabolicOutput out = mirabolic_rsk(tw);
            CHECK(out.triple.consistent());
            CHECK(out.t1.is_standard());
            CHECK(out.t2.is_standard());
            bool shapes_match =
                (out.t1.shape() == out.triple.nu && out.t2.shape() == out.triple.nu_prime) ||
                (out.t1.shape() == out.triple.nu_prime && out.t2.shape() == out.triple.nu);
            CHECK(shapes_match);
        }
}

TEST_CASE("independent oracle agrees with the insertion algorithm") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N)) CHECK(rsk_via_embedding(tw) == mirabolic_rsk(tw));
}

TEST_CASE("the map is injective and inverse lookup recovers the input") {
    for (int N = 1; N <= 4; ++N) {
        InverseRsk inv(N);
        std::set<std::tuple<CellTriple, Tableau, Tableau>> seen;
        for (const auto& tw : enumerate_rb(N)) {
            MirabolicOutput out = mirabolic_rsk(tw);
            CHECK(seen.insert({out.triple, out.t1, out.t2}).second);
            CHECK(inv.lookup(out.triple, out.t1, out.t2) == tw);
        }
    }
}

TEST_CASE("inverting the label swaps the two tableaux and the two partitions") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            MirabolicOutput a = mirabolic_rsk(tw), b = mirabolic_rsk(rb_inverse(tw));
            CHECK(a.t1 == b.t2);
            CHECK(a.t2 == b.t1);
            CHECK(a.triple.nu == b.triple.nu_prime);
            CHECK(a.triple.theta == b.triple.theta);
        }
}

TEST_CASE("theta* agrees with the closed formula and the Fourier transform") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            Partition ts = theta_star(tw);
            CHECK(ts == theta_star_formula(mirabolic_rsk(tw).triple));
            CHECK(ts == mirabolic_rsk(rb_fourier(tw)).triple.theta);
        }
}

TEST_CASE("Fourier relabelling evacuates both tableaux") {
    CHECK(evacuation(Tableau({{1, 2}, {3}})) == Tableau({{1, 3}, {2}}));
    for (int N = 1; N <= 4; ++N)
        for (const auto& tw : enumerate_rb(N)) {
            MirabolicOutput a = mirabolic_rsk(tw), b = mirabolic_rsk(rb_fourier(tw));
            CHECK(evacuation(evacuation(a.t1)) == a.t1);
            CHECK(b.t1 == evacuation(a.t1));
            CHECK(b.t2 == evacuation(a.t2));
        }
}

TEST_CASE("microlocal cells partition the labels; K-orbits are the right cells") {
    for (int N = 1; N <= 4; ++N) {
        for (CellSide side : {CellSide::Left, CellSide::Right, CellSide::TwoSided}) {
            auto cells = microlocal_cells(N, side);
            size_t total = 0;
            for (const auto& c : cells) total += c.size();
            CHECK(total == enumerate_rb(N).size());
        }
        std::map<ColoredPerm, std::vector<ColoredPerm>> right_cell;
        for (auto& c : microlocal_cells(N, CellSide::Right)) {
            std::sort(c.begin(), c.end());
            for (const auto& tw : c) right_cell[tw] = c;
        }
        for (const auto& tw : enumerate_rb(N)) {
            auto orbit = k_orbit(tw);
            std::sort(orbit.begin(), orbit.end());
            CHECK(orbit == right_cell.at(tw));
        }
    }
}

TEST_CASE("empty and full markings reduce to classical RSK") {
    for (const auto& w : all_permutations(4)) {
        auto [P, Q] = classical_rsk(w);
        auto matches = [&](const MirabolicOutput& o) {
            return (o.t1 == P && o.t2 == Q) || (o.t1 == Q && o.t2 == P);
        };
        MirabolicOutput none = mirabolic_rsk({w, {}});
        CHECK(matches(none));
        CHECK(none.triple.theta == none.triple.nu);
        CHECK(matches(mirabolic_rsk({w, {1, 2, 3, 4}})));
    }
}
