#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "mira/hecke.hpp"
#include "mira/tableau.hpp"

using namespace mira;

namespace {

template <typename M>
M pruned(M x) {
    for (auto it = x.begin(); it != x.end();)
        it = it->second.is_zero() ? x.erase(it) : std::next(it);
    return x;
}

auto canon = [](std::vector<std::vector<Perm>> cells) {
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end());
    return cells;
};

}  // namespace

TEST_CASE("Laurent arithmetic and the bar involution") {
    Laurent x = Laurent::v_pow(2) + Laurent::v_pow(-1, 3) - Laurent(5);
    CHECK(x.coeff(2) == 1);
    CHECK(x.coeff(-1) == 3);
    CHECK(x.coeff(0) == -5);
    CHECK(x.bar().coeff(1) == 3);
    CHECK(x.bar().bar() == x);
    CHECK((x - x).is_zero());
    CHECK((Laurent::v_pow(1) * Laurent::v_pow(-1)) == Laurent(1));
    CHECK(q_poly().eval_at_q(7) == 7);
    CHECK((q_poly() * q_poly() - q_poly()).eval_at_q(3) == 6);
}

TEST_CASE("basis conversion is inverse in both directions") {
    for (const Perm& w : all_permutations(3)) {
        HTerms unit{{w, Laurent(1)}};
        CHECK(h_to_t(t_to_h(unit)) == unit);
        CHECK(t_to_h(h_to_t(unit)) == unit);
    }
}

TEST_CASE("generators satisfy the quadratic and braid relations") {
    for (const Perm& w : all_permutations(3)) {
        HTerms unit{{w, Laurent(1)}};
        for (int i = 1; i <= 2; ++i) {
            HTerms ts = t_gen_right(unit, i);
            HTerms rhs;
            for (const auto& [y, c] : ts) rhs[y] = c * (q_poly() - 1);
            rhs[w] += q_poly();
            CHECK(pruned(t_gen_right(ts, i)) == pruned(std::move(rhs)));
        }
        HTerms a = t_gen_right(t_gen_right(t_gen_right(unit, 1), 2), 1);
        HTerms b = t_gen_right(t_gen_right(t_gen_right(unit, 2), 1), 2);
        CHECK(pruned(std::move(a)) == pruned(std::move(b)));
        // H_s^2 = (v^{-1} - v) H_s + 1
        for (int i = 1; i <= 2; ++i) {
            HTerms hs = h_gen_right(unit, i, false);
            HTerms rhs;
            for (const auto& [y, c] : hs)
                rhs[y] = c * (Laurent::v_pow(-1) - Laurent::v_pow(1));
            rhs[w] += Laurent(1);
            CHECK(pruned(h_gen_right(hs, i, false)) == pruned(std::move(rhs)));
        }
    }
}

TEST_CASE("left and right generator actions commute") {
    for (const Perm& w : all_permutations(3)) {
        HTerms unit{{w, Laurent(1)}};
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                CHECK(pruned(t_gen_left(i, t_gen_right(unit, j))) ==
                      pruned(t_gen_right(t_gen_left(i, unit), j)));
    }
}

TEST_CASE("general products are associative") {
    auto rb = all_permutations(3);
    for (const Perm& a : rb)
        for (const Perm& b : rb) {
            HTerms xa{{a, Laurent(1)}}, xb{{b, Laurent(1)}};
            for (const Perm& c : {Perm{2, 1, 3}, Perm{3, 2, 1}}) {
                HTerms xc{{c, Laurent(1)}};
                CHECK(pruned(h_mul(h_mul(xa, xb), xc)) == pruned(h_mul(xa, h_mul(xb, xc))));
                CHECK(pruned(t_mul(t_mul(xa, xb), xc)) == pruned(t_mul(xa, t_mul(xb, xc))));
            }
        }
}

TEST_CASE("canonical basis: unitriangular, bar-invariant, negative tails") {
    for (int N = 1; N <= 4; ++N) {
        KLTable t(N);
        CHECK(t.elements().size() == all_permutations(N).size());
        for (const Perm& w : t.elements()) {
            const HTerms& c = t.kl(w);
            CHECK(c.at(w) == Laurent(1));
            for (const auto& [y, coeff] : c) {
                if (y == w) continue;
                CHECK(coxeter_length(y) < coxeter_length(w));
                CHECK(coeff.strictly_negative());
            }
            CHECK(t.bar(c) == c);
            // expansion in the canonical basis of its own element is a delta
            auto e = pruned(t.kl_expand(c));
            CHECK(e.size() == 1);
            CHECK(e.at(w) == Laurent(1));
        }
    }
}

TEST_CASE("S_3 canonical basis matches the textbook table") {
    KLTable t(3);
    // longest element: all six permutations with coefficient (-v)^{-k} pattern
    const HTerms& top = t.kl({3, 2, 1});
    CHECK(top.size() == 6);
    CHECK(top.at({1, 2, 3}) == Laurent::v_pow(-3, -1));
    CHECK(top.at({2, 1, 3}) == Laurent::v_pow(-2));
    CHECK(top.at({3, 1, 2}) == Laurent::v_pow(-1, -1));
    const HTerms& mid = t.kl({3, 1, 2});
    CHECK(mid.size() == 4);
    CHECK(mid.at({2, 1, 3}) == Laurent::v_pow(-1, -1));
    CHECK(mid.at({1, 3, 2}) == Laurent::v_pow(-1, -1));
    CHECK(mid.at({1, 2, 3}) == Laurent::v_pow(-2));
}

TEST_CASE("cells from RSK keys coincide with cells from basis closure") {
    for (int N = 1; N <= 4; ++N) {
        KLTable t(N);
        for (CellSide side : {CellSide::Left, CellSide::Right, CellSide::TwoSided})
            CHECK(canon(classical_cells_rsk(N, side)) ==
                  canon(classical_cells_closure(t, side)));
    }
}

TEST_CASE("asymptotic ring of each two-sided cell is a matrix algebra") {
    for (int N = 2; N <= 4; ++N) {
        KLTable t(N);
        for (const Partition& nu : partitions_of(N)) {
            JRing j = j_ring(nu, t);
            CHECK(j.associative);
            CHECK_FALSE(j.matrix_unit_convention.empty());
            long long f = count_st(nu);
            CHECK(static_cast<long long>(j.cell.size()) == f * f);
        }
    }
}
