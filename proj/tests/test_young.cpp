#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "mira/tableau.hpp"
#include "mira/young.hpp"

using namespace mira;

TEST_CASE("partition basics: normalization, indexing, conjugate") {
    Partition p({4, 2, 1, 0, 0});
    CHECK(p.num_parts() == 3);
    CHECK(p.size() == 7);
    CHECK(p.part(1) == 4);
    CHECK(p.part(5) == 0);
    CHECK(p.conjugate() == Partition({3, 2, 1, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.n_stat() == 0 * 4 + 1 * 2 + 2 * 1);
}

TEST_CASE("dominance order on partitions of the same size") {
    CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
    CHECK_FALSE(Partition({2, 2}).dominates(Partition({3, 1})));
    CHECK(Partition({2, 2}).dominates(Partition({2, 2})));
    CHECK(Partition({4}).dominates(Partition({1, 1, 1, 1})));
}

TEST_CASE("partitions_of enumerates each partition exactly once") {
    int counts[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n <= 7; ++n) {
        auto ps = partitions_of(n);
        CHECK(static_cast<int>(ps.size()) == counts[n]);
        std::set<Partition> dedup(ps.begin(), ps.end());
        CHECK(dedup.size() == ps.size());
        for (const auto& p : ps) CHECK(p.size() == n);
    }
}

TEST_CASE("interleaving is the two-sided sandwich condition") {
    CHECK(interleaves(Partition({5, 3, 2}), Partition({5, 2, 1})));
    CHECK(interleaves(Partition({3, 1}), Partition({2, 1})));
    CHECK(interleaves(Partition({3, 1}), Partition({1, 1})));
    CHECK_FALSE(interleaves(Partition({3, 2}), Partition({1})));  // theta_1 < nu_2
    CHECK_FALSE(interleaves(Partition({2, 2}), Partition({3}))); // theta_1 > nu_1
    CHECK(interleaves(Partition({2}), Partition()));
}

TEST_CASE("upsilon and xi are inverse on interleaving pairs") {
    auto [nu, theta] = upsilon(Partition({2, 1}), Partition({3, 1}));
    CHECK(nu == Partition({5, 2}));
    CHECK(theta == Partition({4, 1}));
    for (int n = 0; n <= 6; ++n)
        for (int a = 0; a <= n; ++a)
            for (const auto& lambda : partitions_of(a))
                for (const auto& mu : partitions_of(n - a)) {
                    auto [v, t] = upsilon(lambda, mu);
                    CHECK(interleaves(v, t));
                    auto [l2, m2] = xi(v, t);
                    CHECK(l2 == lambda);
                    CHECK(m2 == mu);
                }
}

TEST_CASE("cell triples: both partitions have size N and theta interleaves both") {
    for (int N = 1; N <= 5; ++N) {
        auto triples = enumerate_cell_triples(N);
        std::set<CellTriple> dedup(triples.begin(), triples.end());
        CHECK(dedup.size() == triples.size());
        for (const auto& t : triples) {
            CHECK(t.nu.size() == N);
            CHECK(t.nu_prime.size() == N);
            CHECK(t.consistent());
        }
    }
    CHECK(enumerate_cell_triples(1).size() == 2);  // theta empty or (1)
}

TEST_CASE("hook length formula agrees with direct tableau enumeration") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto all = enumerate_standard_tableaux(nu);
            CHECK(count_st(nu) == static_cast<long long>(all.size()));
            for (const auto& t : all) {
                CHECK(t.is_standard());
                CHECK(t.shape() == nu);
            }
        }
    CHECK(count_st(Partition({3, 2})) == 5);
    CHECK(count_st(Partition({2, 2, 1})) == 5);
}

TEST_CASE("a-function values") {
    CHECK(a_function(Partition({3}), 3) == 3);        // 3 - 0
    CHECK(a_function(Partition({1, 1, 1}), 3) == 0);  // 3 - 3
    CHECK(a_function(Partition({2, 1}), 3) == 2);     // 3 - 1
}
