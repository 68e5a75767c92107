#include "mira/young.hpp"

#include <algorithm>
#include <stdexcept>

namespace mira {

std::pair<Partition, Partition> upsilon(const Partition& lambda, const Partition& mu) {
    Partition nu = lambda + mu;
    std::vector<int> th;
    int m = std::max(lambda.num_parts(), mu.num_parts());
    for (int i = 1; i <= m; ++i) th.push_back(lambda.part(i + 1) + mu.part(i));
    return {nu, Partition(std::move(th))};
}

std::pair<Partition, Partition> xi(const Partition& nu, const Partition& theta) {
    if (!interleaves(nu, theta)) throw std::invalid_argument("xi: theta must interleave nu");
    int m = std::max(nu.num_parts(), theta.num_parts());
    std::vector<int> lam(m), mu(m);
    int tail_l = 0, tail_m = 0;
    for (int i = m; i >= 1; --i) {
        tail_l += nu.part(i) - theta.part(i);
        tail_m += theta.part(i) - nu.part(i + 1);
        lam[i - 1] = tail_l;
        mu[i - 1] = tail_m;
    }
    return {Partition(std::move(lam)), Partition(std::move(mu))};
}

namespace {
void triples_rec(const Partition& nu, const Partition& nup, int i, int m, int prev,
                 std::vector<int>& th, std::vector<CellTriple>& out) {
    if (i > m) {
        out.push_back({nu, Partition(th), nup});
        return;
    }
    int lo = std::max(nu.part(i + 1), nup.part(i + 1));
    int hi = std::min({nu.part(i), nup.part(i), prev});
    for (int t = hi; t >= lo; --t) {
        th.push_back(t);
        triples_rec(nu, nup, i + 1, m, t, th, out);
        th.pop_back();
    }
}
}  // namespace

std::vector<CellTriple> enumerate_cell_triples(int N) {
    std::vector<CellTriple> out;
    auto parts = partitions_of(N);
    for (const auto& nu : parts)
        for (const auto& nup : parts) {
            int m = std::max(nu.num_parts(), nup.num_parts());
            std::vector<int> th;
            triples_rec(nu, nup, 1, m, N, th, out);
        }
    return out;
}

}  // namespace mira
