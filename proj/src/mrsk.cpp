#include "mira/mrsk.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace mira {

namespace {

// Row insertion specialized to the sentinel discipline: the sentinels
// N+1,...,2N stand for equal "@" symbols, which is sound only if a carried
// sentinel never bumps another sentinel (it must append, as an "@" would).
// We assert exactly that.
std::pair<int, int> insert_checked(Tableau& t, int x, int N) {
    auto rows = t.rows();
    int cur = x;
    for (size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({cur});
            t = Tableau(std::move(rows));
            return {static_cast<int>(r) + 1, 1};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            t = Tableau(std::move(rows));
            return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
        }
        if (cur > N) {
            // sentinel about to bump *it, necessarily another sentinel:
            // would diverge from the equal-"@" semantics
            throw std::logic_error("sentinel discipline violated: @ bumps @");
        }
        std::swap(cur, *it);
    }
}

struct RunResult {
    MirabolicTrace trace;
};

RunResult run(const ColoredPerm& tw) {
    if (!rb_is_valid(tw)) throw std::invalid_argument("mirabolic_rsk: invalid colored permutation");
    int N = tw.n();
    std::vector<int> r_at(N);
    for (int i = 0; i < N; ++i) r_at[i] = N + 1 + i;

    Tableau t_at;
    std::vector<std::vector<int>> rec;  // recording rows for T1
    MirabolicTrace tr;
    int last_sentinel_in = N;  // sentinels must enter T@ in increasing order

    auto insert_into_t = [&](int x, int step) {
        if (x > N) {
            assert(x > last_sentinel_in);
            last_sentinel_in = x;
        }
        auto [r, c] = insert_checked(t_at, x, N);
        if (step > 0) {
            if (r > static_cast<int>(rec.size())) rec.emplace_back();
            assert(static_cast<int>(rec[r - 1].size()) + 1 == c);
            rec[r - 1].push_back(step);
        }
    };

    for (int i = 1; i <= N; ++i) {
        int x;
        if (tw.in_beta(i)) {
            x = tw.w[i - 1];
        } else {
            // replace the least r@ entry greater than w(i) by w(i)
            auto it = std::upper_bound(r_at.begin(), r_at.end(), tw.w[i - 1]);
            assert(it != r_at.end());
            x = *it;
            *it = tw.w[i - 1];
            assert(std::is_sorted(r_at.begin(), r_at.end()));
        }
        insert_into_t(x, i);
        assert(t_at.num_cells() == i);
        tr.steps.push_back({t_at, r_at, i});
    }

    Tableau t_at_N = t_at;  // state after step N, before the flush

    for (int x : r_at) {
        insert_into_t(x, 0);
        if (x <= N) tr.flush.push_back(t_at);
    }
    tr.flush.push_back(t_at);  // T@_*

    MirabolicOutput out;
    out.t1 = Tableau(rec);
    out.t2 = t_at.restrict_to(N);
    assert(out.t1.is_standard() && out.t2.is_standard());
    Partition full_shape = t_at.shape();
    std::vector<int> th(full_shape.parts().begin() + (full_shape.num_parts() > 0 ? 1 : 0),
                        full_shape.parts().end());
    out.triple = {out.t1.shape(), Partition(std::move(th)), out.t2.shape()};
    out.theta_star = t_at_N.restrict_to(N).shape();
    assert(out.triple.consistent());
    assert(interleaves(out.triple.nu, out.theta_star) &&
           interleaves(out.triple.nu_prime, out.theta_star));
    tr.output = out;
    return {std::move(tr)};
}

}  // namespace

MirabolicOutput mirabolic_rsk(const ColoredPerm& tw) { return run(tw).trace.output; }

MirabolicTrace mirabolic_rsk_trace(const ColoredPerm& tw) { return run(tw).trace; }

MirabolicOutput rsk_via_embedding(const ColoredPerm& tw) {
    if (!rb_is_valid(tw)) throw std::invalid_argument("rsk_via_embedding: invalid input");
    int N = tw.n();
    int M = 3 * N;
    // the extended element on {1,...,3N}
    Perm wp(M);
    for (int i = 1; i <= N; ++i) wp[i - 1] = i + 2 * N;
    for (int i = N + 1; i <= 2 * N; ++i) wp[i - 1] = tw.w[i - N - 1] + N;
    for (int i = 2 * N + 1; i <= M; ++i) wp[i - 1] = i - 2 * N;
    std::set<int> beta_plus;
    for (int b : tw.beta) beta_plus.insert(b + N);

    // peel off successive chains of prefix minima from the unmarked positions
    std::vector<int> gamma;
    for (int i = 1; i <= M; ++i)
        if (!beta_plus.count(i)) gamma.push_back(i);
    std::map<int, std::pair<int, int>> chain_of;  // position -> (chain index m, predecessor pos or 0)
    int m = 0;
    while (!gamma.empty()) {
        ++m;
        std::vector<int> delta, rest;
        int cur_min = M + 1;
        for (int i : gamma) {
            if (wp[i - 1] < cur_min) {
                cur_min = wp[i - 1];
                chain_of[i] = {m, delta.empty() ? 0 : delta.back()};
                delta.push_back(i);
            } else {
                rest.push_back(i);
            }
        }
        assert(delta.front() == m && delta.back() == m + 2 * N);
        gamma = std::move(rest);
    }
    assert(m == N);

    // the straightened word on positions N+1..3N
    std::vector<int> word;
    for (int i = N + 1; i <= M; ++i) {
        int val;
        if (beta_plus.count(i)) {
            val = wp[i - 1];
        } else {
            auto [cm, pred] = chain_of.at(i);
            (void)cm;
            assert(pred != 0 && pred < i);  // chains start at positions <= N
            val = wp[pred - 1];
        }
        word.push_back(val - N);
    }
    assert(is_permutation(word));

    auto [P, Q] = classical_rsk(word);
    MirabolicOutput out;
    out.t2 = P.restrict_to(N);
    out.t1 = Q.restrict_to(N);
    Partition pshape = P.shape();
    std::vector<int> th(pshape.parts().begin() + (pshape.num_parts() > 0 ? 1 : 0),
                        pshape.parts().end());
    out.triple = {out.t1.shape(), Partition(std::move(th)), out.t2.shape()};
    out.theta_star = theta_star_formula(out.triple);
    return out;
}

Partition theta_star_formula(const CellTriple& t) {
    int m = std::max(t.nu.num_parts(), t.nu_prime.num_parts());
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
        int x = std::min(t.nu.part(i), t.nu_prime.part(i)) +
                std::max(t.nu.part(i + 1), t.nu_prime.part(i + 1)) - t.theta.part(i);
        parts.push_back(x);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition theta_star(const ColoredPerm& tw) {
    MirabolicOutput out = mirabolic_rsk(tw);
    Partition direct = out.theta_star;
    Partition via_formula = theta_star_formula(out.triple);
    assert(direct == via_formula);
    return direct;
}

std::vector<std::vector<ColoredPerm>> microlocal_cells(int N, CellSide side) {
    std::map<std::tuple<CellTriple, Tableau>, std::vector<ColoredPerm>> cells;
    for (const auto& tw : enumerate_rb(N)) {
        MirabolicOutput out = mirabolic_rsk(tw);
        Tableau key;
        if (side == CellSide::Left)
            key = out.t1;
        else if (side == CellSide::Right)
            key = out.t2;
        cells[{out.triple, key}].push_back(tw);
    }
    std::vector<std::vector<ColoredPerm>> out;
    for (auto& [k, v] : cells) out.push_back(std::move(v));
    return out;
}

std::vector<ColoredPerm> k_orbit(const ColoredPerm& tw) {
    std::set<ColoredPerm> seen{tw};
    std::vector<ColoredPerm> queue{tw};
    while (!queue.empty()) {
        ColoredPerm cur = queue.back();
        queue.pop_back();
        for (int i = 1; i + 1 < cur.n(); ++i) {
            auto next = k_move(cur, i);
            if (next && !seen.count(*next)) {
                seen.insert(*next);
                queue.push_back(*next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool phi_prime(const Tableau& t, int i) {
    if (i < 1 || i >= t.num_cells()) throw std::out_of_range("phi_prime: index out of range");
    return t.row_of(i) < t.row_of(i + 1);
}

namespace {
// Interchange entries a and b; nothing if the result is not a valid tableau.
std::optional<Tableau> swap_entries(const Tableau& t, int a, int b) {
    auto rows = t.rows();
    for (auto& row : rows)
        for (auto& x : row) {
            if (x == a)
                x = b;
            else if (x == b)
                x = a;
        }
    for (auto& row : rows) std::sort(row.begin(), row.end());
    try {
        return Tableau(std::move(rows));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// Forward direction of the two dual Knuth cases at position i.
std::optional<Tableau> kprime_forward(const Tableau& t, int i) {
    int ri = t.row_of(i), ri1 = t.row_of(i + 1), ri2 = t.row_of(i + 2);
    if (ri2 <= ri && ri < ri1) {
        auto r = swap_entries(t, i + 1, i + 2);
        assert(r);  // the case conditions guarantee standardness
        return r;
    }
    if (ri < ri2 && ri2 <= ri1) {
        auto r = swap_entries(t, i, i + 1);
        assert(r);
        return r;
    }
    return std::nullopt;
}
}  // namespace

std::optional<Tableau> kprime_move(const Tableau& t, int i) {
    if (i < 1 || i + 1 >= t.num_cells()) throw std::out_of_range("kprime_move: index out of range");
    std::set<Tableau> found;
    if (auto f = kprime_forward(t, i); f && *f != t) found.insert(*f);
    for (int pair : {i, i + 1}) {
        auto c = swap_entries(t, pair, pair + 1);
        if (!c || *c == t) continue;
        if (auto f = kprime_forward(*c, i); f && *f == t) found.insert(*c);
    }
    assert(found.size() <= 1);
    if (found.empty()) return std::nullopt;
    return *found.begin();
}

InverseRsk::InverseRsk(int N) {
    for (const auto& tw : enumerate_rb(N)) {
        MirabolicOutput out = mirabolic_rsk(tw);
        auto [it, fresh] = table_.insert({{out.triple, out.t1, out.t2}, tw});
        if (!fresh) throw std::logic_error("mirabolic RSK is not injective (bug)");
        (void)it;
    }
}

ColoredPerm InverseRsk::lookup(const CellTriple& t, const Tableau& t1, const Tableau& t2) const {
    auto it = table_.find({t, t1, t2});
    if (it == table_.end()) throw std::invalid_argument("inverse_rsk: not in the image");
    return it->second;
}

}  // namespace mira
