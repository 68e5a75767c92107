#include "mira/hecke.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mira/scc.hpp"

namespace mira {

namespace {

// (-v)^k as a Laurent polynomial, any integer k.
Laurent neg_v_pow(int k) { return Laurent::v_pow(k, (k % 2 + 2) % 2 == 0 ? 1 : -1); }

void add_term(HTerms& x, const Perm& w, const Laurent& c) {
    if (c.is_zero()) return;
    Laurent& slot = x[w];
    slot += c;
    if (slot.is_zero()) x.erase(w);
}

HTerms scale(const HTerms& x, const Laurent& c) {
    HTerms r;
    for (const auto& [w, a] : x) add_term(r, w, a * c);
    return r;
}

void add_scaled(HTerms& x, const HTerms& y, const Laurent& c) {
    for (const auto& [w, a] : y) add_term(x, w, a * c);
}

bool right_ascent(const Perm& w, int i) { return w[i - 1] < w[i]; }

Perm left_simple(int i, const Perm& w) {
    Perm r = w;
    for (auto& x : r) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return r;
}

bool left_ascent(int i, const Perm& w) {
    // l(s_i w) > l(w) iff i appears before i+1 in the one-line word.
    for (int x : w) {
        if (x == i) return true;
        if (x == i + 1) return false;
    }
    throw std::invalid_argument("left_ascent: index out of range");
}

// Keys of x sorted by decreasing (length, lex).
std::vector<Perm> support_desc(const HTerms& x) {
    std::vector<Perm> keys;
    for (const auto& [w, c] : x) keys.push_back(w);
    std::sort(keys.begin(), keys.end(), [](const Perm& a, const Perm& b) {
        int la = coxeter_length(a), lb = coxeter_length(b);
        if (la != lb) return la > lb;
        return a > b;
    });
    return keys;
}

}  // namespace

HTerms t_to_h(const HTerms& t_terms) {
    HTerms r;
    for (const auto& [w, c] : t_terms) add_term(r, w, c * neg_v_pow(coxeter_length(w)));
    return r;
}

HTerms h_to_t(const HTerms& h_terms) {
    HTerms r;
    for (const auto& [w, c] : h_terms) add_term(r, w, c * neg_v_pow(-coxeter_length(w)));
    return r;
}

HTerms t_gen_right(const HTerms& x, int i) {
    HTerms r;
    Laurent q = q_poly();
    for (const auto& [w, c] : x) {
        Perm ws = right_simple(w, i);
        if (right_ascent(w, i)) {
            add_term(r, ws, c);
        } else {
            add_term(r, w, c * (q - 1));
            add_term(r, ws, c * q);
        }
    }
    return r;
}

HTerms t_gen_left(int i, const HTerms& x) {
    HTerms r;
    Laurent q = q_poly();
    for (const auto& [w, c] : x) {
        Perm sw = left_simple(i, w);
        if (left_ascent(i, w)) {
            add_term(r, sw, c);
        } else {
            add_term(r, w, c * (q - 1));
            add_term(r, sw, c * q);
        }
    }
    return r;
}

HTerms h_gen_right(const HTerms& x, int i, bool tilde) {
    HTerms r;
    Laurent vm = Laurent::v_pow(-1), vp = Laurent::v_pow(1);
    for (const auto& [w, c] : x) {
        Perm ws = right_simple(w, i);
        add_term(r, ws, c);
        if (!right_ascent(w, i)) add_term(r, w, c * (vm - vp));
    }
    if (tilde) add_scaled(r, x, -vm);
    return r;
}

HTerms h_gen_left(int i, const HTerms& x, bool tilde) {
    HTerms r;
    Laurent vm = Laurent::v_pow(-1), vp = Laurent::v_pow(1);
    for (const auto& [w, c] : x) {
        Perm sw = left_simple(i, w);
        add_term(r, sw, c);
        if (!left_ascent(i, w)) add_term(r, w, c * (vm - vp));
    }
    if (tilde) add_scaled(r, x, -vm);
    return r;
}

HTerms h_mul(const HTerms& a, const HTerms& b) {
    HTerms r;
    for (const auto& [u, c] : b) {
        HTerms cur = a;
        for (int k : reduced_word(u)) cur = h_gen_right(cur, k, false);
        add_scaled(r, cur, c);
    }
    return r;
}

HTerms t_mul(const HTerms& a, const HTerms& b) {
    HTerms r;
    for (const auto& [u, c] : b) {
        HTerms cur = a;
        for (int k : reduced_word(u)) cur = t_gen_right(cur, k);
        add_scaled(r, cur, c);
    }
    return r;
}

KLTable::KLTable(int N) : n_(N) {
    elements_ = all_permutations(N);
    std::stable_sort(elements_.begin(), elements_.end(), [](const Perm& a, const Perm& b) {
        int la = coxeter_length(a), lb = coxeter_length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    for (const Perm& w : elements_) {
        if (w == perm_identity(N)) {
            kl_[w] = {{w, Laurent(1)}};
            continue;
        }
        int i = 0;
        for (int k = 1; k < N; ++k)
            if (!right_ascent(w, k)) {
                i = k;
                break;
            }
        Perm pred = right_simple(w, i);
        HTerms x = h_gen_right(kl_.at(pred), i, true);
        // clear the bar-symmetric parts at lower support, top down
        for (const Perm& y : support_desc(x)) {
            if (y == w) {
                if (x.at(y) != Laurent(1)) throw std::logic_error("kl: bad leading coefficient");
                continue;
            }
            const Laurent& c = x.at(y);
            Laurent z = Laurent::v_pow(0, c.coeff(0));
            for (const auto& [e, a] : c.terms())
                if (e > 0) {
                    z += Laurent::v_pow(e, a);
                    z += Laurent::v_pow(-e, a);
                }
            if (!z.is_zero()) add_scaled(x, kl_.at(y), -z);
        }
        int lw = coxeter_length(w);
        for (const auto& [y, c] : x) {
            if (y == w) continue;
            if (!c.strictly_negative() || !c.has_parity(lw - coxeter_length(y)))
                throw std::logic_error("kl: triangularity/parity violated");
            // sign pattern: the coefficient of v^{-k} carries sign (-1)^k
            for (const auto& [e, a] : c.terms())
                if ((((-e) % 2 + 2) % 2 == 0) != (a > 0))
                    throw std::logic_error("kl: sign pattern violated");
        }
        kl_[w] = std::move(x);
    }
}

const HTerms& KLTable::kl(const Perm& w) const { return kl_.at(w); }

const HTerms& KLTable::bar_of_basis(const Perm& w) const {
    auto it = bar_basis_.find(w);
    if (it != bar_basis_.end()) return it->second;
    HTerms r;
    if (w == perm_identity(n_)) {
        r = {{w, Laurent(1)}};
    } else {
        int i = 0;
        for (int k = 1; k < n_; ++k)
            if (!right_ascent(w, k)) {
                i = k;
                break;
            }
        const HTerms& bp = bar_of_basis(right_simple(w, i));
        // bar(H_w) = bar(H_pred) Htilde_s + v bar(H_pred)
        r = h_gen_right(bp, i, true);
        add_scaled(r, bp, Laurent::v_pow(1));
    }
    return bar_basis_[w] = std::move(r);
}

HTerms KLTable::bar(const HTerms& x) const {
    HTerms r;
    for (const auto& [w, c] : x) add_scaled(r, bar_of_basis(w), c.bar());
    return r;
}

std::map<Perm, Laurent> KLTable::kl_expand(const HTerms& x) const {
    std::map<Perm, Laurent> out;
    HTerms rest = x;
    while (!rest.empty()) {
        Perm y = support_desc(rest).front();
        Laurent m = rest.at(y);
        out[y] = m;
        add_scaled(rest, kl_.at(y), -m);
    }
    return out;
}

Int KLTable::mu_abs(const Perm& y, const Perm& w) const {
    auto it = kl_.at(w).find(y);
    if (it == kl_.at(w).end()) return 0;
    Int c = it->second.coeff(-1);
    return c < 0 ? Int(-c) : c;
}

std::vector<std::vector<Perm>> classical_cells_rsk(int N, CellSide side) {
    std::map<std::pair<Partition, Tableau>, std::vector<Perm>> cells;
    for (const Perm& w : all_permutations(N)) {
        auto [P, Q] = classical_rsk(w);
        Tableau key;
        if (side == CellSide::Left)
            key = Q;
        else if (side == CellSide::Right)
            key = P;
        cells[{P.shape(), key}].push_back(w);
    }
    std::vector<std::vector<Perm>> out;
    for (auto& [k, v] : cells) out.push_back(std::move(v));
    return out;
}

std::vector<std::vector<Perm>> classical_cells_closure(const KLTable& table, CellSide side) {
    const auto& elems = table.elements();
    std::map<Perm, int> idx;
    for (size_t k = 0; k < elems.size(); ++k) idx[elems[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> adj(elems.size());
    for (const Perm& w : elems) {
        for (int i = 1; i < table.n(); ++i) {
            std::vector<HTerms> prods;
            if (side == CellSide::Right || side == CellSide::TwoSided)
                prods.push_back(h_gen_right(table.kl(w), i, true));
            if (side == CellSide::Left || side == CellSide::TwoSided)
                prods.push_back(h_gen_left(i, table.kl(w), true));
            for (const auto& prod : prods)
                for (const auto& [z, c] : table.kl_expand(prod))
                    if (z != w) adj[idx[w]].push_back(idx[z]);
        }
    }
    std::vector<std::vector<Perm>> out;
    for (const auto& comp : strongly_connected_components(adj)) {
        std::vector<Perm> cell;
        for (int k : comp) cell.push_back(elems[k]);
        std::sort(cell.begin(), cell.end());
        out.push_back(std::move(cell));
    }
    std::sort(out.begin(), out.end());
    return out;
}

JRing j_ring(const Partition& nu, const KLTable& table) {
    int N = nu.size();
    if (N != table.n()) throw std::invalid_argument("j_ring: |nu| != N");
    JRing J;
    J.nu = nu;
    // The a-function actually attained by the structure constants of this
    // cell (RSK shape nu) is n(nu): a(w0) = l(w0) on the column-shape cell.
    J.a_nu = nu.n_stat();
    std::map<Perm, std::pair<Tableau, Tableau>> pq;
    for (const Perm& w : table.elements()) {
        auto [P, Q] = classical_rsk(w);
        if (P.shape() == nu) {
            J.cell.push_back(w);
            pq[w] = {P, Q};
        }
    }
    std::map<Perm, int> pos;
    for (size_t k = 0; k < J.cell.size(); ++k) pos[J.cell[k]] = static_cast<int>(k);
    for (const Perm& w : J.cell)
        for (const Perm& y : J.cell) {
            HTerms prod = h_mul(table.kl(w), table.kl(y));
            for (const auto& [z, m] : table.kl_expand(prod)) {
                if (!pos.count(z)) continue;
                if (!m.is_zero() && m.max_deg() > J.a_nu)
                    throw std::logic_error("j_ring: degree bound a_nu violated");
                Int g = m.coeff(static_cast<int>(J.a_nu));
                if (g != 0) J.gamma[{w, y, z}] = g;
            }
        }
    auto g = [&](const Perm& w, const Perm& y, const Perm& z) -> Int {
        auto it = J.gamma.find({w, y, z});
        return it == J.gamma.end() ? Int(0) : it->second;
    };
    // associativity of the gamma product
    J.associative = true;
    for (const Perm& w : J.cell)
        for (const Perm& y : J.cell)
            for (const Perm& z : J.cell)
                for (const Perm& t : J.cell) {
                    Int lhs = 0, rhs = 0;
                    for (const Perm& u : J.cell) {
                        lhs += g(w, y, u) * g(u, z, t);
                        rhs += g(y, z, u) * g(w, u, t);
                    }
                    if (lhs != rhs) J.associative = false;
                }
    // matrix-unit identification, trying both tableau orders and, failing an
    // exact match, the absolute values of gamma
    for (bool use_abs : {false, true}) {
        for (const char* conv : {"PQ", "QP"}) {
            bool ok = true;
            for (const Perm& w : J.cell)
                for (const Perm& y : J.cell)
                    for (const Perm& z : J.cell) {
                        auto [Pw, Qw] = pq[w];
                        auto [Py, Qy] = pq[y];
                        auto [Pz, Qz] = pq[z];
                        Tableau Aw = conv[0] == 'P' ? Pw : Qw, Bw = conv[0] == 'P' ? Qw : Pw;
                        Tableau Ay = conv[0] == 'P' ? Py : Qy, By = conv[0] == 'P' ? Qy : Py;
                        Tableau Az = conv[0] == 'P' ? Pz : Qz, Bz = conv[0] == 'P' ? Qz : Pz;
                        Int expected = (Bw == Ay && Az == Aw && Bz == By) ? 1 : 0;
                        Int got = g(w, y, z);
                        if (use_abs && got < 0) got = -got;
                        if (got != expected) ok = false;
                    }
            if (ok) {
                J.matrix_unit_convention = std::string(conv) + (use_abs ? "|abs" : "");
                return J;
            }
        }
    }
    J.matrix_unit_convention = "";
    return J;
}

}  // namespace mira
