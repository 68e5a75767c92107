#include "mira/rbperm.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mira {

bool ColoredPerm::in_beta(int i) const {
    return std::binary_search(beta.begin(), beta.end(), i);
}

std::string ColoredPerm::to_string() const {
    std::string s = "w=";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w[i]);
    }
    s += "; b=";
    for (size_t i = 0; i < beta.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(beta[i]);
    }
    return s;
}

bool rb_is_valid(const Perm& w, const std::vector<int>& beta) {
    if (!is_permutation(w)) return false;
    if (!std::is_sorted(beta.begin(), beta.end())) return false;
    for (int b : beta)
        if (b < 1 || b > static_cast<int>(w.size())) return false;
    if (std::adjacent_find(beta.begin(), beta.end()) != beta.end()) return false;
    std::vector<bool> marked(w.size() + 1, false);
    for (int b : beta) marked[b] = true;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        if (marked[i]) continue;
        for (int j : beta)
            if (!(i > j || w[i - 1] > w[j - 1])) return false;
    }
    return true;
}

bool rb_is_valid(const ColoredPerm& tw) { return rb_is_valid(tw.w, tw.beta); }

std::vector<int> sigma_of(const ColoredPerm& tw) {
    std::vector<int> sigma;
    for (int i : tw.beta) {
        bool ok = true;
        for (int j : tw.beta)
            if (j > i && tw.w[j - 1] > tw.w[i - 1]) ok = false;
        if (ok) sigma.push_back(i);
    }
    return sigma;
}

std::vector<int> beta_of(const Perm& w, const std::vector<int>& sigma) {
    for (size_t a = 0; a < sigma.size(); ++a)
        for (size_t b = a + 1; b < sigma.size(); ++b)
            if (sigma[a] < sigma[b] && w[sigma[a] - 1] <= w[sigma[b] - 1])
                throw std::invalid_argument("beta_of: sigma must be decreasing in w");
    std::vector<int> beta;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        for (int j : sigma)
            if (j >= i && w[j - 1] >= w[i - 1]) {
                beta.push_back(i);
                break;
            }
    return beta;
}

namespace {
void subsets_rec(int from, int N, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int x = from; x <= N; ++x) {
        cur.push_back(x);
        subsets_rec(x + 1, N, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<ColoredPerm> enumerate_rb(int N) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    subsets_rec(1, N, cur, subsets);
    std::sort(subsets.begin(), subsets.end());
    std::vector<ColoredPerm> out;
    for (const Perm& w : all_permutations(N))
        for (const auto& b : subsets)
            if (rb_is_valid(w, b)) out.push_back({w, b});
    return out;
}

ColoredPerm rb_inverse(const ColoredPerm& tw) {
    std::vector<int> b;
    for (int i : tw.beta) b.push_back(tw.w[i - 1]);
    std::sort(b.begin(), b.end());
    return {perm_inverse(tw.w), std::move(b)};
}

int rb_length(const ColoredPerm& tw) {
    int extra = 0;
    for (int i = 1; i <= tw.n(); ++i)
        for (int ip : tw.beta)
            if (i <= ip && tw.w[i - 1] <= tw.w[ip - 1]) {
                ++extra;
                break;
            }
    return coxeter_length(tw.w) + extra;
}

ColoredPerm rb_base(int N, int k) {
    std::vector<int> b(k);
    for (int i = 0; i < k; ++i) b[i] = i + 1;
    return {perm_identity(N), std::move(b)};
}

bool phi(const ColoredPerm& tw, int i) {
    if (i < 1 || i >= tw.n()) throw std::out_of_range("phi: index out of range");
    if (!(tw.w[i - 1] > tw.w[i])) return false;
    return !(tw.in_beta(i) && !tw.in_beta(i + 1));
}

namespace {
std::vector<int> apply_simple(const std::vector<int>& beta, int i) {
    std::vector<int> b;
    for (int x : beta) b.push_back(x == i ? i + 1 : (x == i + 1 ? i : x));
    std::sort(b.begin(), b.end());
    return b;
}

std::vector<int> toggle(const std::vector<int>& beta, int x) {
    std::vector<int> b = beta;
    auto it = std::lower_bound(b.begin(), b.end(), x);
    if (it != b.end() && *it == x)
        b.erase(it);
    else
        b.insert(it, x);
    return b;
}
}  // namespace

GenCase right_gen_case(const ColoredPerm& tw, int i) {
    if (i < 1 || i >= tw.n()) throw std::out_of_range("right_gen_case: index out of range");
    GenCase gc;
    Perm ws = right_simple(tw.w, i);
    std::vector<int> sbeta = apply_simple(tw.beta, i);
    gc.tws = {ws, sbeta};
    if (tw.w[i - 1] < tw.w[i]) {  // ascent
        // The product forks exactly when both i and i+1 are active in the
        // ascended symbol; this predicate is pinned down by the finite-field
        // convolution oracle (see the microlab tests).
        auto sp = sigma_of(gc.tws);
        if (std::binary_search(sp.begin(), sp.end(), i) &&
            std::binary_search(sp.begin(), sp.end(), i + 1)) {
            gc.id = 2;
            gc.tws_fork = {ws, toggle(sbeta, i + 1)};
            assert(rb_is_valid(gc.tws_fork));
        } else {
            gc.id = 1;
        }
        assert(rb_is_valid(gc.tws));
        return gc;
    }
    // descent
    bool bi = tw.in_beta(i), bi1 = tw.in_beta(i + 1);
    if (bi && !bi1) {
        gc.id = 3;
        gc.twp = {tw.w, toggle(tw.beta, i + 1)};
        gc.twps = {ws, apply_simple(gc.twp.beta, i)};
        assert(rb_is_valid(gc.twp) && rb_is_valid(gc.twps));
        return gc;
    }
    auto sg = sigma_of(tw);
    if (std::binary_search(sg.begin(), sg.end(), i) &&
        std::binary_search(sg.begin(), sg.end(), i + 1)) {
        gc.id = 5;
        gc.twp = {tw.w, toggle(tw.beta, i + 1)};
        assert(rb_is_valid(gc.twp) && rb_is_valid(gc.tws));
        return gc;
    }
    gc.id = 4;
    assert(rb_is_valid(gc.tws));
    return gc;
}

ColoredPerm star(const ColoredPerm& tw, int i, Side side) {
    if (side == Side::Left) return rb_inverse(star(rb_inverse(tw), i, Side::Right));
    if (phi(tw, i)) return tw;
    GenCase gc = right_gen_case(tw, i);
    std::vector<ColoredPerm> support;
    switch (gc.id) {
        case 1: support = {gc.tws}; break;
        case 2: support = {gc.tws, gc.tws_fork}; break;
        case 3: support = {gc.twp, gc.twps}; break;
        default:
            // phi(tw,i) == false forces an ascent or the case-3 pattern.
            throw std::logic_error("star: unexpected case outside Phi_i");
    }
    ColoredPerm best = support[0];
    int best_len = rb_length(best);
    for (size_t k = 1; k < support.size(); ++k) {
        int l = rb_length(support[k]);
        assert(l != best_len);  // the eq_expl supports have distinct lengths
        if (l > best_len) {
            best = support[k];
            best_len = l;
        }
    }
    return best;
}

namespace {
// Apply the K_i case table to `a` in the forward direction; returns the
// partner for the first matching case, or nothing.
std::optional<ColoredPerm> k_forward(const ColoredPerm& a, int i) {
    int wi = a.w[i - 1], wi1 = a.w[i], wi2 = a.w[i + 1];
    std::vector<int> inter;
    for (int x : {i, i + 1, i + 2})
        if (a.in_beta(x)) inter.push_back(x);
    auto is = [&](std::initializer_list<int> xs) {
        return inter == std::vector<int>(xs);
    };
    bool empt = inter.empty();
    if (wi < wi2 && wi2 < wi1) {  // case 1
        if (empt || is({i}) || is({i, i + 2}) || is({i, i + 1, i + 2}))
            return ColoredPerm{right_simple(a.w, i), apply_simple(a.beta, i)};
    }
    if (wi2 < wi && wi < wi1) {  // cases 2 and 4
        if (empt || is({i + 2}) || is({i, i + 2}) || is({i, i + 1, i + 2}))
            return ColoredPerm{right_simple(a.w, i + 1), apply_simple(a.beta, i + 1)};
        if (is({i}))
            return ColoredPerm{right_simple(a.w, i), apply_simple(a.beta, i)};
    }
    if (wi2 < wi1 && wi1 < wi) {  // cases 3 and 5
        if (is({i, i + 2}))
            return ColoredPerm{right_simple(a.w, i + 1), apply_simple(a.beta, i + 1)};
        if (is({i})) return ColoredPerm{a.w, toggle(a.beta, i + 1)};
    }
    return std::nullopt;
}
}  // namespace

std::optional<ColoredPerm> k_move(const ColoredPerm& tw, int i) {
    if (i < 1 || i + 1 >= tw.n()) throw std::out_of_range("k_move: index out of range");
    std::set<ColoredPerm> found;
    if (auto f = k_forward(tw, i); f && rb_is_valid(*f) && *f != tw) found.insert(*f);
    // backward direction: candidates c with k_forward(c) == tw
    std::vector<ColoredPerm> cands = {
        {right_simple(tw.w, i), apply_simple(tw.beta, i)},
        {right_simple(tw.w, i + 1), apply_simple(tw.beta, i + 1)},
        {tw.w, toggle(tw.beta, i + 1)},
    };
    for (const auto& c : cands) {
        if (c == tw || !rb_is_valid(c)) continue;
        if (auto f = k_forward(c, i); f && *f == tw) found.insert(c);
    }
    assert(found.size() <= 1);
    if (found.empty()) return std::nullopt;
    return *found.begin();
}

ColoredPerm rb_fourier(const ColoredPerm& tw) {
    int N = tw.n();
    Perm w0 = longest_element(N);
    Perm nw = perm_mul(perm_mul(w0, tw.w), w0);
    std::vector<bool> marked(N + 1, false);
    for (int b : tw.beta) marked[w0[b - 1]] = true;
    std::vector<int> nb;
    for (int i = 1; i <= N; ++i)
        if (!marked[i]) nb.push_back(i);
    ColoredPerm out{nw, nb};
    assert(rb_is_valid(out));
    return out;
}

ColoredPerm parse_colored_perm(const std::string& text) {
    auto wp = text.find("w=");
    auto sp = text.find(';');
    if (wp == std::string::npos)
        throw std::invalid_argument("parse error: expected 'w=' in \"" + text + "\"");
    std::string wpart = text.substr(wp + 2, sp == std::string::npos ? std::string::npos
                                                                    : sp - (wp + 2));
    std::string bpart;
    if (sp != std::string::npos) {
        auto bp = text.find("b=", sp);
        if (bp == std::string::npos)
            throw std::invalid_argument("parse error: expected 'b=' after ';' in \"" + text + "\"");
        bpart = text.substr(bp + 2);
    }
    ColoredPerm tw;
    std::istringstream ws(wpart);
    for (int x; ws >> x;) tw.w.push_back(x);
    std::istringstream bs(bpart);
    for (int x; bs >> x;) tw.beta.push_back(x);
    std::sort(tw.beta.begin(), tw.beta.end());
    if (!is_permutation(tw.w))
        throw std::invalid_argument("parse error: w is not a permutation in \"" + text + "\"");
    if (!rb_is_valid(tw)) {
        // report one violating pair
        for (int i = 1; i <= tw.n(); ++i) {
            if (tw.in_beta(i)) continue;
            for (int j : tw.beta)
                if (!(i > j || tw.w[i - 1] > tw.w[j - 1]))
                    throw std::invalid_argument(
                        "invalid colored permutation: unmarked i=" + std::to_string(i) +
                        ", marked j=" + std::to_string(j) + " violate the validity condition");
        }
        throw std::invalid_argument("invalid colored permutation");
    }
    return tw;
}

}  // namespace mira
