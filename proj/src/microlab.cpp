#include "mira/microlab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mira/mrsk.hpp"

namespace mira {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

long long rand_fp(std::uint64_t& state, long long p) {
    return static_cast<long long>(splitmix64(state) % static_cast<std::uint64_t>(p));
}

FpMat mat_pow(const FpMat& u, int e, long long p) {
    int n = static_cast<int>(u.size());
    FpMat r = fp_identity(n);
    for (int k = 0; k < e; ++k) r = fp_mul(r, u, p);
    return r;
}

// Subtract pivot-row multiples so that x vanishes on the pivot columns of the
// row-reduced basis `sub`; the result represents x in V / span(sub).
FpVec reduce_mod(const FpMat& sub, const std::vector<int>& pivots, FpVec x, long long p) {
    for (size_t r = 0; r < sub.size(); ++r) {
        long long c = x[pivots[r]] % p;
        if (c == 0) continue;
        for (size_t j = 0; j < x.size(); ++j) x[j] = ((x[j] - c * sub[r][j]) % p + p) % p;
    }
    return x;
}

}  // namespace

Partition jordan_type(const FpMat& u, long long p) {
    int n = static_cast<int>(u.size());
    if (n == 0) return Partition{};
    if (fp_rank(mat_pow(u, n, p), p) != 0) throw std::invalid_argument("jordan_type: not nilpotent");
    std::vector<int> ranks;  // rank u^0 .. u^n
    for (int j = 0; j <= n; ++j) ranks.push_back(fp_rank(mat_pow(u, j, p), p));
    std::vector<int> conj;
    for (int j = 1; j <= n; ++j) {
        int parts_ge_j = ranks[j - 1] - ranks[j];
        if (parts_ge_j > 0) conj.push_back(parts_ge_j);
    }
    return Partition(conj).conjugate();
}

FpMat cyclic_span(const FpMat& u, const FpVec& v, long long p) {
    int n = static_cast<int>(v.size());
    FpMat rows;
    FpVec x = v;
    for (int k = 0; k < n; ++k) {
        rows.push_back(x);
        x = fp_apply(u, x, p);
    }
    fp_rref(rows, p);
    return rows;
}

Partition restricted_type(const FpMat& u, const FpMat& sub_rows, long long p) {
    FpMat basis = sub_rows;
    fp_rref(basis, p);
    int m = static_cast<int>(basis.size());
    FpMat op(m, FpVec(m, 0));
    for (int r = 0; r < m; ++r) {
        auto coords = fp_express(basis, fp_apply(u, basis[r], p), p);
        if (!coords) throw std::logic_error("restricted_type: subspace not stable");
        for (int s = 0; s < m; ++s) op[s][r] = (*coords)[s];
    }
    return jordan_type(op, p);
}

Partition quotient_type_by(const FpMat& u, const FpMat& sub_rows, long long p) {
    int n = static_cast<int>(u.size());
    FpMat basis = sub_rows;
    std::vector<int> pivots = fp_rref(basis, p);
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    int m = static_cast<int>(free_cols.size());
    FpMat op(m, FpVec(m, 0));
    for (int c = 0; c < m; ++c) {
        FpVec e(n, 0);
        e[free_cols[c]] = 1;
        FpVec y = reduce_mod(basis, pivots, fp_apply(u, e, p), p);
        for (int r = 0; r < m; ++r) op[r][c] = y[free_cols[r]];
    }
    return jordan_type(op, p);
}

Partition quotient_type(const FpMat& u, const FpVec& v, long long p) {
    return quotient_type_by(u, cyclic_span(u, v, p), p);
}

PartitionPair classify_nv(const FpMat& u, const FpVec& v, long long p) {
    int n = static_cast<int>(u.size());
    if (n == 0) return {Partition{}, Partition{}};
    (void)jordan_type(u, p);  // nilpotency check
    // centralizer: uz = zu as a linear system in the entries z_{r,s}
    FpMat sys(n * n, FpVec(n * n, 0));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            FpVec& row = sys[k * n + l];
            for (int r = 0; r < n; ++r) row[r * n + l] = (row[r * n + l] + u[k][r]) % p;
            for (int s = 0; s < n; ++s) row[k * n + s] = ((row[k * n + s] - u[s][l]) % p + p) % p;
        }
    FpMat cent = fp_nullspace(sys, p);
    FpMat orbit_rows;
    for (const FpVec& zflat : cent) {
        FpMat z(n, FpVec(n));
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) z[r][s] = zflat[r * n + s];
        orbit_rows.push_back(fp_apply(z, v, p));
    }
    fp_rref(orbit_rows, p);
    return {restricted_type(u, orbit_rows, p), quotient_type_by(u, orbit_rows, p)};
}

std::pair<FpMat, FpVec> construct_nv(const Partition& lambda, const Partition& mu,
                                     long long /*p*/) {
    Partition nu = lambda + mu;
    int n = nu.size();
    FpMat u = fp_zero(n, n);
    FpVec v(n, 0);
    int base = 0;
    for (int i = 1; i <= nu.num_parts(); ++i) {
        // block i occupies coordinates base .. base+nu_i-1 as e_{i,1}..e_{i,nu_i}
        for (int j = 2; j <= nu.part(i); ++j) u[base + j - 2][base + j - 1] = 1;
        if (lambda.part(i) >= 1) v[base + lambda.part(i) - 1] = 1;
        base += nu.part(i);
    }
    return {u, v};
}

StdPoint standard_point(const ColoredPerm& tw, long long /*p*/) {
    int n = tw.n();
    StdPoint s;
    s.f1 = fp_identity(n);
    s.f2 = fp_zero(n, n);
    for (int j = 1; j <= n; ++j) s.f2[j - 1][tw.w[j - 1] - 1] = 1;
    s.v = FpVec(n, 0);
    for (int i : tw.beta) s.v[tw.w[i - 1] - 1] = 1;
    return s;
}

namespace {

// Index pairs (k,l), 1-based, of the matrix entries allowed in the stabilizer
// algebra of the standard flag pair: k <= l and w^{-1}(k) <= w^{-1}(l).
std::vector<std::pair<int, int>> stabilizer_pairs(const ColoredPerm& tw) {
    int n = tw.n();
    Perm winv = perm_inverse(tw.w);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            if (k <= l && winv[k - 1] <= winv[l - 1]) pairs.emplace_back(k, l);
    return pairs;
}

// The conormal space at the standard point, as the kernel of the moment-map
// system in the coordinates (strict-u1 entries, strict-u2 entries, v*).
struct ConormalSystem {
    std::vector<std::pair<int, int>> u1_pairs, u2_pairs;  // 1-based entry indices
    FpMat kernel;                                         // rows = basis vectors
    StdPoint base;
};

ConormalSystem conormal_system(const ColoredPerm& tw, long long p) {
    int n = tw.n();
    ConormalSystem cs;
    cs.base = standard_point(tw, p);
    Perm winv = perm_inverse(tw.w);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            if (k < l) cs.u1_pairs.emplace_back(k, l);
            if (winv[k - 1] < winv[l - 1]) cs.u2_pairs.emplace_back(k, l);
        }
    int n1 = static_cast<int>(cs.u1_pairs.size()), n2 = static_cast<int>(cs.u2_pairs.size());
    int vars = n1 + n2 + n;
    FpMat sys = fp_zero(n * n, vars);
    for (int a = 0; a < n1; ++a) {
        auto [k, l] = cs.u1_pairs[a];
        sys[(k - 1) * n + (l - 1)][a] = 1;
    }
    for (int a = 0; a < n2; ++a) {
        auto [k, l] = cs.u2_pairs[a];
        sys[(k - 1) * n + (l - 1)][n1 + a] = 1;
    }
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            sys[(k - 1) * n + (l - 1)][n1 + n2 + (l - 1)] = cs.base.v[k - 1] % p;
    cs.kernel = fp_nullspace(sys, p);
    int dim_x = 2 * (n * (n - 1) / 2) + n;
    int expected = dim_x - (n * (n - 1) / 2 + rb_length(tw));
    if (static_cast<int>(cs.kernel.size()) != expected)
        throw std::logic_error("conormal_system: unexpected fiber dimension");
    return cs;
}

ConormalSample assemble_sample(const ConormalSystem& cs, const FpVec& coords,
                               const ColoredPerm& tw, long long p) {
    int n = tw.n();
    int n1 = static_cast<int>(cs.u1_pairs.size()), n2 = static_cast<int>(cs.u2_pairs.size());
    ConormalSample s;
    s.tw = tw;
    s.p = p;
    s.v = cs.base.v;
    s.u1 = fp_zero(n, n);
    s.u2 = fp_zero(n, n);
    s.v_star = FpVec(n, 0);
    for (int a = 0; a < n1; ++a) s.u1[cs.u1_pairs[a].first - 1][cs.u1_pairs[a].second - 1] = coords[a];
    for (int a = 0; a < n2; ++a)
        s.u2[cs.u2_pairs[a].first - 1][cs.u2_pairs[a].second - 1] = coords[n1 + a];
    for (int l = 0; l < n; ++l) s.v_star[l] = coords[n1 + n2 + l];

    // invariants: the moment-map equation and the constraint-table rows
    std::set<int> marked_values;  // w(beta), 0-based
    for (int i : tw.beta) marked_values.insert(tw.w[i - 1] - 1);
    for (int l : marked_values)
        if (s.v_star[l] != 0) throw std::logic_error("conormal sample: v* nonzero on w(beta)");
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            long long sum = (s.u1[k][l] + s.u2[k][l] + s.v[k] * s.v_star[l]) % p;
            if (sum != 0) throw std::logic_error("conormal sample: moment map violated");
            long long u12 = (s.u1[k][l] + s.u2[k][l]) % p;
            long long want = marked_values.count(k) ? (p - s.v_star[l] % p) % p : 0;
            if (u12 != want) throw std::logic_error("conormal sample: constraint table violated");
        }
    if (cyclic_span(s.u1, s.v, p) != cyclic_span(s.u2, s.v, p))
        throw std::logic_error("conormal sample: cyclic spans differ");
    if (quotient_type(s.u1, s.v, p) != quotient_type(s.u2, s.v, p))
        throw std::logic_error("conormal sample: quotient types differ");
    return s;
}

}  // namespace

int orbit_dim(const ColoredPerm& tw, long long p) {
    int n = tw.n();
    StdPoint sp = standard_point(tw, p);
    auto pairs = stabilizer_pairs(tw);
    // a v = 0 for a supported on the allowed pairs
    FpMat sys = fp_zero(n, static_cast<int>(pairs.size()));
    for (size_t c = 0; c < pairs.size(); ++c) sys[pairs[c].first - 1][c] = sp.v[pairs[c].second - 1];
    int ann = static_cast<int>(fp_nullspace(sys, p).size());
    return n * n - ann;
}

ConormalSample sample_conormal(const ColoredPerm& tw, long long p, std::uint64_t seed) {
    ConormalSystem cs = conormal_system(tw, p);
    int vars = static_cast<int>(cs.u1_pairs.size() + cs.u2_pairs.size()) + tw.n();
    FpVec coords(vars, 0);
    std::uint64_t state = seed;
    for (const FpVec& basis_vec : cs.kernel) {
        long long c = rand_fp(state, p);
        for (int j = 0; j < vars; ++j) coords[j] = (coords[j] + c * basis_vec[j]) % p;
    }
    return assemble_sample(cs, coords, tw, p);
}

CellTriple empirical_triple(const ColoredPerm& tw, long long p, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("empirical_triple: trials >= 1");
    std::vector<CellTriple> seen;
    std::uint64_t root = seed;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = splitmix64(root);
        ConormalSample s = sample_conormal(tw, p, trial_seed);
        // nu labels the second endomorphism, nu' the first (the label triple
        // of the insertion algorithm uses this orientation).
        CellTriple observed{jordan_type(s.u2, p), quotient_type(s.u1, s.v, p),
                            jordan_type(s.u1, p)};
        if (std::find(seen.begin(), seen.end(), observed) == seen.end())
            seen.push_back(observed);
    }
    // generic samples dominate: larger nu, nu' in dominance order, and a
    // smaller (then dominance-larger) theta
    auto at_least = [](const CellTriple& a, const CellTriple& b) {
        if (!a.nu.dominates(b.nu) || !a.nu_prime.dominates(b.nu_prime)) return false;
        if (a.theta.size() != b.theta.size()) return a.theta.size() < b.theta.size();
        return a.theta.dominates(b.theta);
    };
    CellTriple best = seen.front();
    for (const CellTriple& t : seen)
        if (at_least(t, best)) best = t;
    for (const CellTriple& t : seen)
        if (!at_least(best, t))
            throw std::logic_error("empirical_triple: dominance-incomparable observations");
    return best;
}

std::vector<Flag> all_flags(int N, int q) {
    // all vectors of F_q^N
    std::vector<FpVec> vectors;
    int total = 1;
    for (int k = 0; k < N; ++k) total *= q;
    for (int code = 0; code < total; ++code) {
        FpVec x(N);
        int c = code;
        for (int k = 0; k < N; ++k) {
            x[k] = c % q;
            c /= q;
        }
        vectors.push_back(std::move(x));
    }
    std::vector<Flag> level = {{}};
    for (int k = 1; k <= N; ++k) {
        std::vector<Flag> next;
        for (const Flag& chain : level) {
            FpMat top = chain.empty() ? FpMat{} : chain.back();
            std::set<FpMat> extensions;
            for (const FpVec& x : vectors) {
                if (!top.empty() ? fp_in_span(top, x, q)
                                 : std::all_of(x.begin(), x.end(), [](long long a) { return a == 0; }))
                    continue;
                FpMat bigger = top;
                bigger.push_back(x);
                fp_rref(bigger, q);
                extensions.insert(bigger);
            }
            for (const FpMat& ext : extensions) {
                Flag longer = chain;
                longer.push_back(ext);
                next.push_back(std::move(longer));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

Perm flag_position(const Flag& f1, const Flag& f2, int q) {
    int N = static_cast<int>(f1.size());
    auto r = [&](int i, int j) -> int {
        if (i == 0 || j == 0) return 0;
        return fp_intersect_dim(f1[i - 1], f2[j - 1], q);
    };
    Perm w(N, 0);
    for (int j = 1; j <= N; ++j)
        for (int i = 1; i <= N; ++i)
            if (r(i, j) - r(i - 1, j) - r(i, j - 1) + r(i - 1, j - 1) == 1) {
                w[j - 1] = i;
                break;
            }
    if (!is_permutation(w)) throw std::logic_error("flag_position: degenerate rank table");
    return w;
}

ColoredPerm orbit_of(const Flag& f1, const Flag& f2, const FpVec& v, int q) {
    int N = static_cast<int>(f1.size());
    Perm w = flag_position(f1, f2, q);
    bool v_zero = std::all_of(v.begin(), v.end(), [](long long a) { return a == 0; });
    if (v_zero) return ColoredPerm{w, {}};
    // stabilizer algebra of the flag pair: a f_k ⊆ f_k for both flags
    FpMat sys;
    for (const Flag* f : {&f1, &f2})
        for (int k = 1; k <= N; ++k) {
            FpMat ann = fp_nullspace((*f)[k - 1], q);
            for (const FpVec& phi : ann)
                for (const FpVec& b : (*f)[k - 1]) {
                    FpVec row(N * N, 0);
                    for (int r = 0; r < N; ++r)
                        for (int s = 0; s < N; ++s) row[r * N + s] = phi[r] * b[s] % q;
                    sys.push_back(std::move(row));
                }
        }
    FpMat stab = fp_nullspace(sys, q);
    FpMat orbit_rows;
    for (const FpVec& aflat : stab) {
        FpVec av(N, 0);
        for (int r = 0; r < N; ++r) {
            long long s = 0;
            for (int c = 0; c < N; ++c) s = (s + aflat[r * N + c] * v[c]) % q;
            av[r] = s;
        }
        orbit_rows.push_back(std::move(av));
    }
    fp_rref(orbit_rows, q);
    Perm winv = perm_inverse(w);
    std::vector<int> beta;
    int prev = 0;
    for (int i = 1; i <= N; ++i) {
        int d = orbit_rows.empty() ? 0 : fp_intersect_dim(orbit_rows, f1[i - 1], q);
        if (d > prev) beta.push_back(winv[i - 1]);
        prev = d;
    }
    std::sort(beta.begin(), beta.end());
    return ColoredPerm{w, beta};
}

namespace {

Flag flag_of_rows(const FpMat& rows, int q) {
    Flag f;
    for (size_t k = 1; k <= rows.size(); ++k) {
        FpMat step(rows.begin(), rows.begin() + k);
        fp_rref(step, q);
        f.push_back(std::move(step));
    }
    return f;
}

struct FqContext {
    std::vector<ColoredPerm> orbits;
    std::map<ColoredPerm, int> orbit_idx;
    std::vector<Flag> flags;
    // indexed [orbit][flag]
    std::vector<std::vector<ColoredPerm>> right_orb, left_orb;
    std::vector<std::vector<Perm>> right_pos, left_pos;
};

const FqContext& fq_context(int N, int q) {
    static std::map<std::pair<int, int>, FqContext> cache;
    auto key = std::make_pair(N, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FqContext ctx;
    ctx.orbits = enumerate_rb(N);
    for (size_t z = 0; z < ctx.orbits.size(); ++z) ctx.orbit_idx[ctx.orbits[z]] = static_cast<int>(z);
    ctx.flags = all_flags(N, q);
    for (const ColoredPerm& z : ctx.orbits) {
        StdPoint sp = standard_point(z, q);
        for (auto& row : sp.v) row %= q;
        Flag f1z = flag_of_rows(sp.f1, q), f2z = flag_of_rows(sp.f2, q);
        std::vector<ColoredPerm> ro, lo;
        std::vector<Perm> rp, lp;
        for (const Flag& f : ctx.flags) {
            ro.push_back(orbit_of(f1z, f, sp.v, q));
            rp.push_back(flag_position(f, f2z, q));
            lo.push_back(orbit_of(f, f2z, sp.v, q));
            lp.push_back(flag_position(f1z, f, q));
        }
        ctx.right_orb.push_back(std::move(ro));
        ctx.right_pos.push_back(std::move(rp));
        ctx.left_orb.push_back(std::move(lo));
        ctx.left_pos.push_back(std::move(lp));
    }
    return cache[key] = std::move(ctx);
}

}  // namespace

std::map<ColoredPerm, long long> fq_convolution(int N, int q, const ColoredPerm& tw, int i,
                                                Side side) {
    if (N > 3 || (q != 2 && q != 3)) throw std::invalid_argument("fq_convolution: size limits");
    const FqContext& ctx = fq_context(N, q);
    Perm si = right_simple(perm_identity(N), i);
    std::map<ColoredPerm, long long> out;
    for (size_t z = 0; z < ctx.orbits.size(); ++z) {
        long long count = 0;
        for (size_t f = 0; f < ctx.flags.size(); ++f) {
            if (side == Side::Right) {
                if (ctx.right_orb[z][f] == tw && ctx.right_pos[z][f] == si) ++count;
            } else {
                if (ctx.left_pos[z][f] == si && ctx.left_orb[z][f] == tw) ++count;
            }
        }
        if (count != 0) out[ctx.orbits[z]] = count;
    }
    return out;
}

std::vector<int> cocharacter(const ColoredPerm& tw) {
    int n = tw.n();
    std::vector<int> k(n, 0);
    std::set<int> beta_r(tw.beta.begin(), tw.beta.end()), gamma_r;
    for (int i = 1; i <= n; ++i)
        if (!beta_r.count(i)) gamma_r.insert(i);
    for (int r = 1; !beta_r.empty() || !gamma_r.empty(); ++r) {
        std::vector<int> sigma_r, delta_r;
        for (int i : beta_r) {
            bool top = true;
            for (int j : beta_r)
                if (j > i && tw.w[j - 1] > tw.w[i - 1]) top = false;
            if (top) sigma_r.push_back(i);
        }
        for (int i : gamma_r) {
            bool bottom = true;
            for (int j : gamma_r)
                if (j < i && tw.w[j - 1] < tw.w[i - 1]) bottom = false;
            if (bottom) delta_r.push_back(i);
        }
        for (int i : sigma_r) {
            k[i - 1] = 1 - r;
            beta_r.erase(i);
        }
        for (int i : delta_r) {
            k[i - 1] = r;
            gamma_r.erase(i);
        }
    }
    for (int i : sigma_of(tw))
        if (k[i - 1] != 0) throw std::logic_error("cocharacter: nonzero weight on sigma");
    return k;
}

std::vector<ZDimReport> ztype_dim_report(int N, long long p, std::uint64_t seed) {
    std::map<CellTriple, int> best;
    std::uint64_t root = seed;
    for (const ColoredPerm& tw : enumerate_rb(N)) {
        CellTriple t = mirabolic_rsk(tw).triple;
        ConormalSystem cs = conormal_system(tw, p);
        int n1 = static_cast<int>(cs.u1_pairs.size()), n2 = static_cast<int>(cs.u2_pairs.size());
        int vars = n1 + n2 + N;
        int coord_dim = 2 * N * N + 2 * N;  // (u1, u2, v, v*) ambient coordinates
        for (int rep = 0; rep < 3; ++rep) {
            FpVec coords(vars, 0);
            for (const FpVec& basis_vec : cs.kernel) {
                long long c = rand_fp(root, p);
                for (int j = 0; j < vars; ++j) coords[j] = (coords[j] + c * basis_vec[j]) % p;
            }
            ConormalSample s = assemble_sample(cs, coords, tw, p);
            FpMat tangent;
            // GL-action directions: ([E,u1], [E,u2], Ev, -E^T v*) for E = E_{a,b}
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    FpVec row(coord_dim, 0);
                    for (int l = 0; l < N; ++l) {
                        row[a * N + l] = ((s.u1[b][l] % p) + p) % p;
                        row[N * N + a * N + l] = ((s.u2[b][l] % p) + p) % p;
                    }
                    for (int kk = 0; kk < N; ++kk) {
                        row[kk * N + b] = ((row[kk * N + b] - s.u1[kk][a]) % p + p) % p;
                        row[N * N + kk * N + b] =
                            ((row[N * N + kk * N + b] - s.u2[kk][a]) % p + p) % p;
                    }
                    row[2 * N * N + a] = s.v[b] % p;
                    row[2 * N * N + N + b] = (p - s.v_star[a] % p) % p;
                    tangent.push_back(std::move(row));
                }
            // fiber directions (flags fixed, so dv = 0)
            for (const FpVec& basis_vec : cs.kernel) {
                FpVec row(coord_dim, 0);
                for (int a = 0; a < n1; ++a)
                    row[(cs.u1_pairs[a].first - 1) * N + (cs.u1_pairs[a].second - 1)] = basis_vec[a];
                for (int a = 0; a < n2; ++a)
                    row[N * N + (cs.u2_pairs[a].first - 1) * N + (cs.u2_pairs[a].second - 1)] =
                        basis_vec[n1 + a];
                for (int l = 0; l < N; ++l) row[2 * N * N + N + l] = basis_vec[n1 + n2 + l];
                tangent.push_back(std::move(row));
            }
            int rank = fp_rank(tangent, p);
            auto it = best.find(t);
            if (it == best.end() || rank > it->second) best[t] = rank;
        }
    }
    std::vector<ZDimReport> out;
    for (const auto& [t, observed] : best) {
        ZDimReport r;
        r.triple = t;
        r.expected = static_cast<int>(N * N - t.nu.n_stat() - t.nu_prime.n_stat());
        r.observed_max = observed;
        r.attained = (r.observed_max == r.expected);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace mira
