#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mira/hecke.hpp"
#include "mira/laurent.hpp"
#include "mira/mrsk.hpp"
#include "mira/rbperm.hpp"
#include "mira/young.hpp"

namespace mira {

// An element of the Hecke bimodule on colored permutations, as a finite
// support map label -> Laurent coefficient.  Basis (T or H) is by context;
// H_tw = (-v)^{-l(tw)} T_tw.
using RTerms = std::map<ColoredPerm, Laurent>;

RTerms rt_to_h(const RTerms& t_terms);
RTerms rh_to_t(const RTerms& h_terms);

// Generator action in the T basis (right: the five-case table; left: via the
// inversion anti-automorphism).
RTerms act_t(const RTerms& x, int i, Side side);

// Generator action in the H basis, by H_{s_i} or Htilde_{s_i} = H_{s_i} - v^{-1}.
RTerms act_h(const RTerms& x, int i, Side side, bool tilde);

// Kazhdan-Lusztig basis of the bimodule: Htilde_tw = H_tw + sum p_{tw,y} H_y
// with p in v^{-1} Z[v^{-1}], bar-invariant.  `shuffled` picks predecessors in
// the reverse search order; the resulting table must be identical.
class RKLTable {
public:
    explicit RKLTable(int N, bool shuffled = false);
    // Rebuild from a cached expansion table (validated lazily via bar()).
    RKLTable(int N, std::map<ColoredPerm, RTerms> table);

    int n() const { return n_; }
    const std::vector<ColoredPerm>& elements() const { return elements_; }
    const RTerms& kl(const ColoredPerm& tw) const;
    const std::map<ColoredPerm, RTerms>& table() const { return kl_; }

    // Bar involution in the H basis.
    RTerms bar(const RTerms& x) const;

    // Coordinates in the KL basis.
    std::map<ColoredPerm, Laurent> kl_expand(const RTerms& x) const;

    // |coefficient of v^{-1}| in p between the two labels; symmetric.
    Int mu_abs(const ColoredPerm& a, const ColoredPerm& b) const;

private:
    int n_;
    std::vector<ColoredPerm> elements_;  // sorted by (length, w, beta)
    std::map<ColoredPerm, RTerms> kl_;
    // reachability: tw -> (predecessor, generator, side); base elements absent
    std::map<ColoredPerm, std::tuple<ColoredPerm, int, Side>> pred_;
    mutable std::map<ColoredPerm, RTerms> bar_basis_;

    void index_elements();
    void find_predecessors();
    const RTerms& bar_of_basis(const ColoredPerm& tw) const;
};

// W-graph: vertex labels "sR<i>" (tw in Phi_i) and "sL<i>" (inverse in Phi_i);
// edges between label-distinct pairs with nonzero mu.
struct WGraphVertex {
    ColoredPerm tw;
    std::vector<std::string> labels;
};
struct WGraphEdge {
    ColoredPerm a, b;  // a < b
    Int mu;
};
struct WGraph {
    std::vector<WGraphVertex> vertices;
    std::vector<WGraphEdge> edges;
};

WGraph w_graph(const RKLTable& table);

// Htilde_tw * Htilde_{s_i} (or the left product) computed from the graph data
// alone, in KL coordinates: -(v+v^{-1}) Htilde_tw on a label, otherwise
// Htilde_{tw*s} plus mu-weighted labelled neighbors.
std::map<ColoredPerm, Laurent> hkl_via_graph(const WGraph& g, const ColoredPerm& tw, int i,
                                             Side side);

// KL cells: strongly connected components of the generator-action support
// graph (CellSide::TwoSided = both actions).
std::vector<std::vector<ColoredPerm>> r_kl_cells(const RKLTable& table, CellSide side);

// |RB_N| = sum over triples of f_nu * f_nu'.
struct RankIdentity {
    long long rb_count = 0;
    long long triple_sum = 0;
    std::vector<std::pair<CellTriple, long long>> contributions;
    bool ok = false;
};
RankIdentity rank_identity_check(int N);

// Asymptotic bimodule attached to a diagonal cell key (nu, theta, nu):
// leading structure constants of the KL action of the classical cell c_nu on
// the bimodule cell, with the matrix-unit identification attempt.
struct AsymptoticReport {
    CellTriple triple;
    long long a_nu = 0;
    std::vector<ColoredPerm> cell;
    int max_degree_right = 0, max_degree_left = 0;  // observed max over all m
    bool degree_bound_holds = false;
    std::map<std::tuple<ColoredPerm, Perm, ColoredPerm>, Int> gamma_right;  // (tw, y, z)
    std::map<std::tuple<Perm, ColoredPerm, ColoredPerm>, Int> gamma_left;   // (y, tw, z)
    // orientation realizing matrix units, e.g. "T1T2|PQ" (+"|abs"); "" = none
    std::string convention;
    bool regular_bimodule_ok = false;
};

AsymptoticReport asymptotic_bimodule(const Partition& nu, const Partition& theta,
                                     const RKLTable& rtable, const KLTable& ctable);

// Reports for every diagonal triple (nu, theta, nu) realized in RB_N.
std::vector<AsymptoticReport> asymptotic_all(int N, const RKLTable& rtable,
                                             const KLTable& ctable);

// Fourier compatibility of the KL basis: the relabelling tw -> F(tw) together
// with the index conjugation s_i -> s_{N-i} is an isomorphism of the W-graph
// (descent labels and mu coefficients are preserved).
bool fourier_kl_check(const RKLTable& table);

// Structure constants: coefficient of Htilde_{tw''} in Htilde_tw * Htilde_{s_i}
// matches the same for (F(tw), s_{N-i}, F(tw'')); both sides.
bool fourier_structure_check(const RKLTable& table);

}  // namespace mira
