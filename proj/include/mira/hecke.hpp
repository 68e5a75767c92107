#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mira/laurent.hpp"
#include "mira/mrsk.hpp"  // CellSide
#include "mira/perm.hpp"
#include "mira/tableau.hpp"

namespace mira {

// An element of the Iwahori-Hecke algebra of S_N as a finite support map
// basis-permutation -> Laurent coefficient.  The basis tag (T or H) is carried
// by context: conversion helpers are explicit.  Conventions:
//   q = v^2,  H_w = (-v)^{-l(w)} T_w,  Htilde_s = H_s - v^{-1},
//   T_w T_s = T_{ws} (ascent), (q-1)T_w + q T_{ws} (descent).
using HTerms = std::map<Perm, Laurent>;

HTerms t_to_h(const HTerms& t_terms);
HTerms h_to_t(const HTerms& h_terms);

// Right/left multiplication by the generator T_{s_i} in the T basis.
HTerms t_gen_right(const HTerms& x, int i);
HTerms t_gen_left(int i, const HTerms& x);

// Right/left multiplication by H_{s_i} or Htilde_{s_i} in the H basis.
HTerms h_gen_right(const HTerms& x, int i, bool tilde);
HTerms h_gen_left(int i, const HTerms& x, bool tilde);

// General products (H basis / T basis), via reduced words of b's support.
HTerms h_mul(const HTerms& a, const HTerms& b);
HTerms t_mul(const HTerms& a, const HTerms& b);

// Kazhdan-Lusztig basis data for S_N in the balanced H normalization:
// kl(w) = Htilde_w = H_w + sum_{y} p_{w,y} H_y with p in v^{-1} Z[v^{-1}].
class KLTable {
public:
    explicit KLTable(int N);

    int n() const { return n_; }
    const std::vector<Perm>& elements() const { return elements_; }
    const HTerms& kl(const Perm& w) const;

    // Bar involution (v -> v^{-1}, H_w -> inverse image) in the H basis.
    HTerms bar(const HTerms& x) const;

    // Coordinates of x in the KL basis.
    std::map<Perm, Laurent> kl_expand(const HTerms& x) const;

    // |coefficient of v^{-1} in p_{w,y}|; 0 when y is not in the support.
    Int mu_abs(const Perm& y, const Perm& w) const;

private:
    int n_;
    std::vector<Perm> elements_;  // sorted by (length, lex)
    std::map<Perm, HTerms> kl_;
    mutable std::map<Perm, HTerms> bar_basis_;
    const HTerms& bar_of_basis(const Perm& w) const;
};

// Left cells keyed by the RSK recording tableau, right cells by the insertion
// tableau, two-sided cells by the shape.
std::vector<std::vector<Perm>> classical_cells_rsk(int N, CellSide side);

// The same partitions computed from KL-basis products (strongly connected
// components of the generator-multiplication support graph).
std::vector<std::vector<Perm>> classical_cells_closure(const KLTable& table, CellSide side);

// Lusztig's asymptotic ring attached to the two-sided cell of shape nu.
struct JRing {
    Partition nu;
    long long a_nu = 0;
    std::vector<Perm> cell;
    // gamma[(w,y,z)] = coefficient of v^{a_nu} in the KL structure constant
    // m_{w,y,z}; zero entries omitted.
    std::map<std::tuple<Perm, Perm, Perm>, Int> gamma;
    // Which tableau-pair convention realizes gamma as matrix units:
    // "PQ" = t_w -> e_{P(w),Q(w)}, "QP" = t_w -> e_{Q(w),P(w)}, "" = neither.
    std::string matrix_unit_convention;
    bool associative = false;
};

JRing j_ring(const Partition& nu, const KLTable& table);

}  // namespace mira
