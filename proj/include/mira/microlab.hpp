#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mira/fp.hpp"
#include "mira/partition.hpp"
#include "mira/rbperm.hpp"
#include "mira/young.hpp"

namespace mira {

// SplitMix64: deterministic per-trial seeding for sampling routines.
std::uint64_t splitmix64(std::uint64_t& state);

// ---- nilpotent linear algebra over F_p -------------------------------------

// Jordan type of a nilpotent matrix (throws if u^N != 0):
// conjugate of (rank u^{j-1} - rank u^j)_j.
Partition jordan_type(const FpMat& u, long long p);

// Row-reduced basis of span{v, uv, u^2 v, ...}.
FpMat cyclic_span(const FpMat& u, const FpVec& v, long long p);

// Jordan type of u restricted to a u-stable subspace (rows span it).
Partition restricted_type(const FpMat& u, const FpMat& sub_rows, long long p);

// Jordan type of the operator induced by u on V / span(sub_rows).
Partition quotient_type_by(const FpMat& u, const FpMat& sub_rows, long long p);

// Jordan type of u on V / span{v, uv, u^2 v, ...}.
Partition quotient_type(const FpMat& u, const FpVec& v, long long p);

// Orbit classification of a pair (nilpotent u, vector v): lambda = type of u
// on Z(u)v (Z(u) = centralizer of u in gl), mu = type of u on V / Z(u)v.
PartitionPair classify_nv(const FpMat& u, const FpVec& v, long long p);

// Inverse construction: Jordan basis e_{i,j} of type nu = lambda + mu and
// v = sum_i e_{i, lambda_i}.  classify_nv(construct_nv(lambda, mu)) round-trips.
std::pair<FpMat, FpVec> construct_nv(const Partition& lambda, const Partition& mu, long long p);

// ---- orbits in Fl x Fl x V --------------------------------------------------

// Base point of the orbit labelled by tw: f1/f2 rows are flag bases in order
// (f1 the coordinate flag, f2_j spanned by e_{w(1)}..e_{w(j)}), and
// v = sum_{i in beta} e_{w(i)}.
struct StdPoint {
    FpMat f1, f2;
    FpVec v;
};

StdPoint standard_point(const ColoredPerm& tw, long long p);

// dim of the GL-orbit through the standard point:
// N^2 - dim{ a in A | a v = 0 }, A the stabilizer algebra of the flag pair.
int orbit_dim(const ColoredPerm& tw, long long p);

// A point of the conormal space at the standard point: u1 strictly preserves
// the first flag, u2 the second, and u1 + u2 + v (x) v* = 0.
struct ConormalSample {
    FpMat u1, u2;
    FpVec v, v_star;
    ColoredPerm tw;
    long long p = 0;
};

ConormalSample sample_conormal(const ColoredPerm& tw, long long p, std::uint64_t seed);

// Dominance-maximal (jordan_type(u1), quotient_type(u1,v), jordan_type(u2))
// over `trials` conormal samples; the estimator of the generic type.  Throws
// if the observed triples are dominance-incomparable.
CellTriple empirical_triple(const ColoredPerm& tw, long long p, int trials, std::uint64_t seed);

// ---- F_q convolution oracle --------------------------------------------------

// A complete flag of F_q^N: element k-1 is a row-reduced basis of the
// k-dimensional step.
using Flag = std::vector<FpMat>;

std::vector<Flag> all_flags(int N, int q);

// Relative position of two flags, via r(i,j) = dim(f1_i ∩ f2_j).
Perm flag_position(const Flag& f1, const Flag& f2, int q);

// Orbit label of a triple: w from the rank invariants, beta from the jumps of
// dim(Av ∩ f1_i) pulled back through w.
ColoredPerm orbit_of(const Flag& f1, const Flag& f2, const FpVec& v, int q);

// T-basis coefficients of T_tw * T_{s_i} (Right) or T_{s_i} * T_tw (Left),
// computed by brute-force convolution of characteristic functions over F_q.
std::map<ColoredPerm, long long> fq_convolution(int N, int q, const ColoredPerm& tw, int i,
                                                Side side);

// ---- contracting cocharacter --------------------------------------------------

// Weights (k_1..k_N) of the one-parameter subgroup contracting a neighborhood
// onto the orbit: k_i = 1-r on the r-th decreasing layer of beta, k_i = r on
// the r-th increasing layer of the complement.  k_i = 0 on sigma(tw).
std::vector<int> cocharacter(const ColoredPerm& tw);

// ---- dimension report ----------------------------------------------------------

// For each RSK triple t realized in RB_N, compare the expected dimension
// N^2 - n(nu) - n(nu') with the rank of the sampled variety parameterization
// (GL-action vectors plus conormal-fiber directions), maximized over the tw
// mapping to t.
struct ZDimReport {
    CellTriple triple;
    int expected = 0;
    int observed_max = 0;
    bool attained = false;
};

std::vector<ZDimReport> ztype_dim_report(int N, long long p, std::uint64_t seed);

}  // namespace mira
