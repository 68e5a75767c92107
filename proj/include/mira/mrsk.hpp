#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mira/rbperm.hpp"
#include "mira/tableau.hpp"
#include "mira/young.hpp"

namespace mira {

// Insertion state after one step: the growing tableau (entries 1..N plus
// sentinels N+1..2N standing for "@") and the auxiliary row, kept at length N.
struct AtState {
    Tableau t_at;
    std::vector<int> r_at;
    int step = 0;
    auto operator<=>(const AtState&) const = default;
};

struct MirabolicOutput {
    CellTriple triple;
    Tableau t1, t2;
    Partition theta_star;
    auto operator<=>(const MirabolicOutput&) const = default;
};

struct MirabolicTrace {
    std::vector<AtState> steps;       // states after steps 1..N
    std::vector<Tableau> flush;       // after each flush insertion of a value <= N,
                                      // plus the final tableau with all sentinels in
    MirabolicOutput output;
};

MirabolicOutput mirabolic_rsk(const ColoredPerm& tw);
MirabolicTrace mirabolic_rsk_trace(const ColoredPerm& tw);

// Independent oracle: embed tw into RB_{3N}, straighten the sentinel row into
// a bona fide permutation, run classical RSK, truncate.  Must agree with
// mirabolic_rsk everywhere.
MirabolicOutput rsk_via_embedding(const ColoredPerm& tw);

// theta*: shape of the step-N tableau with sentinels removed; equals both the
// min/max formula in terms of (nu, theta, nu') and theta(fourier(tw)).
Partition theta_star(const ColoredPerm& tw);
Partition theta_star_formula(const CellTriple& t);

enum class CellSide { Left, Right, TwoSided };

// Partition of RB_N keyed by (nu,theta,nu') plus T1 (left) or T2 (right).
std::vector<std::vector<ColoredPerm>> microlocal_cells(int N, CellSide side);

// Closure of {tw} under all defined k_move(., i); equals the right
// microlocal cell.
std::vector<ColoredPerm> k_orbit(const ColoredPerm& tw);

// Tableau analogues of Phi_i and the K_i moves (dual Knuth moves).
bool phi_prime(const Tableau& t, int i);
std::optional<Tableau> kprime_move(const Tableau& t, int i);

// Table-based inverse of mirabolic_rsk for a fixed N.
class InverseRsk {
public:
    explicit InverseRsk(int N);
    ColoredPerm lookup(const CellTriple& t, const Tableau& t1, const Tableau& t2) const;

private:
    std::map<std::tuple<CellTriple, Tableau, Tableau>, ColoredPerm> table_;
};

}  // namespace mira
