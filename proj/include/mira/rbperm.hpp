#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mira/perm.hpp"

namespace mira {

// A permutation with a marked position subset beta (sorted ascending),
// indexing a GL(V)-orbit in Fl x Fl x V.  Validity: for every unmarked i and
// marked j, either i > j or w(i) > w(j).
struct ColoredPerm {
    Perm w;
    std::vector<int> beta;  // sorted, subset of {1..N}

    int n() const { return static_cast<int>(w.size()); }
    bool in_beta(int i) const;
    std::string to_string() const;  // "w=2 1 3; b=2"

    auto operator<=>(const ColoredPerm&) const = default;
};

bool rb_is_valid(const Perm& w, const std::vector<int>& beta);
bool rb_is_valid(const ColoredPerm& tw);

// sigma = { i in beta | every j > i with w(j) > w(i) has j not in beta }.
std::vector<int> sigma_of(const ColoredPerm& tw);

// Reconstruct beta from a decreasing-subsequence position set sigma:
// beta = { i | exists j in sigma, j >= i, w(j) >= w(i) }.  Throws if sigma is
// not decreasing in w.
std::vector<int> beta_of(const Perm& w, const std::vector<int>& sigma);

// All valid (w, beta), lexicographic in (w, sorted beta).
std::vector<ColoredPerm> enumerate_rb(int N);

// tw^{-1} = (w^{-1}, w(beta)).
ColoredPerm rb_inverse(const ColoredPerm& tw);

// l(w) + #{ i | exists i' in beta with i <= i' and w(i) <= w(i') }.
// Validated against the orbit-dimension computation (see microlab).
int rb_length(const ColoredPerm& tw);

// tw_k = (id, {1..k}).
ColoredPerm rb_base(int N, int k);

// Phi_i membership: w(i) > w(i+1) and beta ∩ {i, i+1} != {i}.
bool phi(const ColoredPerm& tw, int i);

// The unique K_i partner, when one of the five case conditions matches in
// either direction; nothing otherwise.
std::optional<ColoredPerm> k_move(const ColoredPerm& tw, int i);

// (w0 w w0, {1..N} \ w0(beta)).
ColoredPerm rb_fourier(const ColoredPerm& tw);

enum class Side { Left, Right };

// Outcome of multiplying the orbit characteristic function T_tw by the
// generator T_{s_i} on the right: a case id 1..5 and the partner elements the
// case formula mentions.  The case-selection predicates are validated against
// the finite-field convolution oracle (see microlab tests).
struct GenCase {
    int id = 0;
    ColoredPerm tws;       // (ws, s(beta)); meaningful when valid
    ColoredPerm tws_fork;  // (ws, s(beta) xor {i+1}), case 2
    ColoredPerm twp;       // (w, beta xor {i+1}), cases 3 and 5
    ColoredPerm twps;      // (ws, s(beta xor {i+1})), case 3
};

GenCase right_gen_case(const ColoredPerm& tw, int i);

// Demazure star product: the length-maximal basis symbol in T_tw * T_{s_i}
// (resp. T_{s_i} * T_tw); tw itself when tw in Phi_i (resp. inverse in Phi_i).
ColoredPerm star(const ColoredPerm& tw, int i, Side side);

ColoredPerm parse_colored_perm(const std::string& text);

}  // namespace mira
