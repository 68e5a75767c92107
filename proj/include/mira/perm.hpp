#pragma once

#include <vector>

namespace mira {

// Permutations of {1,...,N} in one-line notation, 1-based values.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool is_permutation(const Perm& w);
// (a ∘ b)(i) = a(b(i))
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& w);
// Number of inversions.
int coxeter_length(const Perm& w);
// w_0(i) = N + 1 - i.
Perm longest_element(int n);
// Multiply by the simple transposition s_i on the right: swap entries i, i+1.
Perm right_simple(const Perm& w, int i);
// A reduced word (s_{a_1} ... s_{a_k} = w), produced by sorting descents.
std::vector<int> reduced_word(const Perm& w);
// All permutations of {1,...,n} in lexicographic order.
std::vector<Perm> all_permutations(int n);

}  // namespace mira
