#include "mira/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mira {

Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

bool is_permutation(const Perm& w) {
    std::vector<bool> seen(w.size(), false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[x - 1]) return false;
        seen[x - 1] = true;
    }
    return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_mul: size mismatch");
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

Perm perm_inverse(const Perm& w) {
    Perm inv(w.size());
    for (size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

int coxeter_length(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Perm longest_element(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return w;
}

Perm right_simple(const Perm& w, int i) {
    if (i < 1 || i >= static_cast<int>(w.size()))
        throw std::out_of_range("right_simple: index out of range");
    Perm c = w;
    std::swap(c[i - 1], c[i]);
    return c;
}

std::vector<int> reduced_word(const Perm& w) {
    // Repeatedly strip a descent on the right; the collected indices, reversed,
    // form a reduced word for w.
    Perm c = w;
    std::vector<int> word;
    bool found = true;
    while (found) {
        found = false;
        for (int i = 1; i < static_cast<int>(c.size()); ++i) {
            if (c[i - 1] > c[i]) {
                word.push_back(i);
                std::swap(c[i - 1], c[i]);
                found = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm w = perm_identity(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace mira
