#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mira/partition.hpp"

namespace mira {

// Row-strict, column-strict filling with distinct positive entries.  A
// StandardTableau of size n has entry set exactly {1,...,n}; tableaux with
// sentinel entries (> N) arise during mirabolic insertion and are validated
// only for increasing rows/columns, not for the contiguous entry set.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cells() const;
    bool empty() const { return rows_.empty(); }

    Partition shape() const;

    // Row index (1-based) of entry x, 0 if absent.
    int row_of(int x) const;
    // Column index (1-based) of entry x, 0 if absent.
    int col_of(int x) const;
    bool contains(int x) const { return row_of(x) != 0; }

    // Entry set is exactly {1,...,num_cells()}.
    bool is_standard() const;

    // Keep only entries <= bound; the result must still have partition shape
    // (throws otherwise).
    Tableau restrict_to(int bound) const;

    Tableau conjugate() const;

    std::string to_string() const;

    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Schensted row bumping.  Returns the (row, col) of the single created cell.
std::pair<int, int> row_insert(Tableau& t, int x);

// P = insertion tableau of the word w(1)...w(n), Q = recording tableau.
std::pair<Tableau, Tableau> classical_rsk(const std::vector<int>& w);

// All standard tableaux of shape nu.  Deterministic order: lexicographic in
// the sequence (row of 1, row of 2, ..., row of n) generated by backtracking.
std::vector<Tableau> enumerate_standard_tableaux(const Partition& nu);

// Hook length formula; independent of the enumeration.
long long count_st(const Partition& nu);

// Schutzenberger evacuation of a standard tableau: an involution preserving
// the shape, computed by repeated jeu-de-taquin slides into the corner.
Tableau evacuation(const Tableau& t);

}  // namespace mira
