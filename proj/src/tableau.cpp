#include "mira/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mira {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty()) throw std::invalid_argument("empty tableau row");
        if (r + 1 < rows_.size() && rows_[r].size() < rows_[r + 1].size())
            throw std::invalid_argument("tableau rows must have weakly decreasing lengths");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c + 1 < rows_[r].size() && rows_[r][c] >= rows_[r][c + 1])
                throw std::invalid_argument("tableau rows must strictly increase");
            if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r][c] >= rows_[r + 1][c])
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

int Tableau::num_cells() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::row_of(int x) const {
    for (size_t r = 0; r < rows_.size(); ++r)
        if (std::binary_search(rows_[r].begin(), rows_[r].end(), x)) return static_cast<int>(r) + 1;
    return 0;
}

int Tableau::col_of(int x) const {
    for (const auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), x);
        if (it != row.end() && *it == x) return static_cast<int>(it - row.begin()) + 1;
    }
    return 0;
}

bool Tableau::is_standard() const {
    int n = num_cells();
    for (int x = 1; x <= n; ++x)
        if (!contains(x)) return false;
    return true;
}

Tableau Tableau::restrict_to(int bound) const {
    std::vector<std::vector<int>> out;
    for (const auto& row : rows_) {
        std::vector<int> kept;
        for (int x : row)
            if (x <= bound) kept.push_back(x);
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    return Tableau(std::move(out));  // ctor re-validates shape
}

Tableau Tableau::conjugate() const {
    std::vector<std::vector<int>> out;
    if (!rows_.empty()) {
        out.resize(rows_[0].size());
        for (const auto& row : rows_)
            for (size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
    }
    return Tableau(std::move(out));
}

std::string Tableau::to_string() const {
    std::string s;
    for (const auto& row : rows_) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) s += " ";
            s += std::to_string(row[c]);
        }
        s += "\n";
    }
    return s;
}

std::pair<int, int> row_insert(Tableau& t, int x) {
    auto rows = t.rows();
    int cur = x;
    for (size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({cur});
            t = Tableau(std::move(rows));
            return {static_cast<int>(r) + 1, 1};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            t = Tableau(std::move(rows));
            return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
        }
        std::swap(cur, *it);  // bump
    }
}

std::pair<Tableau, Tableau> classical_rsk(const std::vector<int>& w) {
    Tableau p;
    std::vector<std::vector<int>> qrows;
    for (size_t i = 0; i < w.size(); ++i) {
        auto [r, c] = row_insert(p, w[i]);
        if (r > static_cast<int>(qrows.size())) qrows.emplace_back();
        qrows[r - 1].push_back(static_cast<int>(i) + 1);
        assert(static_cast<int>(qrows[r - 1].size()) == c);
    }
    return {p, Tableau(std::move(qrows))};
}

namespace {
void st_rec(const Partition& nu, int x, int n, std::vector<int>& filled,
            std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
    if (x > n) {
        out.emplace_back(rows);
        return;
    }
    for (size_t r = 0; r < filled.size(); ++r) {
        bool addable = filled[r] < nu.part(static_cast<int>(r) + 1) &&
                       (r == 0 || filled[r - 1] > filled[r]);
        if (!addable) continue;
        rows[r].push_back(x);
        ++filled[r];
        st_rec(nu, x + 1, n, filled, rows, out);
        --filled[r];
        rows[r].pop_back();
    }
}
}  // namespace

std::vector<Tableau> enumerate_standard_tableaux(const Partition& nu) {
    int n = nu.size();
    std::vector<int> filled(nu.num_parts(), 0);
    std::vector<std::vector<int>> rows(nu.num_parts());
    std::vector<Tableau> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    st_rec(nu, 1, n, filled, rows, out);
    return out;
}

long long count_st(const Partition& nu) {
    // Hook length formula, exact at the sizes used here (n <= 20).
    int n = nu.size();
    if (n == 0) return 1;
    if (n > 20) throw std::invalid_argument("count_st: size too large for exact u64 arithmetic");
    Partition conj = nu.conjugate();
    unsigned long long fact = 1, denom = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<unsigned long long>(k);
    for (int i = 1; i <= nu.num_parts(); ++i)
        for (int j = 1; j <= nu.part(i); ++j)
            denom *= static_cast<unsigned long long>(nu.part(i) - j + conj.part(j) - i + 1);
    assert(fact % denom == 0);
    return static_cast<long long>(fact / denom);
}

Tableau evacuation(const Tableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("evacuation: tableau not standard");
    int n = t.num_cells();
    auto work = t.rows();
    std::vector<std::vector<int>> out(work.size());
    for (size_t r = 0; r < work.size(); ++r) out[r].assign(work[r].size(), 0);
    for (int label = n; label >= 1; --label) {
        // open a hole at the top-left corner and slide it to an inner corner
        size_t i = 0, j = 0;
        while (true) {
            bool down = i + 1 < work.size() && work[i + 1].size() > j;
            bool right = j + 1 < work[i].size();
            if (!down && !right) break;
            if (down && (!right || work[i + 1][j] < work[i][j + 1])) {
                work[i][j] = work[i + 1][j];
                ++i;
            } else {
                work[i][j] = work[i][j + 1];
                ++j;
            }
        }
        out[i][j] = label;
        work[i].erase(work[i].begin() + static_cast<long>(j));
        if (work[i].empty()) work.pop_back();
    }
    std::vector<std::vector<int>> rows;
    for (auto& r : out)
        if (!r.empty()) rows.push_back(std::move(r));
    return Tableau(std::move(rows));
}

}  // namespace mira
