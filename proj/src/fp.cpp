#include "mira/fp.hpp"

#include <cassert>
#include <stdexcept>

namespace mira {

namespace {
long long fp_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
}  // namespace

long long fp_inv(long long x, long long p) {
    x %= p;
    if (x < 0) x += p;
    if (x == 0) throw std::invalid_argument("fp_inv: zero");
    return fp_pow(x, p - 2, p);
}

FpMat fp_zero(int rows, int cols) { return FpMat(rows, FpVec(cols, 0)); }

FpMat fp_identity(int n) {
    FpMat a = fp_zero(n, n);
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

FpMat fp_transpose(const FpMat& a) {
    if (a.empty()) return {};
    FpMat t(a[0].size(), FpVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

FpMat fp_add(const FpMat& a, const FpMat& b, long long p) {
    FpMat r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = (a[i][j] + b[i][j]) % p;
    return r;
}

FpMat fp_neg(const FpMat& a, long long p) {
    FpMat r = a;
    for (auto& row : r)
        for (auto& x : row) x = (p - x) % p;
    return r;
}

FpMat fp_mul(const FpMat& a, const FpMat& b, long long p) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    FpMat r(n, FpVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            long long x = a[i][l];
            for (size_t j = 0; j < m; ++j) r[i][j] = (r[i][j] + x * b[l][j]) % p;
        }
    return r;
}

FpVec fp_apply(const FpMat& a, const FpVec& v, long long p) {
    FpVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        long long s = 0;
        for (size_t j = 0; j < v.size(); ++j) s = (s + a[i][j] * v[j]) % p;
        r[i] = s;
    }
    return r;
}

std::vector<int> fp_rref(FpMat& a, long long p) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        long long inv = fp_inv(a[r][c], p);
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            long long f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    a.resize(r);  // drop zero rows
    return pivots;
}

int fp_rank(FpMat a, long long p) { return static_cast<int>(fp_rref(a, p).size()); }

FpMat fp_nullspace(const FpMat& a, long long p) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    FpMat m = a;
    std::vector<int> pivots = fp_rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    FpMat basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        FpVec x(cols, 0);
        x[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = (p - m[r][fc]) % p;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<FpVec> fp_solve(const FpMat& a, const FpVec& b, long long p) {
    if (a.empty()) {
        for (long long x : b)
            if (x % p != 0) return std::nullopt;
        return FpVec{};
    }
    size_t cols = a[0].size();
    FpMat aug = a;
    for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(((b[i] % p) + p) % p);
    std::vector<int> pivots = fp_rref(aug, p);
    FpVec x(cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

std::optional<FpVec> fp_express(const FpMat& basis_rows, const FpVec& x, long long p) {
    if (basis_rows.empty()) {
        for (long long v : x)
            if (v % p != 0) return std::nullopt;
        return FpVec{};
    }
    return fp_solve(fp_transpose(basis_rows), x, p);
}

bool fp_in_span(const FpMat& rows, const FpVec& x, long long p) {
    return fp_express(rows, x, p).has_value();
}

int fp_intersect_dim(const FpMat& u, const FpMat& w, long long p) {
    int du = fp_rank(u, p), dw = fp_rank(w, p);
    FpMat both = u;
    both.insert(both.end(), w.begin(), w.end());
    return du + dw - fp_rank(both, p);
}

}  // namespace mira
