#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mira {

// Dense exact linear algebra over F_p.  Entries are kept reduced to [0, p).
using FpVec = std::vector<long long>;
using FpMat = std::vector<FpVec>;  // row-major

long long fp_inv(long long x, long long p);

FpMat fp_zero(int rows, int cols);
FpMat fp_identity(int n);
FpMat fp_transpose(const FpMat& a);
FpMat fp_add(const FpMat& a, const FpMat& b, long long p);
FpMat fp_neg(const FpMat& a, long long p);
FpMat fp_mul(const FpMat& a, const FpMat& b, long long p);
FpVec fp_apply(const FpMat& a, const FpVec& v, long long p);

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> fp_rref(FpMat& a, long long p);

int fp_rank(FpMat a, long long p);

// Basis (as rows) of { x | a x = 0 }.
FpMat fp_nullspace(const FpMat& a, long long p);

// One solution of a x = b, if any.
std::optional<FpVec> fp_solve(const FpMat& a, const FpVec& b, long long p);

// Coordinates c with sum_k c_k basis_rows[k] = x, if x lies in the row span.
std::optional<FpVec> fp_express(const FpMat& basis_rows, const FpVec& x, long long p);

bool fp_in_span(const FpMat& rows, const FpVec& x, long long p);

// dim(span U  ∩  span W), both given by spanning rows.
int fp_intersect_dim(const FpMat& u, const FpMat& w, long long p);

}  // namespace mira
