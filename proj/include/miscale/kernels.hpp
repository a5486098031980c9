#pragma once

#include <span>
#include <vector>

#include "miscale/matrix.hpp"

namespace miscale::kernels {

// Dense kernels used by every module. The functions in this namespace run
// OpenMP-parallel loops; `kernels::serial` holds plain-loop reference
// versions with the same per-element arithmetic order. Because parallel
// iterations write disjoint outputs and every accumulation happens inside a
// single iteration, the parallel results are bit-identical to the serial
// ones for any thread count. tools/bench.cpp compares their throughput.

/// C = A * B.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

/// C = A * B^T.
inline Matrix matmul_abt(const Matrix& a, const Matrix& b) { return matmul(a, transpose(b)); }

/// C = A^T * B.
inline Matrix matmul_atb(const Matrix& a, const Matrix& b) { return matmul(transpose(a), b); }

/// Lower-triangular L with L L^T = A. Reads only the lower triangle of A;
/// symmetry is the caller's contract. Throws NotPositiveDefiniteError on a
/// non-positive pivot.
Matrix cholesky(const Matrix& a);

/// Solve L X = B in place (L lower-triangular), one column of B per solve.
void solve_lower_many(const Matrix& l, Matrix& b);

/// Solve L^T X = B in place.
void solve_lower_transposed_many(const Matrix& l, Matrix& b);

void solve_lower_vec(const Matrix& l, std::span<double> x);
void solve_lower_transposed_vec(const Matrix& l, std::span<double> x);

/// 2 * sum_i ln L_ii.
double log_det_from_cholesky(const Matrix& l);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Sweeps until the off-diagonal Frobenius norm drops below
/// tol * ||A||_F. Serial; it is never a hot path here.
std::vector<double> jacobi_eigenvalues(Matrix a, double tol = 1e-12, int max_sweeps = 64);

/// Compensated (Kahan) sum; deterministic left-to-right.
double kahan_sum(std::span<const double> v);
double kahan_mean(std::span<const double> v);

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix cholesky(const Matrix& a);
void solve_lower_many(const Matrix& l, Matrix& b);
void solve_lower_transposed_many(const Matrix& l, Matrix& b);

} // namespace serial

} // namespace miscale::kernels
