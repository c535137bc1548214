#ifndef DSL_LINALG_HPP
#define DSL_LINALG_HPP

#include "dsl/types.hpp"

#include <span>
#include <vector>

namespace dsl {

/// max |M - M^H| entrywise.
double hermitian_deviation(const Matrix& m);

/// max |V^H V - I| entrywise.
double unitary_deviation(const Matrix& v);

/// Smallest eigenvalue of a Hermitian matrix (input is symmetrized first).
double min_hermitian_eigenvalue(const Matrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double max_hermitian_eigenvalue(const Matrix& m);

/// 0x0 matrices count as PSD.
bool is_psd(const Matrix& m, double tol);

/// Column-space rank with singular values thresholded at tol * max(1, sigma_max).
int numeric_rank(const Matrix& m, double tol);

/// Orthonormal basis of the column space, same threshold rule as numeric_rank.
Matrix column_space_basis(const Matrix& m, double tol);

/// Orthonormal basis of ker(M), i.e. right singular vectors below threshold.
Matrix null_space_basis(const Matrix& m, double tol);

/// Orthonormal basis of the orthogonal complement of span(columns of b).
/// b must have orthonormal columns.
Matrix orthogonal_complement(const Matrix& b, int dim);

double max_abs(const Matrix& m);

/// Fixed-order pairwise reduction; deterministic for a fixed term order and
/// better conditioned than sequential accumulation on long sums.
Complex pairwise_sum(std::span<const Complex> terms);
double pairwise_sum(std::span<const double> terms);

/// C(n, k) as a double from a cached Pascal triangle; 0 outside the triangle.
double binomial(int n, int k);

/// Exact integer C(n, k) for n <= 62 (fits in unsigned long long).
unsigned long long binomial_exact(int n, int k);

}  // namespace dsl

#endif
