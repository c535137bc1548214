#include "dsl/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace dsl {

double hermitian_deviation(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitary_deviation(const Matrix& v) {
  if (v.size() == 0) return 0.0;
  Matrix g = v.adjoint() * v;
  g -= Matrix::Identity(g.rows(), g.cols());
  return g.cwiseAbs().maxCoeff();
}

double min_hermitian_eigenvalue(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_hermitian_eigenvalue(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

bool is_psd(const Matrix& m, double tol) {
  if (m.rows() == 0) return true;
  return min_hermitian_eigenvalue(m) >= -tol;
}

namespace {

Eigen::JacobiSVD<Matrix> svd_of(const Matrix& m, unsigned options) {
  return Eigen::JacobiSVD<Matrix>(m, options);
}

double sv_threshold(const Eigen::JacobiSVD<Matrix>& svd, double tol) {
  const double top = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  return tol * std::max(1.0, top);
}

}  // namespace

int numeric_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  auto svd = svd_of(m, 0);
  const double thr = sv_threshold(svd, tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > thr) ++rank;
  return rank;
}

Matrix column_space_basis(const Matrix& m, double tol) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  auto svd = svd_of(m, Eigen::ComputeThinU);
  const double thr = sv_threshold(svd, tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > thr) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix null_space_basis(const Matrix& m, double tol) {
  if (m.size() == 0) return Matrix(m.cols(), 0);
  auto svd = svd_of(m, Eigen::ComputeFullV);
  const double thr = sv_threshold(svd, tol);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > thr) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix orthogonal_complement(const Matrix& b, int dim) {
  if (b.cols() == 0) return Matrix::Identity(dim, dim);
  // Null space of b^H is the complement of span(b).
  return null_space_basis(Matrix(b.adjoint()), 1e-12);
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

namespace {

template <typename T>
T pairwise_impl(std::span<const T> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return T{};
  if (n == 1) return terms[0];
  if (n == 2) return terms[0] + terms[1];
  const std::size_t half = n / 2;
  return pairwise_impl(terms.first(half)) + pairwise_impl(terms.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> terms) { return pairwise_impl(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise_impl(terms); }

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  constexpr int kMax = 160;
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(kMax + 1);
    for (int i = 0; i <= kMax; ++i) {
      t[i].assign(i + 1, 1.0);
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (n <= kMax) return table[n][k];
  // Degrees this large never occur in practice; fall back to the product form.
  double r = 1.0;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

unsigned long long binomial_exact(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0ull;
  if (n > 62) fail("BadRange", "binomial_exact supports n <= 62");
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

}  // namespace dsl
