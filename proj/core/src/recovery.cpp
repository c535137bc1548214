#include "dsl/recovery.hpp"

#include "dsl/linalg.hpp"
#include "dsl/operators.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double pairing_scale(const GramOracle& o) { return std::max(1.0, max_abs(o.pairings)); }

}  // namespace

GramOracle oracle_from_gram(const GramModel& model) {
  GramOracle o;
  o.dim_e = model.dim_e();
  o.max_power = model.degree;
  o.pairings = model.gram;
  return o;
}

GramOracle oracle_from_operator(const Matrix& t, const Matrix& kernel_basis, int max_power) {
  if (t.rows() != t.cols()) fail("DimensionMismatch", "operator matrix must be square");
  if (kernel_basis.rows() != t.rows())
    fail("DimensionMismatch", "kernel basis lives in the wrong space");
  if (kernel_basis.cols() < 1) fail("DimensionMismatch", "kernel basis is empty");
  const int p = static_cast<int>(kernel_basis.cols());
  Matrix basis = column_space_basis(kernel_basis, 1e-12);
  if (basis.cols() != p) fail("IllConditioned", "kernel basis is rank deficient");

  const int dim = static_cast<int>(t.rows());
  Matrix orbit(dim, (max_power + 1) * p);
  Matrix current = basis;
  for (int l = 0; l <= max_power; ++l) {
    orbit.block(0, l * p, dim, p) = current;
    current = t * current;
  }
  GramOracle o;
  o.dim_e = p;
  o.max_power = max_power;
  o.pairings = (orbit.adjoint() * orbit).transpose();
  return o;
}

InvarianceReport invariance_check(const Matrix& a, const Matrix& t, const Matrix& kernel_basis,
                                  int max_power, double tol) {
  if (a.rows() != a.cols() || t.rows() != t.cols() || a.rows() != t.rows())
    fail("DimensionMismatch", "A and T must be square of equal dimension");
  const double scale = std::max(1.0, max_abs(a));

  InvarianceReport rep;
  rep.moments = MomentSequence(std::max(1, static_cast<int>(kernel_basis.cols())), 0);
  rep.min_eigenvalue = min_hermitian_eigenvalue(a);
  if (rep.min_eigenvalue < -tol * scale) fail("NotPositive", "A is not PSD within tolerance");
  rep.invariance_deviation = max_abs(t.adjoint() * a * t - a);
  if (rep.invariance_deviation > tol * scale)
    fail("NotInvariant", "T*AT differs from A beyond tolerance");

  if (kernel_basis.cols() == 0) {
    rep.pass = true;
    return rep;
  }

  const int p = static_cast<int>(kernel_basis.cols());
  const int dim = static_cast<int>(t.rows());
  Matrix orbit(dim, (max_power + 1) * p);
  Matrix current = kernel_basis;
  for (int l = 0; l <= max_power; ++l) {
    orbit.block(0, l * p, dim, p) = current;
    current = t * current;
  }

  // pair(l, i; j, k) = <A T^l b_i, T^j b_k>, which must depend on l - j only.
  auto pair_at = [&](int l, int i, int j, int k) {
    return inner(Vector(a * orbit.col(l * p + i)), Vector(orbit.col(j * p + k)));
  };

  const int max_order = max_power;
  MomentSequence seq(p, max_order);
  double variation = 0.0;
  for (int s = -max_order; s <= max_order; ++s) {
    const int l0 = std::max(0, -s);
    Matrix reference = Matrix::Zero(p, p);
    Matrix mean = Matrix::Zero(p, p);
    int count = 0;
    for (int l = l0; l + std::max(0, s) <= max_power && l <= max_power; ++l) {
      const int j = l + s;
      if (j < 0 || j > max_power) continue;
      Matrix value(p, p);
      for (int row = 0; row < p; ++row)
        for (int col = 0; col < p; ++col) value(row, col) = pair_at(l, col, j, row);
      if (count == 0) reference = value;
      variation = std::max(variation, max_abs(value - reference));
      mean += value;
      ++count;
    }
    if (count > 0) seq.set(s, mean / static_cast<double>(count));
  }
  rep.diagonal_variation = variation;
  rep.moments = std::move(seq);
  rep.pass = variation <= tol * scale;
  return rep;
}

InvarianceReport invariance_check(const Matrix& a, const Matrix& t, double tol) {
  const Matrix kernel = null_space_basis(Matrix(t.adjoint()), 1e-10);
  const int d = std::max(1, static_cast<int>(t.rows()));
  return invariance_check(a, t, kernel, d, tol);
}

MomentSequence recover_moments(const GramOracle& oracle, int m, int r, int max_order,
                               double tol) {
  if (m < 2) fail("BadRange", "model order must satisfy m >= 2");
  if (r < 1 || r > m - 1) fail("BadRange", "recovery needs 1 <= r <= m-1");
  if (max_order > oracle.max_power - m)
    fail("BadRange", "truncation margin violated: need S <= d - m");
  const int p = oracle.dim_e;
  const double scale = pairing_scale(oracle);

  auto pair_at = [&](int a, int i, int b, int k) -> Complex {
    return oracle.pairings(a * p + i, b * p + k);
  };
  // <beta_rho T^a x, T^b y> expanded through the binomial sum.
  auto beta_pair = [&](int rho, int a, int i, int b, int k) {
    Complex acc{};
    for (int q = 0; q <= rho; ++q) {
      const double sign = (rho - q) % 2 == 0 ? 1.0 : -1.0;
      acc += sign * binomial(rho, q) * pair_at(q + a, i, q + b, k);
    }
    return acc;
  };
  // Q_r pairing; L^k T^a x collapses to T^{a-k} x, so the series is finite.
  auto defect_pair = [&](int a, int i, int b, int k) {
    Complex acc = beta_pair(r, a, i, b, k);
    for (int back = 1; back <= std::min(a, b); ++back)
      acc -= beta_pair(r + 1, a - back, i, b - back, k);
    return acc;
  };

  MomentSequence seq(p, max_order);
  double variation = 0.0;
  for (int s = -max_order; s <= max_order; ++s) {
    const int l0 = std::max(0, -s);
    const int lmax = oracle.max_power - (r + 1) - std::max(0, s);
    if (lmax < l0) fail("BadRange", "truncation margin violated for this moment order");
    Matrix reference = Matrix::Zero(p, p);
    Matrix mean = Matrix::Zero(p, p);
    for (int l = l0; l <= lmax; ++l) {
      Matrix value(p, p);
      for (int row = 0; row < p; ++row)
        for (int col = 0; col < p; ++col) value(row, col) = defect_pair(l, col, l + s, row);
      if (l == l0) reference = value;
      variation = std::max(variation, max_abs(value - reference));
      mean += value;
    }
    seq.set(s, mean / static_cast<double>(lmax - l0 + 1));
  }
  if (variation > tol * scale)
    fail("DiagonalInconsistent",
         "pairings vary along constant l-j diagonals; operator outside the model class or "
         "margin too small");
  if (seq.hermitian_symmetry_deviation() > tol * scale)
    fail("DiagonalInconsistent", "recovered sequence is not Hermitian symmetric");
  return seq;
}

FeasibilityResult toeplitz_feasibility(const MomentSequence& seq, int order) {
  if (order > seq.max_order()) fail("BadRange", "order exceeds the stored moment band");
  const Matrix t = block_toeplitz(seq, order);
  FeasibilityResult res;
  res.min_eigenvalue = min_hermitian_eigenvalue(t);
  res.feasible = res.min_eigenvalue >= -1e-9 * std::max(1.0, max_hermitian_eigenvalue(t));
  return res;
}

namespace {

struct ScalarAtoms {
  std::vector<double> angles;
  std::vector<double> masses;
};

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  Matrix companion = Matrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Matrix> es(companion, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + deg};
}

// Least-squares masses for fixed angles against c_0..c_M; real unknowns.
std::vector<double> solve_masses(const std::vector<double>& angles,
                                 const std::vector<Complex>& c, double& residual) {
  const int rows = static_cast<int>(c.size());
  const int cols = static_cast<int>(angles.size());
  RealMatrix sys(2 * rows, cols);
  RealVector rhs(2 * rows);
  for (int s = 0; s < rows; ++s) {
    for (int t = 0; t < cols; ++t) {
      const Complex e = std::polar(1.0, -s * angles[t]);
      sys(2 * s, t) = e.real();
      sys(2 * s + 1, t) = e.imag();
    }
    rhs(2 * s) = c[s].real();
    rhs(2 * s + 1) = c[s].imag();
  }
  RealVector w = sys.colPivHouseholderQr().solve(rhs);
  residual = (sys * w - rhs).cwiseAbs().maxCoeff();
  return {w.data(), w.data() + cols};
}

// Caratheodory decomposition of a PSD Toeplitz sequence of deficient rank:
// the null polynomial of the (rank+1) principal minor carries the atoms.
ScalarAtoms vandermonde_decompose(const std::vector<Complex>& c, int rank) {
  const int n = rank + 1;
  Matrix sub(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) sub(k, l) = l >= k ? c[l - k] : std::conj(c[k - l]);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
  const Vector null_vec = es.eigenvectors().col(0);

  double max_coeff = 0.0;
  for (int i = 0; i < n; ++i) max_coeff = std::max(max_coeff, std::abs(null_vec(i)));
  if (std::abs(null_vec(n - 1)) < 1e-10 * max_coeff)
    fail("IllConditioned", "degenerate annihilating polynomial");

  std::vector<Complex> coeffs(null_vec.data(), null_vec.data() + n);
  ScalarAtoms atoms;
  for (const Complex& root : polynomial_roots(coeffs)) {
    double angle = std::arg(root);
    if (angle < 0) angle += kTwoPi;
    atoms.angles.push_back(angle);
  }
  std::sort(atoms.angles.begin(), atoms.angles.end());
  for (std::size_t i = 0; i < atoms.angles.size(); ++i) {
    const double next = i + 1 < atoms.angles.size() ? atoms.angles[i + 1]
                                                    : atoms.angles[0] + kTwoPi;
    if (next - atoms.angles[i] < 1e-6)
      fail("IllConditioned", "recovered atoms cluster below 1e-6 separation");
  }

  double residual = 0.0;
  atoms.masses = solve_masses(atoms.angles, c, residual);
  if (residual >= 1e-6 * std::max(1.0, std::abs(c[0])))
    fail("IllConditioned", "mass least-squares residual too large");
  for (double& w : atoms.masses) {
    if (w < -1e-8 * std::max(1.0, std::abs(c[0])))
      fail("IllConditioned", "negative mass in reconstruction");
    w = std::max(w, 0.0);
  }
  return atoms;
}

SemiSpectralMeasure atoms_to_measure(const ScalarAtoms& atoms) {
  std::vector<std::pair<double, Matrix>> list;
  for (std::size_t i = 0; i < atoms.angles.size(); ++i) {
    Matrix w(1, 1);
    w(0, 0) = atoms.masses[i];
    list.emplace_back(atoms.angles[i], w);
  }
  return make_atomic(list);
}

}  // namespace

SemiSpectralMeasure atomic_from_moments(const MomentSequence& seq, int order) {
  if (seq.dim_e() != 1)
    fail("DimensionMismatch", "atomic reconstruction is implemented for dimE = 1 only");
  if (order > seq.max_order()) fail("BadRange", "order exceeds the stored moment band");

  std::vector<Complex> c(order + 1);
  for (int s = 0; s <= order; ++s) c[s] = seq.moment(s)(0, 0);

  const Matrix toeplitz = block_toeplitz(seq, order);
  Eigen::SelfAdjointEigenSolver<Matrix> es(toeplitz, Eigen::EigenvaluesOnly);
  const double top = std::max(1.0, es.eigenvalues().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-9 * top)
    fail("InfeasibleSequence", "Toeplitz matrix of the sequence is not PSD");
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 1e-9 * top) ++rank;

  SemiSpectralMeasure result = [&] {
    if (rank == 0) return make_atomic({});
    if (rank <= order) return atoms_to_measure(vandermonde_decompose(c, rank));

    // Full rank: roots-of-unity quadrature when the inverse DFT of the data is
    // a genuine mass vector, else a one-step PSD-boundary extension.
    const int n = order + 1;
    std::vector<double> masses(n);
    bool applicable = true;
    for (int k = 0; k < n && applicable; ++k) {
      Complex w{};
      for (int s = 0; s < n; ++s) w += c[s] * std::polar(1.0, kTwoPi * s * k / n);
      w /= static_cast<double>(n);
      if (std::abs(w.imag()) > 1e-9 * top || w.real() < -1e-9 * top) applicable = false;
      masses[k] = std::max(w.real(), 0.0);
    }
    if (applicable) {
      ScalarAtoms atoms;
      for (int k = 0; k < n; ++k) atoms.angles.push_back(kTwoPi * k / n);
      atoms.masses = masses;
      return atoms_to_measure(atoms);
    }

    // Extend to the PSD boundary: pick c_{S+1} making the (S+2) Toeplitz
    // singular, then decompose the rank-(S+1) extension.
    Vector e0 = Vector::Zero(n);
    e0(0) = 1.0;
    Vector v = Vector::Zero(n);
    for (int k = 1; k < n; ++k) v(k) = c[n - k];
    const Matrix inv_base = toeplitz.ldlt().solve(Matrix::Identity(n, n));
    const double alpha = (e0.adjoint() * inv_base * e0)(0, 0).real();
    const Complex g = (e0.adjoint() * inv_base * v)(0, 0);
    const double gamma = (v.adjoint() * inv_base * v)(0, 0).real();
    const double radius_sq = (c[0].real() - gamma) / alpha + std::norm(g) / (alpha * alpha);
    const double radius = radius_sq > 0.0 ? std::sqrt(radius_sq) : 0.0;
    std::vector<Complex> extended = c;
    extended.push_back(-g / alpha + radius);
    return atoms_to_measure(vandermonde_decompose(extended, order + 1));
  }();

  for (int s = 0; s <= order; ++s)
    if (std::abs(result.moment(s)(0, 0) - c[s]) > 1e-7 * std::max(1.0, std::abs(c[0])))
      fail("IllConditioned", "reconstructed atoms fail to reproduce the moments");
  return result;
}

RoundTripCertificate roundtrip_verify(const GramOracle& oracle, int m, int d, int moment_order,
                                      double tol) {
  if (d > oracle.max_power) fail("BadRange", "oracle does not reach degree d");
  if (moment_order > d - m) fail("BadRange", "truncation margin violated: need S <= d - m");
  RoundTripCertificate cert;
  cert.m = m;
  cert.d = d;
  cert.moment_order = moment_order;

  std::vector<MomentSequence> sequences;
  for (int r = 1; r <= m - 1; ++r) {
    sequences.push_back(recover_moments(oracle, m, r, moment_order));
    const FeasibilityResult feas = toeplitz_feasibility(sequences.back(), moment_order);
    cert.feasible.push_back(feas.feasible);
    cert.min_toeplitz_eigenvalues.push_back(feas.min_eigenvalue);
    if (!feas.feasible)
      cert.diagnostics.push_back("moment sequence r=" + std::to_string(r) +
                                 " fails block-Toeplitz positivity");
  }

  const int rebuild_degree = d - m - 1;
  const Matrix rebuilt = gram_matrix(std::span<const MomentSequence>(sequences), oracle.dim_e,
                                     rebuild_degree);
  const int side = (rebuild_degree + 1) * oracle.dim_e;
  cert.max_gram_deviation = max_abs(rebuilt - oracle.pairings.topLeftCorner(side, side));

  bool feasible_all = true;
  for (bool f : cert.feasible) feasible_all = feasible_all && f;
  cert.pass = feasible_all && cert.max_gram_deviation <= tol;
  if (cert.max_gram_deviation > tol)
    cert.diagnostics.push_back("rebuilt Gram deviates beyond tolerance");
  return cert;
}

UniquenessReport uniqueness_check(const MeasureTuple& tuple, const Matrix& v, int d, double tol) {
  if (unitary_deviation(v) > 1e-10) fail("NotUnitary", "conjugating matrix is not unitary");
  const int m = tuple.order();
  if (d < m + 1) fail("BadRange", "degree too small for any moment order");
  const int order = d - m;

  const GramOracle base = oracle_from_gram(gram(tuple, d));
  const GramOracle conj = oracle_from_gram(gram(conjugate_tuple(tuple, v), d));

  UniquenessReport rep;
  rep.moment_order = order;
  for (int r = 1; r <= m - 1; ++r) {
    const MomentSequence m1 = recover_moments(base, m, r, order);
    const MomentSequence m2 = recover_moments(conj, m, r, order);
    for (int s = -order; s <= order; ++s)
      rep.max_conjugation_deviation = std::max(
          rep.max_conjugation_deviation, max_abs(m2.at(s) - v.adjoint() * m1.at(s) * v));
  }
  rep.pass = rep.max_conjugation_deviation <= tol;
  return rep;
}

}  // namespace dsl
