#include "dsl/operators.hpp"

#include "dsl/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace dsl {

namespace {

double scale_of(const Matrix& m) { return std::max(1.0, max_abs(m)); }

// T*^j T^j for j = 0..count.
std::vector<Matrix> power_grams(const Matrix& t, int count) {
  const int dim = static_cast<int>(t.rows());
  std::vector<Matrix> grams;
  grams.reserve(count + 1);
  Matrix power = Matrix::Identity(dim, dim);
  grams.push_back(Matrix::Identity(dim, dim));
  for (int j = 1; j <= count; ++j) {
    power = t * power;
    Matrix g = power.adjoint() * power;
    grams.push_back(0.5 * (g + g.adjoint()));
  }
  return grams;
}

Matrix defect_from_grams(const std::vector<Matrix>& grams, int m) {
  Matrix beta = Matrix::Zero(grams[0].rows(), grams[0].cols());
  for (int j = 0; j <= m; ++j) {
    const double sign = (m - j) % 2 == 0 ? 1.0 : -1.0;
    beta += sign * binomial(m, j) * grams[j];
  }
  return beta;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

Matrix defect(const Matrix& t, int m) {
  if (t.rows() != t.cols()) fail("DimensionMismatch", "operator matrix must be square");
  if (m < 0) fail("BadRange", "defect order must be nonnegative");
  return defect_from_grams(power_grams(t, m), m);
}

Matrix left_inverse(const Matrix& t) {
  if (t.rows() != t.cols()) fail("DimensionMismatch", "operator matrix must be square");
  const Matrix gram = t.adjoint() * t;
  if (min_hermitian_eigenvalue(gram) < 1e-10)
    fail("NotLeftInvertible", "T*T has an eigenvalue below 1e-10");
  return gram.llt().solve(Matrix(t.adjoint()));
}

Matrix cauchy_dual(const Matrix& t) { return Matrix(left_inverse(t).adjoint()); }

InequalityCheckReport inequality_check(const Matrix& t, int m, int truncation, double tol) {
  if (m < 2) fail("BadRange", "inequality check needs m >= 2");
  const Matrix l = left_inverse(t);
  const auto grams = power_grams(t, m);

  std::vector<Matrix> betas(m);  // beta_1..beta_{m-1} at index r-1
  for (int r = 1; r <= m - 1; ++r) betas[r - 1] = defect_from_grams(grams, r);

  InequalityCheckReport rep;
  rep.m = m;
  rep.truncation = truncation;
  rep.tol = tol;
  rep.beta_m_minus_1_psd =
      min_hermitian_eigenvalue(betas[m - 2]) >= -tol * scale_of(betas[m - 2]);

  for (int r = 1; r <= m - 2; ++r) {
    const Matrix& beta_next = betas[r];  // beta_{r+1}
    Matrix term = beta_next;
    Matrix sum = Matrix::Zero(t.rows(), t.cols());
    double last = 0.0;
    for (int k = 1; k <= truncation; ++k) {
      term = l.adjoint() * term * l;
      sum += term;
      last = max_abs(term);
    }
    SeriesEntry entry;
    entry.r = r;
    entry.last_increment = last;
    entry.converged = last <= tol * scale_of(beta_next);
    entry.min_eigenvalue = min_hermitian_eigenvalue(betas[r - 1] - sum);
    if (!entry.converged)
      entry.status = CheckStatus::Inconclusive;
    else
      entry.status = entry.min_eigenvalue >= -tol * scale_of(betas[r - 1])
                         ? CheckStatus::Pass
                         : CheckStatus::Fail;
    rep.series.push_back(entry);
  }

  for (int r = 0; r <= m - 2; ++r) {
    const Matrix& beta_next = betas[r];  // beta_{r+1}
    Matrix term = beta_next;
    Matrix psi = Matrix::Zero(t.rows(), t.cols());
    double last = 0.0;
    for (int k = 1; k <= truncation; ++k) {
      term = l.adjoint() * term * l;
      if (k >= r + 1) {
        const double c = binomial(k - 1, r);
        psi += c * term;
        last = c * max_abs(term);
      }
    }
    PsiEntry entry;
    entry.r = r;
    entry.last_increment = last;
    entry.converged = last <= tol * scale_of(beta_next);
    entry.max_eigenvalue = max_hermitian_eigenvalue(psi);
    if (!entry.converged)
      entry.status = CheckStatus::Inconclusive;
    else
      entry.status = entry.max_eigenvalue <= 1.0 + tol ? CheckStatus::Pass : CheckStatus::Fail;
    rep.psi.push_back(entry);
  }

  CheckStatus overall = CheckStatus::Pass;
  for (const auto& e : rep.series) {
    if (e.status == CheckStatus::Fail) overall = CheckStatus::Fail;
    if (e.status == CheckStatus::Inconclusive && overall == CheckStatus::Pass)
      overall = CheckStatus::Inconclusive;
  }
  // Psi <= I is forced only under its hypotheses; a clean violation there
  // means the operator is outside the class even though (1.1) looked fine.
  if (overall == CheckStatus::Pass && rep.beta_m_minus_1_psd)
    for (const auto& e : rep.psi)
      if (e.status == CheckStatus::Fail) overall = CheckStatus::Fail;
  rep.status = overall;
  return rep;
}

Classification classify(const Matrix& t, int cap, double tol) {
  if (cap < 1 || cap > 8) fail("BadRange", "classification cap must lie in [1, 8]");
  Classification cls;
  cls.cap = cap;
  cls.tol = tol;

  const auto grams = power_grams(t, cap);
  std::vector<Matrix> betas(cap + 1);
  for (int m = 0; m <= cap; ++m) betas[m] = defect_from_grams(grams, m);

  for (int m = 1; m <= cap; ++m) {
    const double scale = tol * std::max(1.0, max_abs(grams[m]));
    if (!cls.isometric_order && max_abs(betas[m]) <= scale) cls.isometric_order = m;
    if (max_hermitian_eigenvalue(betas[m]) <= scale) cls.concave_orders.push_back(m);
  }
  cls.expansive = min_hermitian_eigenvalue(betas[1]) >= -tol * std::max(1.0, max_abs(grams[1]));
  cls.left_invertible = min_hermitian_eigenvalue(grams[1]) >= 1e-10;

  std::optional<int> governing = cls.isometric_order;
  if (!governing && !cls.concave_orders.empty()) governing = cls.concave_orders.front();
  if (governing && *governing >= 2 && cls.left_invertible)
    cls.inequality = inequality_check(t, *governing, 64, tol);
  return cls;
}

ShimorinReport shimorin_check(const Matrix& t, double tol, int truncation) {
  ShimorinReport rep;
  const Matrix gram = t.adjoint() * t;
  if (min_hermitian_eigenvalue(gram) < 1e-10)
    fail("NotLeftInvertible", "T*T has an eigenvalue below 1e-10");
  rep.left_invertible = true;

  const Matrix l = left_inverse(t);
  const auto grams = power_grams(t, 3);
  const Matrix beta1 = defect_from_grams(grams, 1);
  const Matrix beta2 = defect_from_grams(grams, 2);
  const Matrix beta3 = defect_from_grams(grams, 3);

  rep.expansive = min_hermitian_eigenvalue(beta1) >= -tol * scale_of(beta1);
  const Matrix transformed = beta1 - l.adjoint() * beta1 * l - beta2;
  rep.transformed_margin = min_hermitian_eigenvalue(transformed);
  rep.transformed_holds = rep.transformed_margin >= -tol * scale_of(beta1);

  rep.beta3_max_eigenvalue = max_hermitian_eigenvalue(beta3);
  rep.beta3_concave = rep.beta3_max_eigenvalue <= tol * std::max(1.0, max_abs(grams[3]));

  // Partial telescoping sums sum_{k=0}^{n} L*^k beta_2 L^k <= beta_1.
  Matrix term = beta2;
  Matrix partial = beta2;
  double violation = max_hermitian_eigenvalue(partial - beta1);
  for (int n = 1; n <= truncation; ++n) {
    term = l.adjoint() * term * l;
    partial += term;
    violation = std::max(violation, max_hermitian_eigenvalue(partial - beta1));
  }
  rep.telescoping_violation = violation;
  rep.telescoping_ok = violation <= tol * scale_of(beta1);

  rep.implication_ok =
      !(rep.transformed_holds && rep.expansive) || (rep.beta3_concave && rep.telescoping_ok);
  return rep;
}

Matrix hyper_range(const Matrix& t, double tol) {
  if (t.rows() != t.cols()) fail("DimensionMismatch", "operator matrix must be square");
  const int dim = static_cast<int>(t.rows());
  Matrix basis = Matrix::Identity(dim, dim);
  for (int iter = 0; iter <= dim; ++iter) {
    Matrix next = column_space_basis(t * basis, tol);
    if (next.cols() == basis.cols()) return next;
    basis = next;
  }
  return basis;
}

WoldReport wold_split(const Matrix& t, double tol) {
  const Matrix gram = t.adjoint() * t;
  if (min_hermitian_eigenvalue(gram) < 1e-10)
    fail("NotLeftInvertible", "T*T has an eigenvalue below 1e-10");
  const int dim = static_cast<int>(t.rows());
  const double scale = scale_of(t);

  WoldReport rep;
  rep.unitary_basis = hyper_range(t, tol);
  rep.analytic_basis = orthogonal_complement(rep.unitary_basis, dim);
  rep.analytic_dimension = static_cast<int>(rep.analytic_basis.cols());

  const Matrix proj = rep.unitary_basis * rep.unitary_basis.adjoint();
  rep.reducing_deviation = max_abs(proj * t - t * proj);
  rep.reducing_ok = rep.reducing_deviation <= tol * scale * dim;
  if (!rep.reducing_ok) rep.diagnostics.push_back("NotReducing");

  if (rep.unitary_basis.cols() > 0) {
    const Matrix sub = rep.unitary_basis.adjoint() * t * rep.unitary_basis;
    rep.restriction_unitary_deviation =
        std::max(unitary_deviation(sub),
                 max_abs(sub * sub.adjoint() - Matrix::Identity(sub.rows(), sub.cols())));
  }
  rep.unitary_ok = rep.restriction_unitary_deviation <= tol * scale * dim;
  if (!rep.unitary_ok) rep.diagnostics.push_back("NotUnitaryOnHyperRange");

  // Wandering span of the analytic part: span{ S^n ker S* : n >= 0 }.
  if (rep.analytic_dimension > 0) {
    const Matrix s = rep.analytic_basis.adjoint() * t * rep.analytic_basis;
    const Matrix kernel = null_space_basis(Matrix(s.adjoint()), tol);
    Matrix stack(rep.analytic_dimension, 0);
    Matrix orbit = kernel;
    for (int n = 0; n < rep.analytic_dimension && orbit.cols() > 0; ++n) {
      Matrix widened(rep.analytic_dimension, stack.cols() + orbit.cols());
      widened << stack, orbit;
      stack = widened;
      orbit = s * orbit;
    }
    rep.wandering_span_dimension = numeric_rank(stack, tol);
  }
  rep.wandering_ok = rep.wandering_span_dimension == rep.analytic_dimension;
  if (!rep.wandering_ok) rep.diagnostics.push_back("WanderingSpanDeficient");

  rep.pass = rep.reducing_ok && rep.unitary_ok && rep.wandering_ok;
  return rep;
}

std::vector<Complex> eigenvalues_of(const Matrix& t) {
  Eigen::ComplexEigenSolver<Matrix> es(t, false);
  std::vector<Complex> ev(es.eigenvalues().data(), es.eigenvalues().data() + t.rows());
  return ev;
}

EigenModulusReport eigen_modulus_check(const Matrix& t, int m, double tol) {
  const Classification cls = classify(t, std::min(m, 8), 1e-9);
  if (!cls.isometric_order || *cls.isometric_order > m)
    fail("PreconditionViolated", "matrix does not classify as an m-isometry within the cap");
  EigenModulusReport rep;
  rep.tol = tol;
  rep.eigenvalues = eigenvalues_of(t);
  for (const Complex& ev : rep.eigenvalues)
    rep.max_modulus_deviation = std::max(rep.max_modulus_deviation, std::abs(std::abs(ev) - 1.0));
  rep.pass = rep.max_modulus_deviation <= tol;
  return rep;
}

unsigned long long hockey_stick(int p, int r) {
  if (r < 1 || r > p - 1) fail("BadRange", "hockey stick needs 1 <= r <= p-1");
  unsigned long long sum = 0;
  for (int i = r; i <= p - 1; ++i) sum += binomial_exact(i - 1, r - 1);
  const unsigned long long expected = binomial_exact(p - 1, r);
  if (sum != expected) fail("IdentityViolated", "hockey-stick summation mismatch");
  return sum;
}

ConcaveGrowthReport concave_growth_check(const Matrix& t, int m, int nmax, double tol) {
  if (m < 1) fail("BadRange", "concavity order must be positive");
  if (nmax < m) fail("BadRange", "nmax must be at least m");
  const auto grams = power_grams(t, nmax);
  std::vector<Matrix> betas(m);
  for (int j = 0; j < m; ++j) betas[j] = defect_from_grams(grams, j);
  const Matrix beta_m = defect_from_grams(grams, m);
  if (max_hermitian_eigenvalue(beta_m) > tol * std::max(1.0, max_abs(grams[m])))
    fail("PreconditionViolated", "matrix is not m-concave within tolerance");

  ConcaveGrowthReport rep;
  rep.m = m;
  rep.nmax = nmax;
  rep.beta_m_minus_1_min_eigenvalue = min_hermitian_eigenvalue(betas[m - 1]);
  bool ok = rep.beta_m_minus_1_min_eigenvalue >= -tol * scale_of(betas[m - 1]);
  for (int n = m; n <= nmax; ++n) {
    Matrix bound = Matrix::Zero(t.rows(), t.cols());
    for (int j = 0; j < m; ++j) bound += binomial(n, j) * betas[j];
    const double margin = min_hermitian_eigenvalue(bound - grams[n]);
    rep.margins.push_back(margin);
    ok = ok && margin >= -tol * std::max(1.0, max_abs(grams[n]));
  }
  rep.pass = ok;
  return rep;
}

Matrix weighted_shift_matrix(const std::vector<double>& weights, int truncation) {
  if (truncation < 1) fail("BadRange", "truncation must be positive");
  if (static_cast<int>(weights.size()) < truncation)
    fail("TruncationTooShort", "need at least S weights for an (S+1)-dimensional shift");
  Matrix w = Matrix::Zero(truncation + 1, truncation + 1);
  for (int k = 0; k < truncation; ++k) {
    if (weights[k] == 0.0) fail("BadRange", "shift weights must be nonzero");
    w(k + 1, k) = weights[k];
  }
  return w;
}

ShiftEquivalenceReport weighted_shift_equivalence(const std::vector<double>& weights, int m,
                                                  int truncation, double tol) {
  if (m < 2) fail("BadRange", "equivalence check needs m >= 2");
  if (truncation < m + 2) fail("TruncationTooShort", "need S >= m + 2 for a nonempty window");
  const Matrix w = weighted_shift_matrix(weights, truncation);
  const int window = truncation - m;

  const auto grams = power_grams(w, m);
  std::vector<Matrix> betas(m + 1);
  for (int r = 0; r <= m; ++r) betas[r] = defect_from_grams(grams, r);

  // Backward weighted shift; an exact left inverse away from the top index.
  Matrix lhat = Matrix::Zero(truncation + 1, truncation + 1);
  for (int k = 0; k < truncation; ++k) lhat(k, k + 1) = 1.0 / weights[k];

  ShiftEquivalenceReport rep;
  rep.m = m;
  rep.truncation = truncation;
  rep.window = window;

  double pos_violation = 0.0;
  double ineq_violation = 0.0;
  double identity_dev = 0.0;
  for (int r = 1; r <= m - 2; ++r) {
    const double scale = scale_of(betas[r]);
    // On e_n the backward series ends at k = n, so the sum below is exact.
    std::vector<Matrix> powers(window + 1);
    powers[0] = betas[r + 1];
    for (int k = 1; k <= window; ++k) powers[k] = lhat.adjoint() * powers[k - 1] * lhat;
    double norm_sq = 1.0;  // ||W^n e_0||^2
    for (int n = 0; n <= window; ++n) {
      const double diag = betas[r](n, n).real();
      pos_violation = std::max(pos_violation, (-diag) / scale);
      double series = 0.0;
      for (int k = 1; k <= n; ++k) series += powers[k](n, n).real();
      const double value = diag - series;
      ineq_violation = std::max(ineq_violation, (-value) / scale);
      // mu-positive-diagonal: value * ||W^n e_0||^2 equals beta_r(0,0).
      identity_dev =
          std::max(identity_dev, std::abs(value * norm_sq - betas[r](0, 0).real()) / scale);
      if (n < window) norm_sq *= weights[n] * weights[n];
    }
  }
  rep.max_positivity_violation = pos_violation;
  rep.max_inequality_violation = ineq_violation;
  rep.diagonal_identity_deviation = identity_dev;
  rep.condition_positivity = pos_violation <= tol;
  rep.condition_inequality = ineq_violation <= tol;

  double concave_violation = 0.0;
  for (int n = 0; n <= window; ++n)
    concave_violation = std::max(concave_violation, betas[m](n, n).real() / scale_of(betas[m]));
  rep.concave_on_window = concave_violation <= tol;

  rep.agree = rep.condition_inequality == rep.condition_positivity;
  rep.pass = rep.agree;
  return rep;
}

}  // namespace dsl
