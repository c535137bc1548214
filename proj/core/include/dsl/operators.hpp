#ifndef DSL_OPERATORS_HPP
#define DSL_OPERATORS_HPP

#include "dsl/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsl {

enum class CheckStatus { Pass, Fail, Inconclusive };

const char* to_string(CheckStatus s);

/// m-th defect operator beta_m(T) = sum_{j=0}^m (-1)^{m-j} C(m,j) T*^j T^j;
/// beta_0 = I. Result is Hermitian by construction.
Matrix defect(const Matrix& t, int m);

/// L_T = (T*T)^{-1} T*; requires the smallest eigenvalue of T*T >= 1e-10.
Matrix left_inverse(const Matrix& t);

/// Cauchy dual T' = T (T*T)^{-1} = L_T^*.
Matrix cauchy_dual(const Matrix& t);

/// One r of the operator inequality beta_r >= sum_{k>=1} L*^k beta_{r+1} L^k,
/// with the series truncated at K terms and an explicit convergence criterion
/// on the last increment. Inconclusive results are never silently passed.
struct SeriesEntry {
  int r = 0;
  bool converged = false;
  double last_increment = 0.0;
  double min_eigenvalue = 0.0;  // of beta_r - S_K
  CheckStatus status = CheckStatus::Inconclusive;
};

/// Psi(r) = sum_{k >= r+1} C(k-1, r) L*^k beta_{r+1} L^k, which is <= I
/// whenever beta_{m-1} >= 0 and the inequalities above hold.
struct PsiEntry {
  int r = 0;
  bool converged = false;
  double last_increment = 0.0;
  double max_eigenvalue = 0.0;
  CheckStatus status = CheckStatus::Inconclusive;
};

struct InequalityCheckReport {
  int m = 0;
  int truncation = 0;
  double tol = 0.0;
  bool beta_m_minus_1_psd = false;
  std::vector<SeriesEntry> series;  // r = 1..m-2; empty (vacuous) for m = 2
  std::vector<PsiEntry> psi;        // r = 0..m-2
  CheckStatus status = CheckStatus::Inconclusive;
};

/// Checks inequality (1.1) for r = 1..m-2 plus the Psi bounds. The Psi bounds
/// gate the verdict only when their hypotheses (series passed, beta_{m-1} PSD)
/// were themselves verified.
InequalityCheckReport inequality_check(const Matrix& t, int m, int truncation, double tol);

struct Classification {
  std::optional<int> isometric_order;  // smallest m <= cap with beta_m ~ 0
  std::vector<int> concave_orders;     // all m <= cap with beta_m <= 0
  bool expansive = false;              // beta_1 >= 0
  bool left_invertible = false;
  std::optional<InequalityCheckReport> inequality;  // run at the governing order
  int cap = 0;
  double tol = 0.0;
};

/// Orders are decided by Hermitian eigenvalue tests thresholded at
/// tol * max(1, ||T*^m T^m||_max); no Cholesky. The inequality report is
/// attached when a governing order (isometric, else smallest concave) of at
/// least 3 exists and T is left invertible.
Classification classify(const Matrix& t, int cap, double tol);

struct ShimorinReport {
  bool left_invertible = false;
  bool expansive = false;
  bool transformed_holds = false;   // beta_2 <= beta_1 - L* beta_1 L
  double transformed_margin = 0.0;  // min eig of beta_1 - L* beta_1 L - beta_2
  double beta3_max_eigenvalue = 0.0;
  bool beta3_concave = false;
  double telescoping_violation = 0.0;  // max_n lambda_max(sum_{k<=n} L*^k beta_2 L^k - beta_1)
  bool telescoping_ok = false;
  bool implication_ok = false;  // (transformed & expansive) => 3-concave & telescoping
};

/// Shimorin-transformed inequality and the implications it forces: 3-concavity
/// and the r = 1 case of the operator inequality via telescoping partial sums.
ShimorinReport shimorin_check(const Matrix& t, double tol = 1e-9, int truncation = 64);

/// Orthonormal basis of the hyper-range, the stabilized intersection of the
/// iterated column spaces T^n(H). Iteration is capped at dim(H) steps.
Matrix hyper_range(const Matrix& t, double tol = 1e-9);

struct WoldReport {
  Matrix unitary_basis;   // spans the hyper-range
  Matrix analytic_basis;  // orthogonal complement
  double reducing_deviation = 0.0;
  double restriction_unitary_deviation = 0.0;
  int analytic_dimension = 0;
  int wandering_span_dimension = 0;
  bool reducing_ok = false;
  bool unitary_ok = false;
  bool wandering_ok = false;
  bool pass = false;
  std::vector<std::string> diagnostics;
};

/// Wold-type split against the hyper-range: the projection must reduce T, the
/// restriction must be unitary, and on the complement the span of S^n(ker S*)
/// must exhaust the subspace. Failures are reported, not thrown.
WoldReport wold_split(const Matrix& t, double tol = 1e-9);

struct EigenModulusReport {
  double max_modulus_deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::vector<Complex> eigenvalues;
};

/// Finite-dimensional surrogate of the spectral picture: every eigenvalue of
/// an m-isometric matrix is unimodular. Refuses matrices that do not classify
/// as m-isometries within the cap.
EigenModulusReport eigen_modulus_check(const Matrix& t, int m, double tol);

/// Hockey-stick identity sum_{i=r}^{p-1} C(i-1, r-1) = C(p-1, r); asserted in
/// exact integer arithmetic, returns the common value.
unsigned long long hockey_stick(int p, int r);

struct ConcaveGrowthReport {
  int m = 0;
  int nmax = 0;
  double beta_m_minus_1_min_eigenvalue = 0.0;
  std::vector<double> margins;  // per n = m..nmax: min eig of sum_j C(n,j) beta_j - T*^n T^n
  bool pass = false;
};

/// Growth bound T*^n T^n <= sum_{j<m} C(n,j) beta_j for m-concave T, plus
/// beta_{m-1} >= 0. Refuses matrices that are not m-concave within tolerance.
ConcaveGrowthReport concave_growth_check(const Matrix& t, int m, int nmax, double tol);

struct ShiftEquivalenceReport {
  int m = 0;
  int truncation = 0;      // S; the matrix is (S+1) x (S+1)
  int window = 0;          // diagonal indices 0..window are free of truncation artifacts
  bool condition_inequality = false;  // (1.1) on the safe window
  bool condition_positivity = false;  // beta_r >= 0 on the safe window
  bool concave_on_window = false;     // beta_m <= 0 there (the remark's hypothesis)
  double max_inequality_violation = 0.0;
  double max_positivity_violation = 0.0;
  double diagonal_identity_deviation = 0.0;  // the (1.1) diagonal must be constant
  bool agree = false;
  bool pass = false;
};

/// For a truncated unilateral weighted shift, evaluates both sides of the
/// equivalence "(1.1) for r = 1..m-2  <=>  beta_r >= 0 for r = 1..m-2" on the
/// window of indices that truncation cannot reach, and asserts agreement.
ShiftEquivalenceReport weighted_shift_equivalence(const std::vector<double>& weights, int m,
                                                  int truncation, double tol);

/// The truncated shift matrix itself: W e_k = w_k e_{k+1}, W e_S = 0.
Matrix weighted_shift_matrix(const std::vector<double>& weights, int truncation);

std::vector<Complex> eigenvalues_of(const Matrix& t);

}  // namespace dsl

#endif
