#ifndef DSL_RECOVERY_HPP
#define DSL_RECOVERY_HPP

#include "dsl/measure.hpp"
#include "dsl/spaces.hpp"

#include <string>
#include <vector>

namespace dsl {

/// Pairings <T^l x_i, T^j x_k> of the orbit of a kernel basis, laid out like a
/// Gram matrix in the k-major ordering: row = l * dimE + i, col = j * dimE + k.
/// Everything the recovery pipeline consumes is read off this one matrix.
struct GramOracle {
  int dim_e = 0;
  int max_power = 0;  // d
  Matrix pairings;
};

/// The monomial-basis Gram of a model space is already an orbit Gram.
GramOracle oracle_from_gram(const GramModel& model);

/// Orbit Gram of a matrix with a designated kernel basis (columns). The basis
/// is orthonormalized first; it is not required to actually span ker T*, but
/// a wrong basis will surface as DiagonalInconsistent downstream.
GramOracle oracle_from_operator(const Matrix& t, const Matrix& kernel_basis, int max_power);

struct InvarianceReport {
  double min_eigenvalue = 0.0;
  double invariance_deviation = 0.0;  // ||T* A T - A||
  double diagonal_variation = 0.0;    // pairings at fixed l-j must not vary with l
  MomentSequence moments;
  bool pass = false;
};

/// Lemma-style hypothesis check: A PSD and T*AT = A, after which the pairings
/// <A T^l x, T^j y> depend only on l - j and define a moment sequence.
/// Throws NotPositive / NotInvariant when the hypotheses fail.
InvarianceReport invariance_check(const Matrix& a, const Matrix& t, const Matrix& kernel_basis,
                                  int max_power, double tol);

/// Same, with the kernel basis computed from T (ker T*).
InvarianceReport invariance_check(const Matrix& a, const Matrix& t, double tol);

/// Order-s moments of mu_r extracted from the defect pairings
///   < (beta_r - sum_k L*^k beta_{r+1} L^k) T^l x, T^j y >,
/// which depend only on j - l. Requires 1 <= r <= m-1 and S <= d - m; a
/// variation across l beyond tol throws DiagonalInconsistent.
MomentSequence recover_moments(const GramOracle& oracle, int m, int r, int max_order,
                               double tol = 1e-9);

struct FeasibilityResult {
  bool feasible = false;
  double min_eigenvalue = 0.0;
};

/// PSD verdict on the block-Toeplitz matrix of a Hermitian sequence; the
/// necessary condition for being the moments of a positive measure.
FeasibilityResult toeplitz_feasibility(const MomentSequence& seq, int order);

/// Truncated trigonometric moment problem, scalar case: an atomic measure
/// whose moments reproduce m(s) for |s| <= order within 1e-7. Rank-deficient
/// Toeplitz data yields its (unique) Vandermonde decomposition; full-rank data
/// is first matched by the roots-of-unity quadrature and otherwise extended
/// one order to the PSD boundary before decomposition.
SemiSpectralMeasure atomic_from_moments(const MomentSequence& seq, int order);

struct RoundTripCertificate {
  int m = 0;
  int d = 0;
  int moment_order = 0;  // S
  double max_gram_deviation = 0.0;
  std::vector<bool> feasible;                   // per r = 1..m-1
  std::vector<double> min_toeplitz_eigenvalues; // per r
  bool pass = false;
  std::vector<std::string> diagnostics;
};

/// Full model round trip: recover the moment sequences of every mu_r, check
/// feasibility, rebuild the Gram of degree d - m - 1 from them, and compare
/// against the oracle pairings entrywise.
RoundTripCertificate roundtrip_verify(const GramOracle& oracle, int m, int d, int moment_order,
                                      double tol);

struct UniquenessReport {
  int moment_order = 0;
  double max_conjugation_deviation = 0.0;
  bool pass = false;
};

/// Conjugation law behind uniqueness: recovering from the V-conjugated tuple
/// must produce V* m_r(s) V for every r and s.
UniquenessReport uniqueness_check(const MeasureTuple& tuple, const Matrix& v, int d, double tol);

}  // namespace dsl

#endif
