#ifndef DSL_DIRICHLET_HPP
#define DSL_DIRICHLET_HPP

#include "dsl/linalg.hpp"
#include "dsl/measure.hpp"
#include "dsl/polynomial.hpp"
#include "dsl/types.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dsl {

/// Weighted Dirichlet sesquilinear form of order n, evaluated exactly from
/// coefficients:
///
///   D_{mu,n}(f, g) = sum_{k,l >= n} C(min(k,l), n) <mu_hat(l-k) fhat(k), ghat(l)>
///
/// The double sum runs k outer ascending, l inner ascending, with pairwise
/// accumulation, so results are reproducible run to run.
template <MomentSource M>
Complex dirichlet_form(const M& mu, int n, const VectorPolynomial& f, const VectorPolynomial& g) {
  if (f.dim_e() != g.dim_e() || mu.dim_e() != f.dim_e())
    fail("DimensionMismatch", "measure and polynomial dimensions differ");
  if (n < 0) fail("BadRange", "form order must be nonnegative");
  const int df = f.degree();
  const int dg = g.degree();
  if (df < n || dg < n) return Complex{};

  // Moments live on the band l - k in [n - df, dg - n].
  const int lo = n - df;
  const int hi = dg - n;
  std::vector<Matrix> band;
  band.reserve(hi - lo + 1);
  for (int j = lo; j <= hi; ++j) band.push_back(mu.moment(j));

  std::vector<Complex> terms;
  terms.reserve(static_cast<std::size_t>(df - n + 1) * (dg - n + 1));
  for (int k = n; k <= df; ++k) {
    const Vector fk = f.coeff(k);
    for (int l = n; l <= dg; ++l) {
      const double c = binomial(std::min(k, l), n);
      terms.push_back(c * inner(Vector(band[l - k - lo] * fk), g.coeff(l)));
    }
  }
  return pairwise_sum(terms);
}

/// D_{mu,n}(f) = dirichlet_form(mu, n, f, f); real up to roundoff and >= -1e-10.
template <MomentSource M>
double dirichlet_energy(const M& mu, int n, const VectorPolynomial& f) {
  return dirichlet_form(mu, n, f, f).real();
}

/// D_{mu,n}(f - s_ell(f)) for the degree-ell truncation s_ell; 0 once
/// ell >= deg f, and nonincreasing in ell.
template <MomentSource M>
double truncation_tail(const M& mu, int n, const VectorPolynomial& f, int ell) {
  return dirichlet_energy(mu, n, tail(f, ell));
}

struct QuadratureGrid {
  int radial = 64;
  int angular = 256;
};

/// Refined weighted Dirichlet integral D(mu, n, R, f) for 0 < R < 1:
/// the circle average of <P_mu(R zeta) f(R zeta), f(R zeta)> for n = 0, and
/// for n >= 1 the area integral over the disc of radius R of
/// <P_mu(z) f^(n)(z), f^(n)(z)> (R^2-|z|^2)^(n-1) / (n! (n-1)!).
/// This is the one approximate computation in the module (Gauss-Legendre
/// radial nodes, trapezoid angular nodes).
double refined_integral(const SemiSpectralMeasure& mu, int n, double big_r,
                        const VectorPolynomial& f, QuadratureGrid grid = {});

/// Integral form of the D_{alpha,Q} seminorm for alpha <= -1:
/// int_D <Q f(z), f(z)> (1-|z|^2)^(-alpha-1) dA(z), by the same quadrature.
double dalpha_integral_norm_sq(const VectorPolynomial& f, double alpha, const Matrix& q,
                               QuadratureGrid grid = {});

/// One verified identity or inequality. For identities the residual is
/// |lhs - rhs| / max(1, |lhs|, |rhs|); for inequalities it is the violation
/// beyond the allowed side, normalized the same way when the check is
/// relative. pass <=> residual <= tol.
struct IdentityReport {
  std::string identity;
  int n = 0;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string inputs_digest;
};

double relative_residual(double lhs, double rhs);

/// Short stable digest of (mu, f) used to key reports back to their inputs.
std::string digest_inputs(const SemiSpectralMeasure& mu, const VectorPolynomial& f);

struct VerifyOptions {
  double exact_tol = 1e-8;       // relative, for coefficient-formula identities
  double quadrature_tol = 1e-3;  // relative, for quadrature-backed checks
  bool quadrature_checks = true; // include the refined-integral identity
  QuadratureGrid grid = {};
};

/// Difference-identity battery for one (mu, f): the order-raising identities,
/// the refined quadrature identity, the backward L-series identities, and the
/// forward-difference collapse. One report per identity per order.
std::vector<IdentityReport> verify_difference_identities(const SemiSpectralMeasure& mu,
                                                         const VectorPolynomial& f, int nmax,
                                                         VerifyOptions options = {});

/// Prop-2.3-style consistency: the refined integral at radius R equals the
/// exact form of the dilated measure applied to the dilated polynomial.
IdentityReport verify_dilate_consistency(const SemiSpectralMeasure& mu, const VectorPolynomial& f,
                                         int n, double big_r, VerifyOptions options = {});

/// The refined difference identity D(mu,n+1,R,zf) - R^2 D(mu,n+1,R,f)
/// = R^2 D(mu,n,R,f) at one (n, R), by quadrature.
IdentityReport verify_refined_difference(const SemiSpectralMeasure& mu, const VectorPolynomial& f,
                                         int n, double big_r, VerifyOptions options = {});

/// Dilation contractivity D_{mu,n}(f_r) <= D_{mu,n}(f) over an r-grid in (0,1).
IdentityReport verify_dilation_contractivity(const SemiSpectralMeasure& mu,
                                             const VectorPolynomial& f, int n,
                                             const std::vector<double>& r_grid);

/// Companion report: D_{mu,n}(f_r - f) at the grid end vs the grid start;
/// the gap must not grow as r moves toward 1.
IdentityReport dilation_gap_report(const SemiSpectralMeasure& mu, const VectorPolynomial& f,
                                   int n, const std::vector<double>& r_grid);

/// Multiplier bound D_{mu,1}(zf) <= 2 <mu(T) f(0), f(0)> + 3 D_{mu,1}(f).
IdentityReport verify_multiplier_bound(const SemiSpectralMeasure& mu, const VectorPolynomial& f);

/// Embedding bounds between D_{mu,n} and the integral D_{alpha, mu(T)} norms:
/// lower bound for n >= 1, upper bound (constant 4) for n >= 2.
IdentityReport verify_embeddings(const SemiSpectralMeasure& mu, const VectorPolynomial& f, int n,
                                 QuadratureGrid grid = {});

}  // namespace dsl

#endif
