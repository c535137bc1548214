#ifndef DSL_MEASURE_HPP
#define DSL_MEASURE_HPP

#include "dsl/types.hpp"

#include <concepts>
#include <utility>
#include <variant>
#include <vector>

namespace dsl {

/// Anything that can hand out exact Fourier moments mu_hat(j) = \int zeta^{-j} dmu.
/// Moments must satisfy moment(-j) = moment(j)^H.
template <typename M>
concept MomentSource = requires(const M& m, int j) {
  { m.dim_e() } -> std::convertible_to<int>;
  { m.moment(j) } -> std::convertible_to<Matrix>;
};

/// Hermitian-symmetric family m(-S..S); also usable directly as a moment
/// source with moments outside the stored band read as zero.
class MomentSequence {
public:
  MomentSequence() : MomentSequence(1, 0) {}
  MomentSequence(int dim_e, int max_order);

  int dim_e() const { return dim_e_; }
  int max_order() const { return max_order_; }

  /// Zero matrix for |s| > max_order.
  Matrix moment(int s) const;

  void set(int s, Matrix value);
  const Matrix& at(int s) const;

  /// max over s of |m(-s) - m(s)^H|.
  double hermitian_symmetry_deviation() const;

private:
  int dim_e_;
  int max_order_;
  std::vector<Matrix> data_;  // index s + max_order_
};

struct Atom {
  double angle;   // radians, canonical in [0, 2*pi)
  Matrix weight;  // Hermitian PSD
};

/// Matrix-valued positive measure on the unit circle with exactly computable
/// moments: either finitely many atoms, or a trigonometric-polynomial density
/// against normalized arc length.
class SemiSpectralMeasure {
public:
  struct Atomic {
    std::vector<Atom> atoms;
  };
  struct TrigDensity {
    // Fourier coefficients of the density, stored as moments mu_hat(j) for
    // |j| <= S. The density at angle t is sum_j mu_hat(j) e^{ijt}.
    int max_order = 0;
    std::vector<Matrix> moments;  // index j + max_order
  };

  static SemiSpectralMeasure atomic(int dim_e, std::vector<Atom> atoms);
  static SemiSpectralMeasure trig_density(int dim_e, int max_order, std::vector<Matrix> moments);

  int dim_e() const { return dim_e_; }
  bool is_atomic() const { return std::holds_alternative<Atomic>(body_); }
  const std::vector<Atom>& atoms() const { return std::get<Atomic>(body_).atoms; }
  const TrigDensity& density() const { return std::get<TrigDensity>(body_); }

  /// mu_hat(j) = \int zeta^{-j} dmu(zeta); exact for both representations.
  Matrix moment(int j) const;

  /// mu(T) = moment(0).
  Matrix mass() const { return moment(0); }

  /// Poisson integral P_mu(z) for |z| < 1, a PSD matrix.
  Matrix poisson(Complex z) const;

  /// Weights (or density coefficients) mapped W -> V^H W V for unitary V.
  SemiSpectralMeasure conjugated(const Matrix& v) const;

private:
  SemiSpectralMeasure(int dim_e, std::variant<Atomic, TrigDensity> body)
      : dim_e_(dim_e), body_(std::move(body)) {}

  int dim_e_;
  std::variant<Atomic, TrigDensity> body_;
};

/// make_atomic validates weights: Hermitian within 1e-12, smallest eigenvalue
/// >= -1e-10, all of one dimension. Angles are canonicalized to [0, 2*pi);
/// duplicate atoms are retained and merge implicitly in moment evaluation.
SemiSpectralMeasure make_atomic(const std::vector<std::pair<double, Matrix>>& atoms);

/// Normalized arc length: moment(0) = I, all other moments vanish.
SemiSpectralMeasure lebesgue(int dim_e);

/// Validates a density: Hermitian symmetry of the coefficient family and
/// pointwise PSD sampled at 256 equispaced angles (tolerance -1e-9).
SemiSpectralMeasure make_trig_density(int dim_e, int max_order, const std::vector<Matrix>& moments);

Matrix moment(const SemiSpectralMeasure& mu, int j);
Matrix poisson(const SemiSpectralMeasure& mu, Complex z);
SemiSpectralMeasure conjugate_measure(const SemiSpectralMeasure& mu, const Matrix& v);

/// View of the dilated measure lambda_R with d(lambda_R) = P_mu(R zeta) dsigma:
/// moments are R^|j| mu_hat(j), still exact for every j.
class DilatedMeasure {
public:
  DilatedMeasure(const SemiSpectralMeasure& base, double radius);

  int dim_e() const { return base_->dim_e(); }
  Matrix moment(int j) const;
  Matrix poisson(Complex z) const;  // P_{lambda_R}(z) = P_mu(R z)

private:
  const SemiSpectralMeasure* base_;
  double radius_;
};

/// Materialized moments of lambda_R up to |j| <= max_order.
MomentSequence dilate_measure(const SemiSpectralMeasure& mu, double radius, int max_order);

/// Smallest eigenvalue of the (S+1)*dimE block-Toeplitz matrix with block
/// (k, l) = mu_hat(l - k); a necessary condition for being a measure's moments.
template <MomentSource M>
Matrix block_toeplitz(const M& mu, int order) {
  const int p = mu.dim_e();
  Matrix t = Matrix::Zero((order + 1) * p, (order + 1) * p);
  for (int k = 0; k <= order; ++k)
    for (int l = 0; l <= order; ++l) t.block(k * p, l * p, p, p) = mu.moment(l - k);
  return t;
}

}  // namespace dsl

#endif
