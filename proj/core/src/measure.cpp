#include "dsl/measure.hpp"

#include "dsl/linalg.hpp"

#include <cmath>
#include <numbers>

namespace dsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double canonical_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

}  // namespace

MomentSequence::MomentSequence(int dim_e, int max_order) : dim_e_(dim_e), max_order_(max_order) {
  if (dim_e < 1) fail("DimensionMismatch", "dimE must be positive");
  if (max_order < 0) fail("BadRange", "max_order must be nonnegative");
  data_.assign(2 * max_order + 1, Matrix::Zero(dim_e, dim_e));
}

Matrix MomentSequence::moment(int s) const {
  if (std::abs(s) > max_order_) return Matrix::Zero(dim_e_, dim_e_);
  return data_[s + max_order_];
}

void MomentSequence::set(int s, Matrix value) {
  if (std::abs(s) > max_order_) fail("BadRange", "moment index outside stored band");
  if (value.rows() != dim_e_ || value.cols() != dim_e_)
    fail("DimensionMismatch", "moment block has wrong dimension");
  data_[s + max_order_] = std::move(value);
}

const Matrix& MomentSequence::at(int s) const {
  if (std::abs(s) > max_order_) fail("BadRange", "moment index outside stored band");
  return data_[s + max_order_];
}

double MomentSequence::hermitian_symmetry_deviation() const {
  double dev = 0.0;
  for (int s = 0; s <= max_order_; ++s)
    dev = std::max(dev, max_abs(at(-s) - at(s).adjoint()));
  return dev;
}

SemiSpectralMeasure SemiSpectralMeasure::atomic(int dim_e, std::vector<Atom> atoms) {
  return SemiSpectralMeasure(dim_e, Atomic{std::move(atoms)});
}

SemiSpectralMeasure SemiSpectralMeasure::trig_density(int dim_e, int max_order,
                                                      std::vector<Matrix> moments) {
  return SemiSpectralMeasure(dim_e, TrigDensity{max_order, std::move(moments)});
}

Matrix SemiSpectralMeasure::moment(int j) const {
  if (is_atomic()) {
    Matrix m = Matrix::Zero(dim_e_, dim_e_);
    for (const Atom& a : atoms()) {
      const Complex phase = std::polar(1.0, -j * a.angle);  // zeta^{-j} at zeta = e^{i angle}
      m += phase * a.weight;
    }
    return m;
  }
  const TrigDensity& d = density();
  if (std::abs(j) > d.max_order) return Matrix::Zero(dim_e_, dim_e_);
  return d.moments[j + d.max_order];
}

Matrix SemiSpectralMeasure::poisson(Complex z) const {
  if (std::abs(z) >= 1.0 - 1e-9) fail("PointOnBoundary", "poisson requires |z| < 1 - 1e-9");
  if (is_atomic()) {
    Matrix m = Matrix::Zero(dim_e_, dim_e_);
    const double one_minus = 1.0 - std::norm(z);
    for (const Atom& a : atoms()) {
      const Complex zeta = std::polar(1.0, a.angle);
      m += (one_minus / std::norm(z - zeta)) * a.weight;
    }
    return m;
  }
  // Poisson extension of the density: sum_s r^|s| e^{is phi} mu_hat(s).
  const TrigDensity& d = density();
  const double r = std::abs(z);
  const double phi = std::arg(z);
  Matrix m = Matrix::Zero(dim_e_, dim_e_);
  for (int s = -d.max_order; s <= d.max_order; ++s)
    m += std::pow(r, std::abs(s)) * std::polar(1.0, s * phi) * d.moments[s + d.max_order];
  return m;
}

SemiSpectralMeasure SemiSpectralMeasure::conjugated(const Matrix& v) const {
  if (v.rows() != dim_e_ || v.cols() != dim_e_)
    fail("DimensionMismatch", "conjugating unitary has wrong dimension");
  if (unitary_deviation(v) > 1e-10) fail("NotUnitary", "conjugating matrix is not unitary");
  if (is_atomic()) {
    std::vector<Atom> mapped;
    mapped.reserve(atoms().size());
    for (const Atom& a : atoms()) mapped.push_back({a.angle, v.adjoint() * a.weight * v});
    return atomic(dim_e_, std::move(mapped));
  }
  const TrigDensity& d = density();
  std::vector<Matrix> mapped;
  mapped.reserve(d.moments.size());
  for (const Matrix& c : d.moments) mapped.push_back(v.adjoint() * c * v);
  return trig_density(dim_e_, d.max_order, std::move(mapped));
}

SemiSpectralMeasure make_atomic(const std::vector<std::pair<double, Matrix>>& atoms) {
  int dim_e = -1;
  std::vector<Atom> validated;
  validated.reserve(atoms.size());
  for (const auto& [angle, weight] : atoms) {
    if (weight.rows() != weight.cols()) fail("DimensionMismatch", "atom weight is not square");
    if (dim_e < 0) dim_e = static_cast<int>(weight.rows());
    if (weight.rows() != dim_e) fail("DimensionMismatch", "atom weights have mixed dimensions");
    if (hermitian_deviation(weight) > 1e-12) fail("NonHermitianWeight", "atom weight is not Hermitian");
    if (min_hermitian_eigenvalue(weight) < -1e-10) fail("NonPSDWeight", "atom weight is not PSD");
    validated.push_back({canonical_angle(angle), weight});
  }
  if (dim_e < 0) dim_e = 1;  // empty atom list: the zero measure, scalar by convention
  return SemiSpectralMeasure::atomic(dim_e, std::move(validated));
}

SemiSpectralMeasure lebesgue(int dim_e) {
  if (dim_e < 1) fail("DimensionMismatch", "dimE must be positive");
  std::vector<Matrix> m{Matrix::Identity(dim_e, dim_e)};
  return SemiSpectralMeasure::trig_density(dim_e, 0, std::move(m));
}

SemiSpectralMeasure make_trig_density(int dim_e, int max_order,
                                      const std::vector<Matrix>& moments) {
  if (dim_e < 1) fail("DimensionMismatch", "dimE must be positive");
  if (static_cast<int>(moments.size()) != 2 * max_order + 1)
    fail("DimensionMismatch", "expected 2*max_order+1 coefficient blocks");
  for (const Matrix& c : moments)
    if (c.rows() != dim_e || c.cols() != dim_e)
      fail("DimensionMismatch", "coefficient block has wrong dimension");
  for (int s = 0; s <= max_order; ++s) {
    const Matrix& pos = moments[s + max_order];
    const Matrix& neg = moments[-s + max_order];
    if (max_abs(neg - pos.adjoint()) > 1e-10)
      fail("NonHermitianWeight", "density coefficients violate C(-s) = C(s)^*");
  }
  // Positivity by sampling; exact matrix-trig certification is out of scope.
  constexpr int kSamples = 256;
  for (int i = 0; i < kSamples; ++i) {
    const double t = kTwoPi * i / kSamples;
    Matrix w = Matrix::Zero(dim_e, dim_e);
    for (int s = -max_order; s <= max_order; ++s)
      w += std::polar(1.0, s * t) * moments[s + max_order];
    if (min_hermitian_eigenvalue(w) < -1e-9)
      fail("NonPSDWeight", "density is not PSD at a sample point");
  }
  return SemiSpectralMeasure::trig_density(dim_e, max_order, moments);
}

Matrix moment(const SemiSpectralMeasure& mu, int j) { return mu.moment(j); }
Matrix poisson(const SemiSpectralMeasure& mu, Complex z) { return mu.poisson(z); }

SemiSpectralMeasure conjugate_measure(const SemiSpectralMeasure& mu, const Matrix& v) {
  return mu.conjugated(v);
}

DilatedMeasure::DilatedMeasure(const SemiSpectralMeasure& base, double radius)
    : base_(&base), radius_(radius) {
  if (!(radius > 0.0) || radius > 1.0) fail("BadRadius", "dilation radius must lie in (0, 1]");
}

Matrix DilatedMeasure::moment(int j) const {
  return std::pow(radius_, std::abs(j)) * base_->moment(j);
}

Matrix DilatedMeasure::poisson(Complex z) const { return base_->poisson(radius_ * z); }

MomentSequence dilate_measure(const SemiSpectralMeasure& mu, double radius, int max_order) {
  DilatedMeasure view(mu, radius);
  MomentSequence seq(mu.dim_e(), max_order);
  for (int j = -max_order; j <= max_order; ++j) seq.set(j, view.moment(j));
  return seq;
}

}  // namespace dsl
