#include "dsl/polynomial.hpp"

#include "dsl/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dsl {

VectorPolynomial::VectorPolynomial(int dim_e, std::vector<Vector> coeffs)
    : dim_e_(dim_e), coeffs_(std::move(coeffs)) {
  if (dim_e < 1) fail("DimensionMismatch", "dimE must be positive");
  for (const Vector& c : coeffs_)
    if (c.size() != dim_e_) fail("DimensionMismatch", "coefficient has wrong dimension");
}

VectorPolynomial VectorPolynomial::monomial(int degree, const Vector& direction) {
  VectorPolynomial f(static_cast<int>(direction.size()));
  f.set_coeff(degree, direction);
  return f;
}

int VectorPolynomial::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
    if (coeffs_[k].cwiseAbs().maxCoeff() != 0.0) return k;
  return -1;
}

Vector VectorPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Vector::Zero(dim_e_);
  return coeffs_[k];
}

void VectorPolynomial::set_coeff(int k, Vector value) {
  if (k < 0) fail("BadRange", "coefficient index must be nonnegative");
  if (value.size() != dim_e_) fail("DimensionMismatch", "coefficient has wrong dimension");
  if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1, Vector::Zero(dim_e_));
  coeffs_[k] = std::move(value);
}

Vector VectorPolynomial::evaluate(Complex z) const {
  Vector acc = Vector::Zero(dim_e_);
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) acc = z * acc + coeffs_[k];
  return acc;
}

VectorPolynomial shift(const VectorPolynomial& f) {
  VectorPolynomial g(f.dim_e());
  for (int k = 0; k < f.coeff_count(); ++k) g.set_coeff(k + 1, f.coeff(k));
  return g;
}

VectorPolynomial lshift(const VectorPolynomial& f) {
  VectorPolynomial g(f.dim_e());
  for (int k = 1; k < f.coeff_count(); ++k) g.set_coeff(k - 1, f.coeff(k));
  return g;
}

VectorPolynomial dilate(const VectorPolynomial& f, double r) {
  if (!(r > 0.0) || r > 1.0) fail("BadRadius", "dilation radius must lie in (0, 1]");
  VectorPolynomial g(f.dim_e());
  double rk = 1.0;
  for (int k = 0; k < f.coeff_count(); ++k, rk *= r) g.set_coeff(k, rk * f.coeff(k));
  return g;
}

VectorPolynomial derivative(const VectorPolynomial& f, int n) {
  if (n < 0) fail("BadRange", "derivative order must be nonnegative");
  VectorPolynomial g(f.dim_e());
  for (int k = 0; k + n < f.coeff_count(); ++k) {
    double factor = 1.0;
    for (int i = 1; i <= n; ++i) factor *= k + i;  // (k+n)!/k!
    g.set_coeff(k, factor * f.coeff(k + n));
  }
  return g;
}

VectorPolynomial operator+(const VectorPolynomial& f, const VectorPolynomial& g) {
  if (f.dim_e() != g.dim_e()) fail("DimensionMismatch", "polynomial dims differ");
  VectorPolynomial h(f.dim_e());
  const int n = std::max(f.coeff_count(), g.coeff_count());
  for (int k = 0; k < n; ++k) h.set_coeff(k, f.coeff(k) + g.coeff(k));
  return h;
}

VectorPolynomial operator-(const VectorPolynomial& f, const VectorPolynomial& g) {
  if (f.dim_e() != g.dim_e()) fail("DimensionMismatch", "polynomial dims differ");
  VectorPolynomial h(f.dim_e());
  const int n = std::max(f.coeff_count(), g.coeff_count());
  for (int k = 0; k < n; ++k) h.set_coeff(k, f.coeff(k) - g.coeff(k));
  return h;
}

VectorPolynomial operator*(Complex c, const VectorPolynomial& f) {
  VectorPolynomial h(f.dim_e());
  for (int k = 0; k < f.coeff_count(); ++k) h.set_coeff(k, c * f.coeff(k));
  return h;
}

Complex h2_inner(const VectorPolynomial& f, const VectorPolynomial& g) {
  if (f.dim_e() != g.dim_e()) fail("DimensionMismatch", "polynomial dims differ");
  std::vector<Complex> terms;
  const int n = std::min(f.coeff_count(), g.coeff_count());
  terms.reserve(n);
  for (int k = 0; k < n; ++k) terms.push_back(inner(f.coeff(k), g.coeff(k)));
  return pairwise_sum(terms);
}

double h2_norm_sq(const VectorPolynomial& f) { return h2_inner(f, f).real(); }

double dalpha_norm_sq(const VectorPolynomial& f, double alpha, const Matrix& q) {
  if (q.rows() != f.dim_e() || q.cols() != f.dim_e())
    fail("DimensionMismatch", "Q has wrong dimension");
  if (hermitian_deviation(q) > 1e-12 || min_hermitian_eigenvalue(q) < -1e-10)
    fail("NonPSDQ", "Q must be Hermitian PSD");
  std::vector<double> terms;
  terms.reserve(f.coeff_count());
  for (int k = 0; k < f.coeff_count(); ++k) {
    const Vector a = f.coeff(k);
    terms.push_back(std::pow(k + 1.0, alpha) * inner(Vector(q * a), a).real());
  }
  return pairwise_sum(terms);
}

VectorPolynomial tail(const VectorPolynomial& f, int ell) {
  if (ell < 0) fail("BadRange", "truncation degree must be nonnegative");
  VectorPolynomial g(f.dim_e());
  for (int k = ell + 1; k < f.coeff_count(); ++k) g.set_coeff(k, f.coeff(k));
  return g;
}

}  // namespace dsl
