#ifndef DSL_POLYNOMIAL_HPP
#define DSL_POLYNOMIAL_HPP

#include "dsl/types.hpp"

#include <vector>

namespace dsl {

/// E-valued polynomial f = sum_j fhat(j) z^j stored as a dense coefficient
/// sequence. Trailing zero coefficients are allowed; degree() reports the
/// largest index with a nonzero coefficient (-1 for the zero polynomial).
class VectorPolynomial {
public:
  explicit VectorPolynomial(int dim_e) : dim_e_(dim_e) {
    if (dim_e < 1) fail("DimensionMismatch", "dimE must be positive");
  }
  VectorPolynomial(int dim_e, std::vector<Vector> coeffs);

  /// Scalar polynomial p times a fixed vector e.
  static VectorPolynomial monomial(int degree, const Vector& direction);

  int dim_e() const { return dim_e_; }
  int degree() const;
  int coeff_count() const { return static_cast<int>(coeffs_.size()); }

  /// fhat(k); zero vector beyond the stored coefficients.
  Vector coeff(int k) const;
  void set_coeff(int k, Vector value);

  Vector evaluate(Complex z) const;

  bool is_zero() const { return degree() < 0; }

private:
  int dim_e_;
  std::vector<Vector> coeffs_;
};

/// Multiplication by z: coefficients move up one index.
VectorPolynomial shift(const VectorPolynomial& f);

/// L f = (f - f(0)) / z: coefficients move down, the constant drops.
VectorPolynomial lshift(const VectorPolynomial& f);

/// f_r(z) = f(rz), i.e. fhat(j) -> r^j fhat(j); requires 0 < r <= 1.
VectorPolynomial dilate(const VectorPolynomial& f, double r);

/// n-th complex derivative.
VectorPolynomial derivative(const VectorPolynomial& f, int n);

VectorPolynomial operator+(const VectorPolynomial& f, const VectorPolynomial& g);
VectorPolynomial operator-(const VectorPolynomial& f, const VectorPolynomial& g);
VectorPolynomial operator*(Complex c, const VectorPolynomial& f);

/// Hardy pairing sum_k <fhat(k), ghat(k)>.
Complex h2_inner(const VectorPolynomial& f, const VectorPolynomial& g);

double h2_norm_sq(const VectorPolynomial& f);

/// sum_k (k+1)^alpha <Q fhat(k), fhat(k)> with Q Hermitian PSD.
double dalpha_norm_sq(const VectorPolynomial& f, double alpha, const Matrix& q);

/// Coefficients ell+1 .. deg(f) only, i.e. f - s_ell(f).
VectorPolynomial tail(const VectorPolynomial& f, int ell);

}  // namespace dsl

#endif
