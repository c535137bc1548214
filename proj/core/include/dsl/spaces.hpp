#ifndef DSL_SPACES_HPP
#define DSL_SPACES_HPP

#include "dsl/dirichlet.hpp"
#include "dsl/measure.hpp"
#include "dsl/polynomial.hpp"

#include <span>
#include <vector>

namespace dsl {

/// Ordered (m-1)-tuple of semi-spectral measures sharing one coefficient
/// space; the j-th entry weights the order-j Dirichlet form in the norm
///   ||f||^2 = ||f||^2_{H^2} + sum_{j=1}^{m-1} D_{mu_j, j}(f).
struct MeasureTuple {
  std::vector<SemiSpectralMeasure> measures;

  int order() const { return static_cast<int>(measures.size()) + 1; }  // m
  int dim_e() const { return measures.empty() ? 0 : measures.front().dim_e(); }
};

MeasureTuple make_tuple(std::vector<SemiSpectralMeasure> measures);

MeasureTuple conjugate_tuple(const MeasureTuple& tuple, const Matrix& v);

/// Polarized tuple norm over any family of moment sources (measures or
/// recovered moment sequences): H^2 pairing plus the order-j forms.
template <MomentSource M>
Complex tuple_inner_over(std::span<const M> measures, const VectorPolynomial& f,
                         const VectorPolynomial& g) {
  Complex acc = h2_inner(f, g);
  for (std::size_t j = 0; j < measures.size(); ++j)
    acc += dirichlet_form(measures[j], static_cast<int>(j) + 1, f, g);
  return acc;
}

Complex tuple_inner(const MeasureTuple& tuple, const VectorPolynomial& f,
                    const VectorPolynomial& g);

double tuple_norm_sq(const MeasureTuple& tuple, const VectorPolynomial& f);

/// Gram matrix of the monomial basis up to degree d in the fixed k-major
/// ordering: index(k, i) = k * dimE + i for z^k e_i. Assembled from the
/// closed-form blocks
///   block(k, l) = delta_{kl} I + sum_t C(min(k,l), t) mu_hat_t(l-k)  (entrywise
/// transposed to match the row = first-argument convention).
template <MomentSource M>
Matrix gram_matrix(std::span<const M> measures, int dim_e, int degree) {
  const int blocks = degree + 1;
  Matrix g = Matrix::Zero(blocks * dim_e, blocks * dim_e);
  for (int k = 0; k < blocks; ++k) {
    for (int l = 0; l < blocks; ++l) {
      Matrix acc = Matrix::Zero(dim_e, dim_e);
      const int kl = std::min(k, l);
      for (std::size_t t = 1; t <= measures.size(); ++t)
        if (kl >= static_cast<int>(t))
          acc += binomial(kl, static_cast<int>(t)) * measures[t - 1].moment(l - k);
      Matrix block = acc.transpose();
      if (k == l) block += Matrix::Identity(dim_e, dim_e);
      g.block(k * dim_e, l * dim_e, dim_e, dim_e) = block;
    }
  }
  return g;
}

/// Gram of the monomial basis together with its generating data.
struct GramModel {
  MeasureTuple tuple;
  int degree = 0;
  Matrix gram;

  int dim_e() const { return tuple.dim_e(); }
  int order() const { return tuple.order(); }
};

GramModel gram(const MeasureTuple& tuple, int degree);

/// <beta_r(M_z) f, g> = sum_{q=0}^{r} (-1)^{r-q} C(r, q) <z^q f, z^q g>.
/// Vanishes identically for r >= m on the model space.
Complex defect_form(const MeasureTuple& tuple, int r, const VectorPolynomial& f,
                    const VectorPolynomial& g);

struct InequalityFormResult {
  double value = 0.0;     // Q_r(f) = <beta_r f, f> - sum_{n>=1} <beta_{r+1} L^n f, L^n f>
  double expected = 0.0;  // D_{mu_r, 0}(f), which Q_r must reproduce
  double residual = 0.0;  // |value - expected|, relative
};

/// The operator-inequality quadratic form, together with its closed-form
/// value D_{mu_r,0}(f). Requires 1 <= r <= m-1.
InequalityFormResult inequality_form(const MeasureTuple& tuple, int r, const VectorPolynomial& f);

/// Dimension of span{ z^n x : x in E, n <= d } inside the degree-d slice,
/// as the numeric rank of the Gram matrix.
int wandering_span_dim(const MeasureTuple& tuple, int degree);

}  // namespace dsl

#endif
