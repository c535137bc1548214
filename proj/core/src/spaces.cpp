#include "dsl/spaces.hpp"

#include "dsl/linalg.hpp"

#include <cmath>

namespace dsl {

MeasureTuple make_tuple(std::vector<SemiSpectralMeasure> measures) {
  if (measures.empty()) fail("DimensionMismatch", "a tuple needs at least one measure (m >= 2)");
  const int dim_e = measures.front().dim_e();
  for (const auto& mu : measures)
    if (mu.dim_e() != dim_e) fail("DimensionMismatch", "tuple measures have mixed dimensions");
  return MeasureTuple{std::move(measures)};
}

MeasureTuple conjugate_tuple(const MeasureTuple& tuple, const Matrix& v) {
  std::vector<SemiSpectralMeasure> mapped;
  mapped.reserve(tuple.measures.size());
  for (const auto& mu : tuple.measures) mapped.push_back(mu.conjugated(v));
  return MeasureTuple{std::move(mapped)};
}

Complex tuple_inner(const MeasureTuple& tuple, const VectorPolynomial& f,
                    const VectorPolynomial& g) {
  return tuple_inner_over(std::span<const SemiSpectralMeasure>(tuple.measures), f, g);
}

double tuple_norm_sq(const MeasureTuple& tuple, const VectorPolynomial& f) {
  return tuple_inner(tuple, f, f).real();
}

GramModel gram(const MeasureTuple& tuple, int degree) {
  if (degree < 0) fail("BadRange", "degree must be nonnegative");
  GramModel model;
  model.tuple = tuple;
  model.degree = degree;
  model.gram = gram_matrix(std::span<const SemiSpectralMeasure>(tuple.measures), tuple.dim_e(),
                           degree);
  return model;
}

Complex defect_form(const MeasureTuple& tuple, int r, const VectorPolynomial& f,
                    const VectorPolynomial& g) {
  if (r < 0) fail("BadRange", "defect order must be nonnegative");
  Complex acc{};
  VectorPolynomial zf = f;
  VectorPolynomial zg = g;
  for (int q = 0; q <= r; ++q) {
    const double sign = (r - q) % 2 == 0 ? 1.0 : -1.0;
    acc += sign * binomial(r, q) * tuple_inner(tuple, zf, zg);
    if (q < r) {
      zf = shift(zf);
      zg = shift(zg);
    }
  }
  return acc;
}

InequalityFormResult inequality_form(const MeasureTuple& tuple, int r,
                                     const VectorPolynomial& f) {
  const int m = tuple.order();
  if (r < 1 || r > m - 1) fail("BadRange", "inequality form needs 1 <= r <= m-1");
  double value = defect_form(tuple, r, f, f).real();
  VectorPolynomial lf = lshift(f);
  for (int n = 1; n <= std::max(f.degree(), 0); ++n, lf = lshift(lf))
    value -= defect_form(tuple, r + 1, lf, lf).real();
  InequalityFormResult res;
  res.value = value;
  res.expected = dirichlet_energy(tuple.measures[r - 1], 0, f);
  res.residual = relative_residual(res.value, res.expected);
  return res;
}

int wandering_span_dim(const MeasureTuple& tuple, int degree) {
  if (degree < 0) fail("BadRange", "degree must be nonnegative");
  return numeric_rank(gram(tuple, degree).gram, 1e-9);
}

}  // namespace dsl
