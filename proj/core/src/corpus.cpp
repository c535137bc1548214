#include "dsl/corpus.hpp"

#include "dsl/linalg.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dsl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::uint64_t Rng::next() {
  // splitmix64 step feeding an xorshift finisher; small, fast, reproducible.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Complex Rng::in_box(double amplitude) {
  return {uniform(-amplitude, amplitude), uniform(-amplitude, amplitude)};
}

double Rng::gaussian() {
  const double u1 = std::max(uniform(), 1e-300);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Matrix random_matrix(Rng& rng, int dim, double amplitude) {
  Matrix m(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) m(r, c) = rng.in_box(amplitude);
  return m;
}

Matrix random_hermitian_psd(Rng& rng, int dim) {
  const Matrix b = random_matrix(rng, dim, 1.0);
  Matrix w = b.adjoint() * b / dim;
  return 0.5 * (w + w.adjoint());
}

Matrix random_unitary(Rng& rng, int dim) {
  Matrix g(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

SemiSpectralMeasure random_atomic_measure(Rng& rng, int dim_e, int max_atoms) {
  const int count = rng.uniform_int(1, std::max(1, max_atoms));
  std::vector<std::pair<double, Matrix>> atoms;
  atoms.reserve(count);
  for (int i = 0; i < count; ++i)
    atoms.emplace_back(rng.uniform(0.0, kTwoPi), random_hermitian_psd(rng, dim_e));
  return make_atomic(atoms);
}

SemiSpectralMeasure random_trig_density_measure(Rng& rng, int dim_e, int max_order) {
  // Density Q(zeta) Q(zeta)^* for a matrix polynomial Q, PSD by construction,
  // with closed-form Fourier coefficients.
  const int order = rng.uniform_int(0, std::max(0, max_order));
  std::vector<Matrix> factors;
  factors.reserve(order + 1);
  for (int s = 0; s <= order; ++s) factors.push_back(random_matrix(rng, dim_e, 0.7));
  std::vector<Matrix> moments(2 * order + 1, Matrix::Zero(dim_e, dim_e));
  for (int j = -order; j <= order; ++j)
    for (int t = 0; t <= order; ++t)
      if (t + j >= 0 && t + j <= order)
        moments[j + order] += factors[t + j] * factors[t].adjoint();
  return make_trig_density(dim_e, order, moments);
}

SemiSpectralMeasure random_measure(Rng& rng, int dim_e, int max_atoms) {
  if (rng.uniform() < 0.75) return random_atomic_measure(rng, dim_e, max_atoms);
  return random_trig_density_measure(rng, dim_e, 3);
}

VectorPolynomial random_polynomial(Rng& rng, int dim_e, int degree) {
  VectorPolynomial f(dim_e);
  for (int k = 0; k <= degree; ++k) {
    Vector c(dim_e);
    for (int i = 0; i < dim_e; ++i) c(i) = rng.in_box(1.0);
    f.set_coeff(k, c);
  }
  return f;
}

MeasureTuple random_tuple(Rng& rng, int m, int dim_e, int max_atoms) {
  std::vector<SemiSpectralMeasure> measures;
  measures.reserve(m - 1);
  for (int j = 1; j < m; ++j) measures.push_back(random_measure(rng, dim_e, max_atoms));
  return make_tuple(std::move(measures));
}

MeasureTuple random_atomic_tuple(Rng& rng, int m, int dim_e, int max_atoms) {
  std::vector<SemiSpectralMeasure> measures;
  measures.reserve(m - 1);
  for (int j = 1; j < m; ++j) measures.push_back(random_atomic_measure(rng, dim_e, max_atoms));
  return make_tuple(std::move(measures));
}

std::vector<double> random_separated_angles(Rng& rng, int count, double min_sep) {
  std::vector<double> angles;
  int guard = 0;
  while (static_cast<int>(angles.size()) < count) {
    if (++guard > 100000) fail("BadRange", "cannot place separated angles");
    const double candidate = rng.uniform(0.0, kTwoPi);
    bool ok = true;
    for (double a : angles) {
      double gap = std::abs(candidate - a);
      gap = std::min(gap, kTwoPi - gap);
      if (gap < min_sep) ok = false;
    }
    if (ok) angles.push_back(candidate);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

Matrix jordan_block_2() {
  Matrix j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  return j;
}

}  // namespace dsl
