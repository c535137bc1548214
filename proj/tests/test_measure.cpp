#include "dsl/corpus.hpp"
#include "dsl/linalg.hpp"
#include "dsl/measure.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dsl;

namespace {

Matrix scalar(double v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

// Independent oracle: moments of lambda_R by trapezoid quadrature of
// zeta^{-j} P_mu(R zeta) dsigma, with the Poisson kernel written out by hand.
Complex dilated_moment_quadrature(const SemiSpectralMeasure& mu, double big_r, int j) {
  const int n = 1 << 14;
  Complex acc{};
  for (int a = 0; a < n; ++a) {
    const double theta = 2.0 * std::numbers::pi * a / n;
    const Complex z = std::polar(big_r, theta);
    double p = 0.0;
    for (const Atom& atom : mu.atoms()) {
      const Complex zeta = std::polar(1.0, atom.angle);
      p += (1.0 - std::norm(z)) / std::norm(z - zeta) * atom.weight(0, 0).real();
    }
    acc += std::polar(1.0, -j * theta) * p;
  }
  return acc / static_cast<double>(n);
}

}  // namespace

TEST_CASE("atomic construction and moments") {
  const auto delta1 = make_atomic({{0.0, scalar(1.0)}});
  CHECK(max_abs(delta1.moment(0) - scalar(1.0)) < 1e-15);
  CHECK(max_abs(delta1.moment(7) - scalar(1.0)) < 1e-15);

  const auto zero = make_atomic({});
  CHECK(max_abs(zero.moment(0)) == 0.0);
  CHECK(max_abs(zero.moment(3)) == 0.0);

  CHECK_THROWS_WITH_AS(make_atomic({{0.0, scalar(-1.0)}}), doctest::Contains("NonPSDWeight"),
                       Error);
  Matrix nonherm(2, 2);
  nonherm << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(make_atomic({{0.0, nonherm}}), doctest::Contains("NonHermitianWeight"),
                       Error);
  Matrix other(2, 2);
  other << 1.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_WITH_AS(make_atomic({{0.0, scalar(1.0)}, {1.0, other}}),
                       doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("atom at i gives moment -i") {
  const auto mu = make_atomic({{std::numbers::pi / 2.0, scalar(1.0)}});
  const Complex m1 = mu.moment(1)(0, 0);
  CHECK(m1.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(m1.imag() == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("lebesgue moments") {
  const auto sigma = lebesgue(1);
  CHECK(max_abs(sigma.moment(0) - scalar(1.0)) == 0.0);
  CHECK(max_abs(sigma.moment(3)) == 0.0);
  const auto sigma2 = lebesgue(2);
  CHECK(max_abs(sigma2.mass() - Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("poisson values") {
  const auto mu = make_atomic({{0.0, scalar(1.0)}});
  CHECK(max_abs(mu.poisson(0.0) - mu.mass()) < 1e-15);
  // (1 - 0.25) / |0.5 - 1|^2 = 3
  CHECK(mu.poisson(Complex(0.5, 0.0))(0, 0).real() == doctest::Approx(3.0).epsilon(1e-14));

  const auto sigma = lebesgue(1);
  CHECK(sigma.poisson(Complex(0.3, -0.4))(0, 0).real() == doctest::Approx(1.0));

  CHECK_THROWS_WITH_AS(mu.poisson(Complex(1.0, 0.0)), doctest::Contains("PointOnBoundary"),
                       Error);
}

TEST_CASE("poisson kernel bounds") {
  Rng rng(11);
  const auto mu = random_measure(rng, 2, 3);
  const Matrix mass = mu.mass();
  for (int trial = 0; trial < 200; ++trial) {
    const double r = rng.uniform(0.0, 0.95);
    const Complex z = std::polar(r, rng.uniform(0.0, 2 * std::numbers::pi));
    Vector x(2);
    x << rng.in_box(1.0), rng.in_box(1.0);
    x.normalize();
    const double p = inner(Vector(mu.poisson(z) * x), x).real();
    const double base = inner(Vector(mass * x), x).real();
    const double lo = (1.0 - std::norm(z)) / 4.0 * base;
    const double hi = 4.0 / (1.0 - std::norm(z)) * base;
    CHECK(p >= lo - 1e-12);
    CHECK(p <= hi + 1e-12);
  }
}

TEST_CASE("moment hermitian symmetry and block toeplitz positivity") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = rng.uniform_int(1, 3);
    const auto mu = random_measure(rng, dim, 4);
    for (int j = 0; j <= 8; ++j)
      CHECK(max_abs(mu.moment(-j) - mu.moment(j).adjoint()) <= 1e-12);
    for (int order = 1; order <= 8; ++order)
      CHECK(min_hermitian_eigenvalue(block_toeplitz(mu, order)) >= -1e-9);
  }
}

TEST_CASE("dilate_measure moments") {
  const auto mu = make_atomic({{0.0, scalar(1.0)}});
  const MomentSequence same = dilate_measure(mu, 1.0, 4);
  for (int j = -4; j <= 4; ++j) CHECK(max_abs(same.at(j) - mu.moment(j)) == 0.0);

  const MomentSequence half = dilate_measure(mu, 0.5, 4);
  CHECK(half.at(2)(0, 0).real() == doctest::Approx(0.25).epsilon(1e-15));
  // Cross-check against circle quadrature of zeta^{-2} P_mu(R zeta).
  const Complex oracle = dilated_moment_quadrature(mu, 0.5, 2);
  CHECK(std::abs(half.at(2)(0, 0) - oracle) < 1e-12);

  const MomentSequence tiny = dilate_measure(mu, 1e-8, 2);
  CHECK(std::abs(tiny.at(1)(0, 0)) < 1e-7);
  CHECK(tiny.at(0)(0, 0).real() == doctest::Approx(1.0));

  CHECK_THROWS_WITH_AS(dilate_measure(mu, 0.0, 2), doctest::Contains("BadRadius"), Error);
  CHECK_THROWS_WITH_AS(dilate_measure(mu, 1.5, 2), doctest::Contains("BadRadius"), Error);
}

TEST_CASE("poisson of dilated trig measure is P_mu(R z)") {
  Rng rng(23);
  const auto mu = random_trig_density_measure(rng, 2, 3);
  const double big_r = 0.6;
  const MomentSequence lam = dilate_measure(mu, big_r, 3);
  std::vector<Matrix> coeffs;
  for (int j = -3; j <= 3; ++j) coeffs.push_back(lam.at(j));
  const auto lambda = make_trig_density(2, 3, coeffs);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z = std::polar(rng.uniform(0.0, 0.9), rng.uniform(0.0, 6.28));
    CHECK(max_abs(lambda.poisson(z) - mu.poisson(big_r * z)) <= 1e-9);
  }
}

TEST_CASE("conjugation") {
  Rng rng(5);
  const auto mu = random_measure(rng, 2, 3);
  const Matrix eye = Matrix::Identity(2, 2);
  const auto same = mu.conjugated(eye);
  for (int j = -3; j <= 3; ++j) CHECK(max_abs(same.moment(j) - mu.moment(j)) < 1e-15);

  const auto scalar_mu = random_atomic_measure(rng, 1, 2);
  Matrix phase(1, 1);
  phase(0, 0) = std::polar(1.0, 0.7);
  const auto rotated = scalar_mu.conjugated(phase);
  for (int j = -3; j <= 3; ++j)
    CHECK(max_abs(rotated.moment(j) - scalar_mu.moment(j)) < 1e-15);

  const Matrix v = random_unitary(rng, 2);
  const auto conj = mu.conjugated(v);
  for (int j = -4; j <= 4; ++j)
    CHECK(max_abs(conj.moment(j) - v.adjoint() * mu.moment(j) * v) <= 1e-13);

  Matrix notu(2, 2);
  notu << 1.0, 0.0, 0.0, 2.0;
  CHECK_THROWS_WITH_AS(mu.conjugated(notu), doctest::Contains("NotUnitary"), Error);
}

TEST_CASE("trig density validation") {
  // density 2 cos(theta) is not PSD
  std::vector<Matrix> moments{scalar(1.0), scalar(0.0), scalar(1.0)};
  CHECK_THROWS_WITH_AS(make_trig_density(1, 1, moments), doctest::Contains("NonPSDWeight"),
                       Error);
  // C(-s) = C(s)^* violated
  std::vector<Matrix> asym{scalar(0.5), scalar(1.0), scalar(0.25)};
  CHECK_THROWS_WITH_AS(make_trig_density(1, 1, asym), doctest::Contains("NonHermitianWeight"),
                       Error);
}

TEST_CASE("angles canonicalized") {
  const auto mu = make_atomic({{-std::numbers::pi, scalar(1.0)}});
  CHECK(mu.atoms()[0].angle == doctest::Approx(std::numbers::pi));
}
