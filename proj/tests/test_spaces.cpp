#include "dsl/corpus.hpp"
#include "dsl/linalg.hpp"
#include "dsl/spaces.hpp"

#include <doctest.h>

using namespace dsl;

namespace {

Vector e1() {
  Vector e(1);
  e(0) = 1.0;
  return e;
}

Matrix scalar(double v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

MeasureTuple sigma_tuple() { return make_tuple({lebesgue(1)}); }

}  // namespace

TEST_CASE("tuple inner products") {
  const auto t = sigma_tuple();
  for (int k = 0; k <= 6; ++k) {
    const auto zk = VectorPolynomial::monomial(k, e1());
    CHECK(tuple_norm_sq(t, zk) == doctest::Approx(1.0 + k));
  }

  Rng rng(1);
  const auto big = random_tuple(rng, 4, 2, 3);
  VectorPolynomial c(2);
  Vector v(2);
  v << 1.0, Complex(0, 1);
  c.set_coeff(0, v);
  CHECK(tuple_norm_sq(big, c) == doctest::Approx(2.0));  // constants see only H^2

  const auto g = random_polynomial(rng, 2, 5);
  CHECK(std::abs(tuple_inner(big, c, shift(g))) <= 1e-12);
}

TEST_CASE("gram matrices") {
  SUBCASE("classical dirichlet") {
    const auto model = gram(sigma_tuple(), 2);
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = 1.0;
    expected(1, 1) = 2.0;
    expected(2, 2) = 3.0;
    CHECK(max_abs(model.gram - expected) <= 1e-14);
  }
  SUBCASE("zero measures give the hardy gram") {
    const auto zero = make_trig_density(2, 0, {Matrix::Zero(2, 2)});
    const auto model = gram(make_tuple({zero, zero}), 3);
    CHECK(max_abs(model.gram - Matrix::Identity(8, 8)) <= 1e-15);
  }
  SUBCASE("entries match direct tuple_inner evaluation") {
    Rng rng(2);
    const auto t = random_tuple(rng, 4, 2, 3);
    const int d = 5;
    const auto model = gram(t, d);
    CHECK(hermitian_deviation(model.gram) <= 1e-12);
    CHECK(min_hermitian_eigenvalue(model.gram) >= -1e-9);
    for (int k = 0; k <= d; ++k)
      for (int l = 0; l <= d; ++l)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            VectorPolynomial f(2), g(2);
            f.set_coeff(k, Vector::Unit(2, i));
            g.set_coeff(l, Vector::Unit(2, j));
            const Complex direct = tuple_inner(t, f, g);
            CHECK(std::abs(model.gram(k * 2 + i, l * 2 + j) - direct) <= 1e-11);
          }
  }
  SUBCASE("conjugated tuple gram is a block unitary conjugation") {
    Rng rng(3);
    const auto t = random_atomic_tuple(rng, 3, 2, 3);
    const Matrix v = random_unitary(rng, 2);
    const int d = 4;
    const auto base = gram(t, d);
    const auto conj = gram(conjugate_tuple(t, v), d);
    Matrix u = Matrix::Zero(10, 10);
    for (int k = 0; k <= d; ++k) u.block(2 * k, 2 * k, 2, 2) = v;
    CHECK(max_abs(conj.gram - u.adjoint() * base.gram * u) <= 1e-11);
  }
}

TEST_CASE("defect forms") {
  Rng rng(4);
  SUBCASE("order zero is the tuple inner product") {
    const auto t = random_tuple(rng, 3, 2, 3);
    const auto f = random_polynomial(rng, 2, 6);
    const auto g = random_polynomial(rng, 2, 6);
    CHECK(std::abs(defect_form(t, 0, f, g) - tuple_inner(t, f, g)) <= 1e-12);
  }
  SUBCASE("the model shift is an m-isometry") {
    const auto t = sigma_tuple();
    for (int deg = 0; deg <= 12; ++deg) {
      const auto f = VectorPolynomial::monomial(deg, e1());
      CHECK(std::abs(defect_form(t, 2, f, f)) <= 1e-10);
    }
    for (int trial = 0; trial < 8; ++trial) {
      const int m = rng.uniform_int(2, 5);
      const int dim = rng.uniform_int(1, 3);
      const auto tuple = random_tuple(rng, m, dim, 4);
      const auto f = random_polynomial(rng, dim, 12);
      const double norm = tuple_norm_sq(tuple, f);
      CHECK(std::abs(defect_form(tuple, m, f, f)) <= 1e-8 * (1.0 + norm));
      CHECK(std::abs(defect_form(tuple, m + 1, f, f)) <= 1e-7 * (1.0 + norm));
    }
  }
  SUBCASE("scalar dirichlet first defect is constant one") {
    const auto t = sigma_tuple();
    for (int k = 0; k <= 8; ++k) {
      const auto zk = VectorPolynomial::monomial(k, e1());
      CHECK(defect_form(t, 1, zk, zk).real() == doctest::Approx(1.0));
    }
  }
  SUBCASE("positivity chain") {
    for (int trial = 0; trial < 6; ++trial) {
      const int m = rng.uniform_int(2, 5);
      const auto tuple = random_tuple(rng, m, 2, 3);
      const auto f = random_polynomial(rng, 2, 9);
      for (int r = 1; r <= m - 1; ++r)
        CHECK(defect_form(tuple, r, f, f).real() >= -1e-9 * (1.0 + tuple_norm_sq(tuple, f)));
    }
  }
}

TEST_CASE("inequality form reproduces the order zero energy") {
  Rng rng(5);
  SUBCASE("constants") {
    const auto tuple = random_tuple(rng, 4, 2, 3);
    VectorPolynomial f(2);
    Vector c(2);
    c << 0.5, Complex(0, -1);
    f.set_coeff(0, c);
    for (int r = 1; r <= 3; ++r) {
      const auto res = inequality_form(tuple, r, f);
      const Matrix mass = tuple.measures[r - 1].mass();
      CHECK(res.value == doctest::Approx(inner(Vector(mass * c), c).real()));
      CHECK(res.residual <= 1e-10);
    }
  }
  SUBCASE("top order has no series term") {
    const auto tuple = random_tuple(rng, 3, 1, 3);
    const auto f = random_polynomial(rng, 1, 7);
    const auto res = inequality_form(tuple, 2, f);
    CHECK(res.value == doctest::Approx(defect_form(tuple, 2, f, f).real()).epsilon(1e-9));
  }
  SUBCASE("random corpus") {
    for (int trial = 0; trial < 6; ++trial) {
      const auto tuple = random_tuple(rng, 4, 2, 3);
      const auto f = random_polynomial(rng, 2, 9);
      for (int r = 1; r <= 3; ++r) {
        const auto res = inequality_form(tuple, r, f);
        INFO("r=", r, " residual=", res.residual);
        CHECK(res.residual <= 1e-8);
        CHECK(res.value >= -1e-9 * (1.0 + tuple_norm_sq(tuple, f)));
      }
    }
  }
  SUBCASE("bad r range") {
    const auto tuple = sigma_tuple();
    const auto f = VectorPolynomial::monomial(1, e1());
    CHECK_THROWS_WITH_AS(inequality_form(tuple, 2, f), doctest::Contains("BadRange"), Error);
  }
}

TEST_CASE("wandering span dimensions") {
  CHECK(wandering_span_dim(sigma_tuple(), 0) == 1);
  CHECK(wandering_span_dim(sigma_tuple(), 5) == 6);
  Rng rng(6);
  const auto t = random_tuple(rng, 3, 3, 3);
  CHECK(wandering_span_dim(t, 4) == 15);
}

TEST_CASE("shimorin gap scenario at the form level") {
  // mu_2(T) > mu_1(T): the transformed inequality must fail at f = 1 while
  // the operator-inequality forms stay nonnegative.
  const auto mu1 = make_atomic({{0.0, scalar(0.5)}});
  const auto mu2 = make_atomic({{1.0, scalar(2.0)}});
  const auto tuple = make_tuple({mu1, mu2});
  VectorPolynomial one(1);
  one.set_coeff(0, e1());

  const double beta1 = defect_form(tuple, 1, one, one).real();
  const double beta2 = defect_form(tuple, 2, one, one).real();
  CHECK(beta2 > beta1);  // Shimorin-transformed fails on the constant
  CHECK(beta1 == doctest::Approx(0.5));
  CHECK(beta2 == doctest::Approx(2.0));
  for (int r = 1; r <= 2; ++r) CHECK(inequality_form(tuple, r, one).value >= -1e-9);
}
