#include "dsl/linalg.hpp"

#include <doctest.h>

using namespace dsl;

TEST_CASE("binomial values") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(20, 6) == 38760.0);
  CHECK(binomial(3, 5) == 0.0);
  CHECK(binomial(5, -1) == 0.0);
  CHECK(binomial_exact(12, 6) == 924ull);
}

TEST_CASE("pairwise sum matches plain sum") {
  std::vector<double> terms;
  double plain = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    terms.push_back(1.0 / i);
    plain += 1.0 / i;
  }
  CHECK(pairwise_sum(std::span<const double>(terms)) == doctest::Approx(plain).epsilon(1e-13));
}

TEST_CASE("hermitian and psd helpers") {
  Matrix m(2, 2);
  m << Complex(1, 0), Complex(0, 1), Complex(0, -1), Complex(2, 0);
  CHECK(hermitian_deviation(m) == doctest::Approx(0.0));
  CHECK(min_hermitian_eigenvalue(m) > 0.0);
  CHECK(is_psd(m, 1e-12));

  Matrix bad(2, 2);
  bad << 1.0, 1.0, 1.0, -1.0;
  CHECK_FALSE(is_psd(bad, 1e-9));
}

TEST_CASE("rank and spaces") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  CHECK(numeric_rank(m, 1e-12) == 2);
  CHECK(column_space_basis(m, 1e-12).cols() == 2);
  CHECK(null_space_basis(m, 1e-12).cols() == 1);
  const Matrix basis = column_space_basis(m, 1e-12);
  const Matrix comp = orthogonal_complement(basis, 3);
  CHECK(comp.cols() == 1);
  CHECK(max_abs(basis.adjoint() * comp) < 1e-12);
}

TEST_CASE("unitary deviation") {
  Matrix u(2, 2);
  u << Complex(0, 1), 0.0, 0.0, Complex(-1, 0);
  CHECK(unitary_deviation(u) < 1e-15);
}
