#include "dsl/corpus.hpp"
#include "dsl/dirichlet.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

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

// Independent oracle for D_{mu,0} on atomic measures: the boundary integral
// against a finite sum of point masses, evaluated pointwise.
double boundary_energy_oracle(const SemiSpectralMeasure& mu, const VectorPolynomial& f) {
  double acc = 0.0;
  for (const Atom& a : mu.atoms()) {
    const Vector value = f.evaluate(std::polar(1.0, a.angle));
    acc += inner(Vector(a.weight * value), value).real();
  }
  return acc;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("monomial energies against the binomial table") {
  const auto sigma = lebesgue(1);
  for (int n = 0; n <= 6; ++n)
    for (int j = 0; j <= 20; ++j) {
      const auto zj = VectorPolynomial::monomial(j, e1());
      const double expected = j >= n ? binomial(j, n) : 0.0;
      CHECK(std::abs(dirichlet_energy(sigma, n, zj) - expected) <= 1e-12);
    }
  // D_{sigma,1}(z e) = <e, e>
  CHECK(dirichlet_energy(sigma, 1, VectorPolynomial::monomial(1, e1())) == doctest::Approx(1.0));
}

TEST_CASE("low degree polynomials vanish") {
  Rng rng(1);
  const auto mu = random_measure(rng, 2, 3);
  const auto f = random_polynomial(rng, 2, 2);
  CHECK(dirichlet_energy(mu, 3, f) == 0.0);
  CHECK(dirichlet_energy(mu, 5, f) == 0.0);
}

TEST_CASE("point mass boundary energy") {
  const auto mu = make_atomic({{0.0, scalar(1.0)}});
  VectorPolynomial f(1);
  f.set_coeff(0, e1());
  f.set_coeff(1, e1());
  CHECK(dirichlet_energy(mu, 0, f) == doctest::Approx(4.0));
  CHECK(dirichlet_energy(mu, 0, f) == doctest::Approx(boundary_energy_oracle(mu, f)));
}

TEST_CASE("order zero form equals the boundary integral for random atomic data") {
  Rng rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = rng.uniform_int(1, 3);
    const auto mu = random_atomic_measure(rng, dim, 4);
    const auto f = random_polynomial(rng, dim, rng.uniform_int(0, 8));
    CHECK(dirichlet_energy(mu, 0, f) ==
          doctest::Approx(boundary_energy_oracle(mu, f)).epsilon(1e-10));
  }
}

TEST_CASE("form is sesquilinear hermitian and psd") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = rng.uniform_int(1, 3);
    const auto mu = random_measure(rng, dim, 4);
    const auto f = random_polynomial(rng, dim, 7);
    const auto g = random_polynomial(rng, dim, 7);
    for (int n = 0; n <= 6; ++n) {
      const Complex fg = dirichlet_form(mu, n, f, g);
      const Complex gf = dirichlet_form(mu, n, g, f);
      CHECK(std::abs(fg - std::conj(gf)) <= 1e-10);
      CHECK(dirichlet_energy(mu, n, f) >= -1e-10);
      // additivity in the first slot
      const Complex sum = dirichlet_form(mu, n, f + g, g);
      CHECK(std::abs(sum - fg - dirichlet_form(mu, n, g, g)) <= 1e-9);
    }
  }
}

TEST_CASE("lshift properties of the form") {
  Rng rng(4);
  const auto mu = random_measure(rng, 2, 3);
  auto f = random_polynomial(rng, 2, 9);
  SUBCASE("zLf equals f when f(0) = 0") {
    f.set_coeff(0, Vector::Zero(2));
    for (int n = 1; n <= 4; ++n)
      CHECK(relative_residual(dirichlet_energy(mu, n, shift(lshift(f))),
                              dirichlet_energy(mu, n, f)) <= 1e-12);
  }
  SUBCASE("L is contractive and L^k f dies") {
    VectorPolynomial lk = f;
    for (int k = 0; k <= f.degree() + 1; ++k) {
      const double before = dirichlet_energy(mu, 2, lk);
      lk = lshift(lk);
      CHECK(dirichlet_energy(mu, 2, lk) <= before + 1e-10);
    }
    CHECK(dirichlet_energy(mu, 2, lk) == 0.0);
  }
}

TEST_CASE("difference identity suite on seeded corpus") {
  Rng rng(5);
  VerifyOptions options;
  options.quadrature_checks = false;
  for (int trial = 0; trial < 12; ++trial) {
    const int dim = rng.uniform_int(1, 3);
    const auto mu = random_measure(rng, dim, 4);
    const auto f = random_polynomial(rng, dim, rng.uniform_int(0, 8));
    const auto reports = verify_difference_identities(mu, f, 5, options);
    for (const auto& rep : reports) {
      INFO(rep.identity, " n=", rep.n, " residual=", rep.residual);
      CHECK(rep.pass);
      CHECK(rep.residual <= 1e-8);
    }
  }
}

TEST_CASE("difference identities on a constant polynomial") {
  const auto mu = lebesgue(2);
  VectorPolynomial f(2);
  Vector c(2);
  c << 1.0, Complex(0, 2);
  f.set_coeff(0, c);
  VerifyOptions options;
  options.quadrature_checks = false;
  for (const auto& rep : verify_difference_identities(mu, f, 4, options))
    CHECK(rep.residual == 0.0);
}

TEST_CASE("worked example for the first difference") {
  // f = z^2, sigma: D_1(zf) - D_1(f) = C(3,1) - C(2,1) = 1 = D_0(f)
  const auto sigma = lebesgue(1);
  const auto f = VectorPolynomial::monomial(2, e1());
  const double lhs = dirichlet_energy(sigma, 1, shift(f)) - dirichlet_energy(sigma, 1, f);
  CHECK(lhs == doctest::Approx(1.0));
  CHECK(dirichlet_energy(sigma, 0, f) == doctest::Approx(1.0));
}

TEST_CASE("refined integral basics") {
  const auto sigma = lebesgue(1);
  const auto f = VectorPolynomial::monomial(0, e1());
  CHECK(refined_integral(sigma, 2, 0.5, f) == 0.0);
  CHECK_THROWS_WITH_AS(refined_integral(sigma, 0, 1.5, f), doctest::Contains("BadRadius"), Error);
  CHECK_THROWS_WITH_AS(refined_integral(sigma, 0, 0.5, f, {8, 8}),
                       doctest::Contains("GridTooCoarse"), Error);
}

TEST_CASE("refined integral agrees with the dilated exact form") {
  Rng rng(6);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = rng.uniform_int(1, 2);
    const auto mu = random_measure(rng, dim, 3);
    const auto f = random_polynomial(rng, dim, 6);
    for (double big_r : {0.5, 0.9})
      for (int n = 0; n <= 2; ++n) {
        const auto rep = verify_dilate_consistency(mu, f, n, big_r);
        INFO("n=", n, " R=", big_r, " residual=", rep.residual);
        CHECK(rep.residual <= 1e-4);
      }
  }
}

TEST_CASE("refined integral is monotone in R and approaches the form") {
  Rng rng(7);
  const auto mu = random_atomic_measure(rng, 1, 3);
  const auto f = random_polynomial(rng, 1, 5);
  for (int n = 1; n <= 2; ++n) {
    double prev = 0.0;
    for (double big_r : {0.3, 0.5, 0.7, 0.9}) {
      const double value = refined_integral(mu, n, big_r, f);
      CHECK(value >= prev - 1e-6);
      prev = value;
    }
    CHECK(prev <= dirichlet_energy(mu, n, f) + 1e-6);
  }
}

TEST_CASE("quadrature consistency near the boundary") {
  // The R -> 1 limit: resolve the angular direction finely enough that
  // aliasing from the atoms stays below the tolerance.
  Rng rng(8);
  QuadratureGrid fine{64, 8192};
  for (int trial = 0; trial < 3; ++trial) {
    const auto mu = random_atomic_measure(rng, 1, 3);
    const auto f = random_polynomial(rng, 1, 8);
    for (int n = 1; n <= 2; ++n) {
      const double exact = dirichlet_energy(mu, n, f);
      const double near = refined_integral(mu, n, 0.99997, f, fine);
      CHECK(relative_residual(near, exact) <= 1e-3);
    }
  }
}

TEST_CASE("refined difference identity by quadrature") {
  Rng rng(9);
  const auto mu = random_measure(rng, 2, 3);
  const auto f = random_polynomial(rng, 2, 5);
  for (double big_r : {0.5, 0.9})
    for (int n = 0; n <= 1; ++n) {
      const auto rep = verify_refined_difference(mu, f, n, big_r);
      INFO("n=", n, " R=", big_r, " residual=", rep.residual);
      CHECK(rep.pass);
    }
}

TEST_CASE("dilation contractivity") {
  Rng rng(10);
  SUBCASE("diagonal case") {
    const auto sigma = lebesgue(1);
    for (int j = 0; j <= 6; ++j) {
      const auto zj = VectorPolynomial::monomial(j, e1());
      const double full = dirichlet_energy(sigma, 2, zj);
      const double shrunk = dirichlet_energy(sigma, 2, dilate(zj, 0.5));
      CHECK(shrunk == doctest::Approx(std::pow(0.5, 2 * j) * full));
    }
  }
  SUBCASE("random corpus") {
    for (int trial = 0; trial < 10; ++trial) {
      const int dim = rng.uniform_int(1, 3);
      const auto mu = random_measure(rng, dim, 4);
      const auto f = random_polynomial(rng, dim, 10);
      const int n = rng.uniform_int(0, 4);
      const auto rep = verify_dilation_contractivity(mu, f, n, {0.5, 0.9, 0.99});
      CHECK(rep.pass);
      const auto gap = dilation_gap_report(mu, f, n, {0.5, 0.9, 0.99});
      CHECK(gap.pass);
    }
  }
  SUBCASE("r equal to one is allowed and exact") {
    const auto mu = lebesgue(1);
    const auto f = VectorPolynomial::monomial(3, e1());
    const auto rep = verify_dilation_contractivity(mu, f, 1, {1.0});
    CHECK(rep.residual == 0.0);
  }
}

TEST_CASE("multiplier bound") {
  Rng rng(11);
  SUBCASE("constant polynomial") {
    const auto mu = random_measure(rng, 2, 3);
    VectorPolynomial f(2);
    Vector c(2);
    c << 1.0, -2.0;
    f.set_coeff(0, c);
    // D_{mu,1}(ze) = <mu_hat(0) e, e> from the coefficient formula
    CHECK(dirichlet_energy(mu, 1, shift(f)) ==
          doctest::Approx(inner(Vector(mu.mass() * c), c).real()));
    CHECK(verify_multiplier_bound(mu, f).pass);
  }
  SUBCASE("zero constant term reduces to the 3x bound") {
    const auto mu = random_measure(rng, 2, 3);
    auto f = random_polynomial(rng, 2, 6);
    f.set_coeff(0, Vector::Zero(2));
    const auto rep = verify_multiplier_bound(mu, f);
    CHECK(rep.pass);
    CHECK(dirichlet_energy(mu, 1, shift(f)) <= 3.0 * dirichlet_energy(mu, 1, f) + 1e-9);
  }
  SUBCASE("zero polynomial") { CHECK(verify_multiplier_bound(lebesgue(1), VectorPolynomial(1)).pass); }
  SUBCASE("random corpus") {
    for (int trial = 0; trial < 10; ++trial) {
      const int dim = rng.uniform_int(1, 3);
      CHECK(verify_multiplier_bound(random_measure(rng, dim, 4),
                                    random_polynomial(rng, dim, 8))
                .pass);
    }
  }
}

TEST_CASE("embedding bounds") {
  Rng rng(12);
  SUBCASE("constant at n = 1") {
    VectorPolynomial f(1);
    f.set_coeff(0, e1());
    const auto rep = verify_embeddings(lebesgue(1), f, 1);
    CHECK(rep.residual == 0.0);
  }
  SUBCASE("sigma with z^2 at n = 2") {
    const auto rep = verify_embeddings(lebesgue(1), VectorPolynomial::monomial(2, e1()), 2);
    CHECK(rep.pass);
  }
  SUBCASE("random corpus at n = 3") {
    const auto mu = random_measure(rng, 2, 3);
    const auto f = random_polynomial(rng, 2, 6);
    CHECK(verify_embeddings(mu, f, 3).pass);
  }
}

TEST_CASE("truncation tail") {
  const auto sigma = lebesgue(1);
  VectorPolynomial f(1);
  f.set_coeff(0, e1());
  f.set_coeff(3, e1());
  CHECK(truncation_tail(sigma, 1, f, 3) == 0.0);
  CHECK(truncation_tail(sigma, 1, f, 5) == 0.0);
  CHECK(truncation_tail(sigma, 1, f, 2) == doctest::Approx(3.0));

  Rng rng(13);
  const auto mu = random_measure(rng, 2, 3);
  const auto g = random_polynomial(rng, 2, 9);
  double prev = std::numeric_limits<double>::infinity();
  for (int ell = 0; ell <= 9; ++ell) {
    const double value = truncation_tail(mu, 2, g, ell);
    CHECK(value <= prev + 1e-12);
    prev = value;
  }
}

TEST_CASE("identity reports carry digests and tolerances") {
  const auto mu = lebesgue(1);
  const auto f = VectorPolynomial::monomial(2, e1());
  VerifyOptions options;
  options.quadrature_checks = false;
  const auto reports = verify_difference_identities(mu, f, 2, options);
  CHECK(!reports.empty());
  for (const auto& rep : reports) {
    CHECK(!rep.inputs_digest.empty());
    CHECK(rep.pass == (rep.residual <= rep.tol));
  }
  CHECK(all_pass(reports));
}
