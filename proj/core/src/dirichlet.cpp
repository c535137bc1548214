#include "dsl/dirichlet.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <sstream>

namespace dsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Newton iteration on the Legendre recurrence, mapped to [a, b].
GaussLegendre gauss_legendre(int n, double a, double b) {
  GaussLegendre q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int half = (n + 1) / 2;
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  for (int i = 1; i <= half; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    q.nodes[i - 1] = xm - xl * z;
    q.nodes[n - i] = xm + xl * z;
    q.weights[i - 1] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    q.weights[n - i] = q.weights[i - 1];
  }
  return q;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Disc integral of <P_mu(z) g(z), g(z)> * radial_weight(|z|) against
// normalized area measure, on the disc of radius R.
double disc_integral(const SemiSpectralMeasure& mu, const VectorPolynomial& g, double big_r,
                     int n_weight_exponent, double r2_offset, QuadratureGrid grid) {
  auto gl = gauss_legendre(grid.radial, 0.0, big_r);
  std::vector<double> radial_terms(grid.radial);
  for (int i = 0; i < grid.radial; ++i) {
    const double r = gl.nodes[i];
    std::vector<double> ang(grid.angular);
    for (int a = 0; a < grid.angular; ++a) {
      const Complex z = std::polar(r, kTwoPi * a / grid.angular);
      const Vector gv = g.evaluate(z);
      ang[a] = inner(Vector(mu.poisson(z) * gv), gv).real();
    }
    const double mean = pairwise_sum(ang) / grid.angular;
    radial_terms[i] =
        gl.weights[i] * 2.0 * r * mean * std::pow(r2_offset - r * r, n_weight_exponent);
  }
  return pairwise_sum(radial_terms);
}

struct Fnv1a {
  std::uint64_t state = 1469598103934665603ull;
  void feed_bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      state ^= b[i];
      state *= 1099511628211ull;
    }
  }
  void feed(double x) { feed_bytes(&x, sizeof(x)); }
  void feed(int x) { feed_bytes(&x, sizeof(x)); }
  void feed(const Matrix& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        feed(m(r, c).real());
        feed(m(r, c).imag());
      }
  }
};

IdentityReport make_report(std::string name, int n, double residual, double tol,
                           std::string digest) {
  IdentityReport rep;
  rep.identity = std::move(name);
  rep.n = n;
  rep.residual = residual;
  rep.tol = tol;
  rep.pass = residual <= tol;
  rep.inputs_digest = std::move(digest);
  return rep;
}

}  // namespace

double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::string digest_inputs(const SemiSpectralMeasure& mu, const VectorPolynomial& f) {
  Fnv1a h;
  h.feed(mu.dim_e());
  if (mu.is_atomic()) {
    for (const Atom& a : mu.atoms()) {
      h.feed(a.angle);
      h.feed(a.weight);
    }
  } else {
    const auto& d = mu.density();
    h.feed(d.max_order);
    for (const Matrix& c : d.moments) h.feed(c);
  }
  h.feed(f.coeff_count());
  for (int k = 0; k < f.coeff_count(); ++k) h.feed(Matrix(f.coeff(k)));
  std::ostringstream os;
  os << std::hex << h.state;
  return os.str();
}

double refined_integral(const SemiSpectralMeasure& mu, int n, double big_r,
                        const VectorPolynomial& f, QuadratureGrid grid) {
  if (!(big_r > 0.0) || !(big_r < 1.0)) fail("BadRadius", "refined integral requires 0 < R < 1");
  if (grid.radial < 16 || grid.angular < 16) fail("GridTooCoarse", "grid sizes must be >= 16");
  if (n < 0) fail("BadRange", "order must be nonnegative");
  if (mu.dim_e() != f.dim_e()) fail("DimensionMismatch", "measure and polynomial dims differ");

  if (n == 0) {
    std::vector<double> ang(grid.angular);
    for (int a = 0; a < grid.angular; ++a) {
      const Complex zeta = std::polar(1.0, kTwoPi * a / grid.angular);
      const Complex z = big_r * zeta;
      const Vector fv = f.evaluate(z);
      ang[a] = inner(Vector(mu.poisson(z) * fv), fv).real();
    }
    return pairwise_sum(ang) / grid.angular;
  }
  const VectorPolynomial fn = derivative(f, n);
  if (fn.is_zero()) return 0.0;
  const double norm = factorial(n) * factorial(n - 1);
  return disc_integral(mu, fn, big_r, n - 1, big_r * big_r, grid) / norm;
}

double dalpha_integral_norm_sq(const VectorPolynomial& f, double alpha, const Matrix& q,
                               QuadratureGrid grid) {
  if (alpha > -1.0) fail("BadRange", "integral D_alpha norm needs alpha <= -1");
  if (q.rows() != f.dim_e() || q.cols() != f.dim_e())
    fail("DimensionMismatch", "Q has wrong dimension");
  const int exponent = static_cast<int>(std::lround(-alpha - 1.0));
  auto gl = gauss_legendre(grid.radial, 0.0, 1.0);
  std::vector<double> radial_terms(grid.radial);
  for (int i = 0; i < grid.radial; ++i) {
    const double r = gl.nodes[i];
    std::vector<double> ang(grid.angular);
    for (int a = 0; a < grid.angular; ++a) {
      const Complex z = std::polar(r, kTwoPi * a / grid.angular);
      const Vector fv = f.evaluate(z);
      ang[a] = inner(Vector(q * fv), fv).real();
    }
    const double mean = pairwise_sum(ang) / grid.angular;
    radial_terms[i] = gl.weights[i] * 2.0 * r * mean * std::pow(1.0 - r * r, exponent);
  }
  return pairwise_sum(radial_terms);
}

std::vector<IdentityReport> verify_difference_identities(const SemiSpectralMeasure& mu,
                                                         const VectorPolynomial& f, int nmax,
                                                         VerifyOptions options) {
  if (nmax < 1 || nmax > 8) fail("BadRange", "nmax must lie in [1, 8]");
  const std::string digest = digest_inputs(mu, f);
  std::vector<IdentityReport> out;

  auto energy = [&](int n, const VectorPolynomial& g) { return dirichlet_energy(mu, n, g); };
  const VectorPolynomial zf = shift(f);

  // (a) D_{mu,n+1}(zf) - D_{mu,n+1}(f) = D_{mu,n}(f)
  for (int n = 0; n < nmax; ++n) {
    const double lhs = energy(n + 1, zf) - energy(n + 1, f);
    out.push_back(make_report("lemma2.1ii", n, relative_residual(lhs, energy(n, f)),
                              options.exact_tol, digest));
  }

  // (b) D_{mu,n}(zf) - D_{mu,n}(f) = D_{mu,n-1}(f)
  for (int n = 1; n <= nmax; ++n) {
    const double lhs = energy(n, zf) - energy(n, f);
    out.push_back(make_report("prop2.7", n, relative_residual(lhs, energy(n - 1, f)),
                              options.exact_tol, digest));
  }

  // (c) the refined difference identity, by quadrature.
  if (options.quadrature_checks) {
    for (int n = 0; n <= std::min(nmax - 1, 2); ++n) {
      double worst = 0.0;
      for (double big_r : {0.5, 0.9})
        worst = std::max(worst,
                         verify_refined_difference(mu, f, n, big_r, options).residual);
      out.push_back(make_report("prop2.4", n, worst, options.quadrature_tol, digest));
    }
  }

  // (d) sum_{k>=1} D_{mu,j}(L^k f) = D_{mu,j+1}(f); the sum ends at deg f.
  for (int j = 1; j < nmax; ++j) {
    std::vector<double> terms;
    VectorPolynomial lk = lshift(f);
    for (int k = 1; k <= std::max(f.degree(), 0); ++k, lk = lshift(lk))
      terms.push_back(energy(j, lk));
    const double lhs = pairwise_sum(terms);
    out.push_back(make_report("lemma2.10", j, relative_residual(lhs, energy(j + 1, f)),
                              options.exact_tol, digest));
  }

  // (e) the j = 0 extension of (d).
  {
    std::vector<double> terms;
    VectorPolynomial lk = lshift(f);
    for (int k = 1; k <= std::max(f.degree(), 0); ++k, lk = lshift(lk))
      terms.push_back(energy(0, lk));
    const double lhs = pairwise_sum(terms);
    out.push_back(make_report("cor3.3ii", 0, relative_residual(lhs, energy(1, f)),
                              options.exact_tol, digest));
  }

  // (f) forward differences of k -> D_{mu,j}(z^k f) collapse to lower orders.
  for (int j = 1; j <= nmax; ++j) {
    std::vector<double> powers;  // D_{mu,j}(z^k f), k = 0..j+2
    VectorPolynomial zkf = f;
    for (int k = 0; k <= j + 2; ++k, zkf = shift(zkf)) powers.push_back(energy(j, zkf));
    double worst = 0.0;
    for (int d = 0; d <= j + 2; ++d) {
      double delta = 0.0;
      for (int k = 0; k <= d; ++k)
        delta += ((d - k) % 2 == 0 ? 1.0 : -1.0) * binomial(d, k) * powers[k];
      const double expected = d <= j ? energy(j - d, f) : 0.0;
      worst = std::max(worst, relative_residual(delta, expected));
    }
    out.push_back(make_report("eq4.1", j, worst, options.exact_tol, digest));
  }

  return out;
}

IdentityReport verify_dilate_consistency(const SemiSpectralMeasure& mu, const VectorPolynomial& f,
                                         int n, double big_r, VerifyOptions options) {
  const double lhs = refined_integral(mu, n, big_r, f, options.grid);
  const DilatedMeasure lambda(mu, big_r);
  const double rhs = dirichlet_energy(lambda, n, dilate(f, big_r));
  IdentityReport rep = make_report("prop2.3", n, relative_residual(lhs, rhs),
                                   options.quadrature_tol, digest_inputs(mu, f));
  return rep;
}

IdentityReport verify_refined_difference(const SemiSpectralMeasure& mu, const VectorPolynomial& f,
                                         int n, double big_r, VerifyOptions options) {
  const VectorPolynomial zf = shift(f);
  const double lhs = refined_integral(mu, n + 1, big_r, zf, options.grid) -
                     big_r * big_r * refined_integral(mu, n + 1, big_r, f, options.grid);
  const double rhs = big_r * big_r * refined_integral(mu, n, big_r, f, options.grid);
  return make_report("prop2.4", n, relative_residual(lhs, rhs), options.quadrature_tol,
                     digest_inputs(mu, f));
}

IdentityReport verify_dilation_contractivity(const SemiSpectralMeasure& mu,
                                             const VectorPolynomial& f, int n,
                                             const std::vector<double>& r_grid) {
  const double base = dirichlet_energy(mu, n, f);
  double violation = 0.0;
  for (double r : r_grid) {
    if (!(r > 0.0) || r > 1.0) fail("BadRadius", "r-grid must lie in (0, 1]");
    violation = std::max(violation, dirichlet_energy(mu, n, dilate(f, r)) - base);
  }
  return make_report("thm1.1-contractivity", n, std::max(0.0, violation), 1e-10,
                     digest_inputs(mu, f));
}

IdentityReport dilation_gap_report(const SemiSpectralMeasure& mu, const VectorPolynomial& f,
                                   int n, const std::vector<double>& r_grid) {
  if (r_grid.empty()) fail("BadRange", "r-grid must be nonempty");
  std::vector<double> grid = r_grid;
  std::sort(grid.begin(), grid.end());
  const double first = dirichlet_energy(mu, n, dilate(f, grid.front()) - f);
  const double last = dirichlet_energy(mu, n, dilate(f, grid.back()) - f);
  IdentityReport rep = make_report("thm1.1-dilation-gap", n, last, first + 1e-9,
                                   digest_inputs(mu, f));
  return rep;
}

IdentityReport verify_multiplier_bound(const SemiSpectralMeasure& mu, const VectorPolynomial& f) {
  const Vector f0 = f.coeff(0);
  const double bound =
      2.0 * inner(Vector(mu.mass() * f0), f0).real() + 3.0 * dirichlet_energy(mu, 1, f);
  const double lhs = dirichlet_energy(mu, 1, shift(f));
  return make_report("prop2.6-multiplier", 1, std::max(0.0, lhs - bound), 1e-9,
                     digest_inputs(mu, f));
}

IdentityReport verify_embeddings(const SemiSpectralMeasure& mu, const VectorPolynomial& f, int n,
                                 QuadratureGrid grid) {
  if (n < 1) fail("BadRange", "embedding bounds need n >= 1");
  const Matrix mass = mu.mass();
  const VectorPolynomial fn = derivative(f, n);
  const double d_energy = dirichlet_energy(mu, n, f);
  const double norm = factorial(n) * factorial(n - 1);

  double worst = 0.0;
  {
    const double rhs = dalpha_integral_norm_sq(fn, -(n + 1.0), mass, grid) / (4.0 * norm);
    if (rhs > d_energy) worst = std::max(worst, relative_residual(rhs, d_energy));
  }
  if (n >= 2) {
    const double rhs = 4.0 * dalpha_integral_norm_sq(fn, -(n - 1.0), mass, grid) / norm;
    if (d_energy > rhs) worst = std::max(worst, relative_residual(d_energy, rhs));
  }
  return make_report("lemma2.4-embedding", n, worst, 1e-3, digest_inputs(mu, f));
}

}  // namespace dsl
