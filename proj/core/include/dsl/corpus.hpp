#ifndef DSL_CORPUS_HPP
#define DSL_CORPUS_HPP

#include "dsl/measure.hpp"
#include "dsl/polynomial.hpp"
#include "dsl/spaces.hpp"

#include <cstdint>
#include <vector>

namespace dsl {

/// Deterministic generator: draws are derived from mt19937_64 output bits
/// directly, so streams are reproducible across standard library versions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive
  Complex in_box(double amplitude);
  double gaussian();

private:
  std::uint64_t next();
  std::uint64_t state_;
};

Matrix random_hermitian_psd(Rng& rng, int dim);
Matrix random_matrix(Rng& rng, int dim, double amplitude);
Matrix random_unitary(Rng& rng, int dim);

SemiSpectralMeasure random_atomic_measure(Rng& rng, int dim_e, int max_atoms);
SemiSpectralMeasure random_trig_density_measure(Rng& rng, int dim_e, int max_order);
SemiSpectralMeasure random_measure(Rng& rng, int dim_e, int max_atoms);

VectorPolynomial random_polynomial(Rng& rng, int dim_e, int degree);

MeasureTuple random_tuple(Rng& rng, int m, int dim_e, int max_atoms);
MeasureTuple random_atomic_tuple(Rng& rng, int m, int dim_e, int max_atoms);

/// Angles in [0, 2*pi) with pairwise circular separation at least min_sep.
std::vector<double> random_separated_angles(Rng& rng, int count, double min_sep);

/// The 2x2 Jordan block [[1,1],[0,1]], the standard 3-isometry example.
Matrix jordan_block_2();

}  // namespace dsl

#endif
