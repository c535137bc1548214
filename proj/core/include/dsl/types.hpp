#ifndef DSL_TYPES_HPP
#define DSL_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace dsl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Error with a stable machine-readable code ("NonPSDWeight", "BadRadius", ...).
/// The code is what CLI diagnostics and tests match on; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

/// Inner products are linear in the first argument and conjugate-linear in the
/// second throughout: inner(x, y) = y^H x.
inline Complex inner(const Vector& x, const Vector& y) { return y.dot(x); }

}  // namespace dsl

#endif
