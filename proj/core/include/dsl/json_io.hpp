#ifndef DSL_JSON_IO_HPP
#define DSL_JSON_IO_HPP

#include "dsl/measure.hpp"
#include "dsl/operators.hpp"
#include "dsl/polynomial.hpp"
#include "dsl/recovery.hpp"
#include "dsl/spaces.hpp"

#include <optional>
#include <string>

namespace dsl {

/// All parsers are strict: unknown keys are rejected, and every complex
/// scalar travels as a [re, im] pair. Failures throw Error("ParseError", ...)
/// naming the offending key, or the owning module's validation error.

SemiSpectralMeasure parse_measure_json(const std::string& text);
std::string measure_to_json(const SemiSpectralMeasure& mu);

VectorPolynomial parse_polynomial_json(const std::string& text);
std::string polynomial_to_json(const VectorPolynomial& f);

MeasureTuple parse_tuple_json(const std::string& text);
std::string tuple_to_json(const MeasureTuple& tuple);

struct OperatorInput {
  Matrix matrix;
  std::optional<Matrix> kernel_basis;  // columns
};

OperatorInput parse_operator_json(const std::string& text);
std::string operator_to_json(const Matrix& t, const Matrix* kernel_basis = nullptr);

std::string gram_to_json(const GramModel& model);

std::string read_text_file(const std::string& path);

/// Whole-file write through a temp file and rename; no partial content is
/// ever visible at the target path.
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace dsl

#endif
