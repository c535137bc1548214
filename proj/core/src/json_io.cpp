#include "dsl/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dsl {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", "input is not valid JSON");
  return j;
}

void check_keys(const json& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* where) {
  if (!j.is_object()) fail("ParseError", std::string("expected an object for ") + where);
  for (const char* key : required)
    if (!j.contains(key))
      fail("ParseError", std::string("missing key '") + key + "' in " + where);
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : required) known = known || item.key() == key;
    for (const char* key : optional) known = known || item.key() == key;
    if (!known) fail("ParseError", std::string("unknown key '") + item.key() + "' in " + where);
  }
}

Complex parse_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail("ParseError", std::string("expected [re, im] pair in ") + where);
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Matrix parse_matrix(const json& j, const char* where) {
  if (!j.is_array() || j.empty()) fail("ParseError", std::string("expected a matrix in ") + where);
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Matrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array()) fail("ParseError", std::string("expected a matrix row in ") + where);
    if (r == 0) {
      cols = j[r].size();
      m = Matrix(rows, cols);
    }
    if (j[r].size() != cols) fail("ParseError", std::string("ragged matrix in ") + where);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c], where);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Vector parse_vector(const json& j, const char* where) {
  if (!j.is_array()) fail("ParseError", std::string("expected a vector in ") + where);
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = parse_complex(j[i], where);
  return v;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

SemiSpectralMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail("ParseError", "missing key 'kind' in measure");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "atomic") {
    check_keys(j, {"dimE", "kind", "atoms"}, {}, "atomic measure");
    const int dim_e = j["dimE"].get<int>();
    std::vector<std::pair<double, Matrix>> atoms;
    for (const json& a : j["atoms"]) {
      check_keys(a, {"angle", "weight"}, {}, "atom");
      atoms.emplace_back(a["angle"].get<double>(), parse_matrix(a["weight"], "atom weight"));
    }
    if (dim_e < 1) fail("DimensionMismatch", "dimE must be positive");
    if (atoms.empty()) return SemiSpectralMeasure::atomic(dim_e, {});
    SemiSpectralMeasure mu = make_atomic(atoms);
    if (mu.dim_e() != dim_e) fail("DimensionMismatch", "dimE disagrees with atom weights");
    return mu;
  }
  if (kind == "trig") {
    check_keys(j, {"dimE", "kind", "coeffs"}, {}, "trig measure");
    const int dim_e = j["dimE"].get<int>();
    if (!j["coeffs"].is_object()) fail("ParseError", "expected an object for key 'coeffs'");
    int max_order = 0;
    for (const auto& item : j["coeffs"].items()) {
      try {
        max_order = std::max(max_order, std::abs(std::stoi(item.key())));
      } catch (const std::exception&) {
        fail("ParseError", "coefficient key '" + item.key() + "' is not an integer");
      }
    }
    // moments mu_hat(j) = C_{-j}
    std::vector<Matrix> moments(2 * max_order + 1, Matrix::Zero(dim_e, dim_e));
    for (const auto& item : j["coeffs"].items()) {
      const int s = std::stoi(item.key());
      moments[-s + max_order] = parse_matrix(item.value(), "trig coefficient");
    }
    return make_trig_density(dim_e, max_order, moments);
  }
  fail("ParseError", "kind must be 'atomic' or 'trig'");
}

json measure_to_json_obj(const SemiSpectralMeasure& mu) {
  json j;
  j["dimE"] = mu.dim_e();
  if (mu.is_atomic()) {
    j["kind"] = "atomic";
    json atoms = json::array();
    for (const Atom& a : mu.atoms()) {
      json atom;
      atom["angle"] = a.angle;
      atom["weight"] = matrix_to_json(a.weight);
      atoms.push_back(atom);
    }
    j["atoms"] = atoms;
  } else {
    j["kind"] = "trig";
    json coeffs;
    const auto& d = mu.density();
    for (int s = -d.max_order; s <= d.max_order; ++s)
      coeffs[std::to_string(s)] = matrix_to_json(mu.moment(-s));  // C_s = mu_hat(-s)
    j["coeffs"] = coeffs;
  }
  return j;
}

}  // namespace

SemiSpectralMeasure parse_measure_json(const std::string& text) {
  return measure_from_json(parse_text(text));
}

std::string measure_to_json(const SemiSpectralMeasure& mu) {
  return measure_to_json_obj(mu).dump(2);
}

VectorPolynomial parse_polynomial_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"dimE", "coeffs"}, {}, "polynomial");
  const int dim_e = j["dimE"].get<int>();
  VectorPolynomial f(dim_e);
  if (!j["coeffs"].is_array()) fail("ParseError", "expected an array for key 'coeffs'");
  int k = 0;
  for (const json& c : j["coeffs"]) {
    const Vector v = parse_vector(c, "polynomial coefficient");
    if (v.size() != dim_e) fail("DimensionMismatch", "coefficient has wrong dimension");
    f.set_coeff(k++, v);
  }
  return f;
}

std::string polynomial_to_json(const VectorPolynomial& f) {
  json j;
  j["dimE"] = f.dim_e();
  json coeffs = json::array();
  for (int k = 0; k < f.coeff_count(); ++k) coeffs.push_back(vector_to_json(f.coeff(k)));
  j["coeffs"] = coeffs;
  return j.dump(2);
}

MeasureTuple parse_tuple_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"m", "measures"}, {}, "tuple");
  const int m = j["m"].get<int>();
  if (!j["measures"].is_array()) fail("ParseError", "expected an array for key 'measures'");
  std::vector<SemiSpectralMeasure> measures;
  for (const json& mj : j["measures"]) measures.push_back(measure_from_json(mj));
  if (static_cast<int>(measures.size()) + 1 != m)
    fail("ParseError", "key 'm' disagrees with the number of measures");
  return make_tuple(std::move(measures));
}

std::string tuple_to_json(const MeasureTuple& tuple) {
  json j;
  j["m"] = tuple.order();
  json measures = json::array();
  for (const auto& mu : tuple.measures) measures.push_back(measure_to_json_obj(mu));
  j["measures"] = measures;
  return j.dump(2);
}

OperatorInput parse_operator_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"dim", "matrix"}, {"kernel"}, "operator");
  const int dim = j["dim"].get<int>();
  OperatorInput input;
  input.matrix = parse_matrix(j["matrix"], "operator matrix");
  if (input.matrix.rows() != dim || input.matrix.cols() != dim)
    fail("DimensionMismatch", "key 'dim' disagrees with the matrix shape");
  if (j.contains("kernel")) {
    if (!j["kernel"].is_array() || j["kernel"].empty())
      fail("ParseError", "expected a nonempty array for key 'kernel'");
    const std::size_t count = j["kernel"].size();
    Matrix basis(dim, count);
    for (std::size_t i = 0; i < count; ++i) {
      const Vector v = parse_vector(j["kernel"][i], "kernel vector");
      if (v.size() != dim) fail("DimensionMismatch", "kernel vector has wrong dimension");
      basis.col(i) = v;
    }
    input.kernel_basis = basis;
  }
  return input;
}

std::string operator_to_json(const Matrix& t, const Matrix* kernel_basis) {
  json j;
  j["dim"] = static_cast<int>(t.rows());
  j["matrix"] = matrix_to_json(t);
  if (kernel_basis != nullptr) {
    json kernel = json::array();
    for (Eigen::Index c = 0; c < kernel_basis->cols(); ++c)
      kernel.push_back(vector_to_json(kernel_basis->col(c)));
    j["kernel"] = kernel;
  }
  return j.dump(2);
}

std::string gram_to_json(const GramModel& model) {
  json j;
  j["d"] = model.degree;
  j["dimE"] = model.dim_e();
  j["ordering"] = "k-major";
  j["matrix"] = matrix_to_json(model.gram);
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("IOError", "cannot open file: " + path);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail("IOError", "cannot open file for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) fail("IOError", "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail("IOError", "atomic rename failed: " + path);
}

}  // namespace dsl
