#include "krein/io.hpp"

#include <nlohmann/json.hpp>

namespace krein {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ErrorCode code, const std::string& location, const std::string& what) {
  throw Error(code, location + ": " + what);
}

Rational entry_rational(const json& j, const std::string& location) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorCode::invalid_scalar, location, e.what());
    }
  }
  if (j.is_number_float()) {
    fail(ErrorCode::invalid_scalar, location,
         "floating point entries are not exact; write \"p/q\" instead");
  }
  fail(ErrorCode::invalid_scalar, location, "expected a rational entry");
}

Gaussian parse_entry(const json& j, const std::string& location) {
  if (j.is_object()) {
    Gaussian value;
    if (j.contains("re")) value.re = entry_rational(j.at("re"), location + ".re");
    if (j.contains("im")) value.im = entry_rational(j.at("im"), location + ".im");
    for (const auto& [key, _] : j.items()) {
      if (key != "re" && key != "im") {
        fail(ErrorCode::invalid_scalar, location, "unexpected key \"" + key + "\"");
      }
    }
    return value;
  }
  return Gaussian(entry_rational(j, location));
}

json emit_entry(const Gaussian& value) {
  if (value.is_real()) return json(to_string(value.re));
  json j;
  j["re"] = to_string(value.re);
  j["im"] = to_string(value.im);
  return j;
}

Matrix matrix_from_json(const json& j, const std::string& location) {
  if (!j.is_object()) fail(ErrorCode::parse_error, location, "expected a matrix object");
  for (const char* key : {"rows", "cols", "entries"}) {
    if (!j.contains(key)) {
      fail(ErrorCode::parse_error, location, std::string("missing \"") + key + "\"");
    }
  }
  if (!j.at("rows").is_number_unsigned() || !j.at("cols").is_number_unsigned()) {
    fail(ErrorCode::parse_error, location, "\"rows\" and \"cols\" must be nonnegative integers");
  }
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) {
    fail(ErrorCode::dimension_mismatch, location + ".entries",
         "expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries.at(i);
    const std::string row_loc = location + ".entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols) {
      fail(ErrorCode::dimension_mismatch, row_loc,
           "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = parse_entry(row.at(k), row_loc + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(emit_entry(m(i, k)));
    entries.push_back(std::move(row));
  }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::parse_error, "$: malformed JSON");
  }
  return j;
}

json inertia_to_json(const Inertia& inertia) {
  json j;
  j["pos"] = inertia.pos;
  j["neg"] = inertia.neg;
  j["zero"] = inertia.zero;
  return j;
}

json dims_to_json(const BlockDims& dims) {
  json j;
  j["m"] = dims.m;
  j["m1"] = dims.m1;
  j["m2"] = dims.m2;
  j["m3"] = dims.m3;
  return j;
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks()) {
    json entry;
    entry["name"] = check.name;
    entry["pass"] = check.pass;
    if (check.witness) entry["witness"] = matrix_to_json(*check.witness);
    checks.push_back(std::move(entry));
  }
  json j;
  j["all_pass"] = report.all_pass();
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

PairDocument parse_pair(const std::string& text) {
  const json j = parse_document(text);
  if (!j.is_object()) fail(ErrorCode::parse_error, "$", "expected an object");
  for (const char* key : {"A", "H"}) {
    if (!j.contains(key)) fail(ErrorCode::parse_error, "$", std::string("missing \"") + key + "\"");
  }
  PairDocument doc;
  doc.a = matrix_from_json(j.at("A"), "$.A");
  doc.h = matrix_from_json(j.at("H"), "$.H");
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  if (j.contains("source")) doc.source = j.at("source").get<std::string>();
  if (!doc.a.is_square() || !doc.h.is_square() || doc.a.rows() != doc.h.rows()) {
    fail(ErrorCode::dimension_mismatch, "$",
         "A and H must be square matrices of equal size, got " + std::to_string(doc.a.rows()) +
             "x" + std::to_string(doc.a.cols()) + " and " + std::to_string(doc.h.rows()) + "x" +
             std::to_string(doc.h.cols()));
  }
  if (!doc.h.is_hermitian()) {
    fail(ErrorCode::not_hermitian, "$.H", "inner product matrix must equal its adjoint");
  }
  if (!is_invertible(doc.h)) {
    fail(ErrorCode::singular_inner_product, "$.H", "inner product matrix is singular");
  }
  return doc;
}

std::string emit_pair(const PairDocument& doc, int indent) {
  json j;
  j["A"] = matrix_to_json(doc.a);
  j["H"] = matrix_to_json(doc.h);
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.source.empty()) j["source"] = doc.source;
  return j.dump(indent);
}

Matrix parse_matrix(const std::string& text) {
  return matrix_from_json(parse_document(text), "$");
}

std::string emit_matrix(const Matrix& m, int indent) { return matrix_to_json(m).dump(indent); }

std::string emit_classification(const Classification& c, int indent) {
  json j;
  j["expansive"] = c.expansive;
  j["unitary"] = c.unitary;
  j["selfadjoint"] = c.selfadjoint;
  j["defect_inertia"] = inertia_to_json(c.defect_inertia);
  return j.dump(indent);
}

std::string emit_report(const VerificationReport& report, int indent) {
  return report_to_json(report).dump(indent);
}

std::string emit_decomposition(const Decomposition& d, const VerificationReport& report,
                               int indent) {
  json j;
  j["dims"] = dims_to_json(d.dims());
  j["S"] = matrix_to_json(d.s());
  json transformed;
  transformed["A"] = matrix_to_json(d.transformed_a());
  transformed["H"] = matrix_to_json(d.transformed_h());
  transformed["D"] = matrix_to_json(d.transformed_d());
  j["transformed"] = std::move(transformed);
  json blocks;
  blocks["A11"] = matrix_to_json(d.a11());
  blocks["A12"] = matrix_to_json(d.a12());
  blocks["A13"] = matrix_to_json(d.a13());
  blocks["A14"] = matrix_to_json(d.a14());
  blocks["A22"] = matrix_to_json(d.a22());
  blocks["A23"] = matrix_to_json(d.a23());
  blocks["A33"] = matrix_to_json(d.a33());
  blocks["A43"] = matrix_to_json(d.a43());
  blocks["A44"] = matrix_to_json(d.a44());
  blocks["H22"] = matrix_to_json(d.h22());
  blocks["H44"] = matrix_to_json(d.h44());
  blocks["D11"] = matrix_to_json(d.d11());
  blocks["D12"] = matrix_to_json(d.d12());
  blocks["D22"] = matrix_to_json(d.d22());
  j["blocks"] = std::move(blocks);
  json compression;
  compression["A22"] = matrix_to_json(d.a22());
  compression["H22"] = matrix_to_json(d.h22());
  compression["is_unitary_part"] = d.a12().is_zero();
  j["compression"] = std::move(compression);
  j["verification"] = report_to_json(report);
  return j.dump(indent);
}

std::string emit_selfadjoint(const SelfadjointDecomposition& d,
                             const VerificationReport& report, int indent) {
  json j;
  j["dims"] = dims_to_json(d.dims());
  j["S"] = matrix_to_json(d.s());
  json transformed;
  transformed["A"] = matrix_to_json(d.transformed_a());
  transformed["H"] = matrix_to_json(d.transformed_h());
  j["transformed"] = std::move(transformed);
  j["verification"] = report_to_json(report);
  return j.dump(indent);
}

std::string emit_planted(const PlantedPair& planted, const PlantSpec& spec, int indent) {
  json j;
  j["name"] = "planted-" + std::to_string(spec.m) + "-" + std::to_string(spec.m1) + "-" +
              std::to_string(spec.m3) + "-seed" + std::to_string(spec.seed);
  j["A"] = matrix_to_json(planted.pair.a());
  j["H"] = matrix_to_json(planted.pair.h());
  json truth;
  truth["dims"] = dims_to_json(planted.dims);
  truth["S"] = matrix_to_json(planted.s_true);
  j["truth"] = std::move(truth);
  return j.dump(indent);
}

}  // namespace krein
