#include <doctest.h>

#include "krein/io.hpp"

using namespace krein;

TEST_SUITE_BEGIN("io");

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_pair(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("parses a simple identity pair") {
  const std::string text = R"({
    "A": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]},
    "H": {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]},
    "name": "eye"
  })";
  const PairDocument doc = parse_pair(text);
  CHECK(doc.a == Matrix::identity(2));
  CHECK(doc.h == Matrix::identity(2));
  CHECK(doc.name == "eye");
}

TEST_CASE("parses rational and complex entries exactly") {
  const std::string text = R"({
    "A": {"rows": 1, "cols": 1, "entries": [[{"re": "1/2", "im": "-3/4"}]]},
    "H": {"rows": 1, "cols": 1, "entries": [["1"]]}
  })";
  const PairDocument doc = parse_pair(text);
  CHECK(doc.a(0, 0) == Gaussian(make_rational(1, 2), make_rational(-3, 4)));
}

TEST_CASE("distinct error codes with locations") {
  CHECK(code_of("{") == ErrorCode::parse_error);
  CHECK(code_of(R"({"A": 1, "H": 2})") == ErrorCode::parse_error);

  const std::string zero_den = R"({
    "A": {"rows": 1, "cols": 1, "entries": [["1/0"]]},
    "H": {"rows": 1, "cols": 1, "entries": [["1"]]}
  })";
  CHECK(code_of(zero_den) == ErrorCode::invalid_scalar);
  try {
    parse_pair(zero_den);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("$.A.entries[0][0]") != std::string::npos);
  }

  CHECK(code_of(R"({
    "A": {"rows": 1, "cols": 1, "entries": [[0.5]]},
    "H": {"rows": 1, "cols": 1, "entries": [["1"]]}
  })") == ErrorCode::invalid_scalar);

  CHECK(code_of(R"({
    "A": {"rows": 2, "cols": 2, "entries": [["1", "0"]]},
    "H": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
  })") == ErrorCode::dimension_mismatch);

  CHECK(code_of(R"({
    "A": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]},
    "H": {"rows": 2, "cols": 2, "entries": [["0", "1"], ["2", "0"]]}
  })") == ErrorCode::not_hermitian);

  CHECK(code_of(R"({
    "A": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]},
    "H": {"rows": 2, "cols": 2, "entries": [["1", "1"], ["1", "1"]]}
  })") == ErrorCode::singular_inner_product);
}

TEST_CASE("emission round-trips semantically") {
  const ExampleRecord& rec = bundled_example(2);
  PairDocument doc{rec.pair.a(), rec.pair.h(), rec.name, "bundled"};
  const PairDocument back = parse_pair(emit_pair(doc));
  CHECK(back.a == doc.a);
  CHECK(back.h == doc.h);
  CHECK(back.name == doc.name);
  CHECK(back.source == "bundled");

  // canonical re-emission: an unreduced entry comes back reduced
  const std::string text = R"({
    "A": {"rows": 1, "cols": 1, "entries": [["6/-4"]]},
    "H": {"rows": 1, "cols": 1, "entries": [["1"]]}
  })";
  const std::string emitted = emit_pair(parse_pair(text));
  CHECK(emitted.find("-3/2") != std::string::npos);
  CHECK(parse_pair(emitted).a(0, 0) == Gaussian(make_rational(-3, 2)));
}

TEST_CASE("matrix documents round-trip") {
  Matrix m(2, 3);
  m(0, 0) = Gaussian(make_rational(-47, 32));
  m(1, 2) = Gaussian(Rational(0), make_rational(1, 7));
  CHECK(parse_matrix(emit_matrix(m)) == m);
}

TEST_CASE("planted emission carries the truth and reads back as a pair") {
  const PlantSpec spec{1, 1, 1, 2, 9};
  const PlantedPair planted = plant(spec);
  const std::string text = emit_planted(planted, spec);
  const PairDocument doc = parse_pair(text);
  CHECK(doc.a == planted.pair.a());
  CHECK(doc.h == planted.pair.h());
  CHECK(text.find("truth") != std::string::npos);
}

TEST_SUITE_END();
