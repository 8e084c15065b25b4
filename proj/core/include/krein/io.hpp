#pragma once

#include <optional>
#include <string>

#include "krein/corpus.hpp"
#include "krein/decomposition.hpp"
#include "krein/pair.hpp"
#include "krein/plant.hpp"
#include "krein/selfadjoint.hpp"

namespace krein {

/// A matrix pair as read from the interchange format. Validation happens on
/// load: both matrices square of equal size, H Hermitian and invertible.
struct PairDocument {
  Matrix a;
  Matrix h;
  std::string name;
  std::string source;

  HPair to_pair() const { return HPair(a, h); }
};

/// Interchange format, one JSON object per document:
///
///   matrix   {"rows": r, "cols": c, "entries": [[e, ...], ...]}
///   entry    "p/q" | "p" | integer | {"re": entry, "im": entry}
///   pair     {"A": matrix, "H": matrix, "name"?: str, "source"?: str}
///
/// Rationals are carried as strings so that no precision is lost; plain JSON
/// integers are accepted, floating point numbers are not. Emission always
/// uses canonical reduced strings.
PairDocument parse_pair(const std::string& text);
std::string emit_pair(const PairDocument& doc, int indent = 2);

/// Parses a bare matrix document (used for transform and subspace files).
Matrix parse_matrix(const std::string& text);
std::string emit_matrix(const Matrix& m, int indent = 2);

std::string emit_classification(const Classification& c, int indent = 2);
std::string emit_report(const VerificationReport& report, int indent = 2);
std::string emit_decomposition(const Decomposition& d, const VerificationReport& report,
                               int indent = 2);
std::string emit_selfadjoint(const SelfadjointDecomposition& d,
                             const VerificationReport& report, int indent = 2);

/// Planted pair with its ground truth under a "truth" key; parse_pair reads
/// the same file back (ignoring "truth").
std::string emit_planted(const PlantedPair& planted, const PlantSpec& spec, int indent = 2);

}  // namespace krein
