#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krein/decomposition.hpp"

namespace krein {

/// One bundled example pair with its expected analysis results. Records that
/// carry a historical transform also record whether that transform satisfies
/// the strict block pattern (example 1's does not: its third and first basis
/// groups are paired correctly, but the recorded third group is not
/// H-neutral, so the strict pattern and the first defect block formula fail
/// on it).
struct ExampleRecord {
  ExampleRecord(int id_, std::string name_, HPair pair_)
      : id(id_), name(std::move(name_)), pair(std::move(pair_)) {}

  int id;
  std::string name;
  HPair pair;

  Matrix expected_defect;
  Subspace expected_n;
  Subspace expected_m;
  BlockDims expected_dims;
  Matrix expected_a22;
  Matrix expected_h22;
  bool expected_expansive = false;
  bool expected_unitary = false;
  bool expected_unitary_part = false;

  /// Deterministic skew-link output pinned by the record (example 2).
  std::optional<Matrix> expected_skew_link;

  /// Historical transform, where the record carries one, with its printed
  /// transformed matrices.
  std::optional<Matrix> recorded_s;
  std::optional<Matrix> recorded_transformed_a;
  std::optional<Matrix> recorded_transformed_h;
  bool recorded_s_strict = true;
};

/// The five bundled examples, in order.
const std::vector<ExampleRecord>& bundled_examples();

/// Lookup by id (1..5); throws ErrorCode::parse_error for unknown ids.
const ExampleRecord& bundled_example(int id);

}  // namespace krein
