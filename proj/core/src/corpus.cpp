#include "krein/corpus.hpp"

namespace krein {

namespace {

Matrix basis_e(std::size_t n, std::initializer_list<std::size_t> indices) {
  Matrix m(n, indices.size());
  std::size_t col = 0;
  for (std::size_t idx : indices) m(idx, col++) = Gaussian(1);
  return m;
}

ExampleRecord make_example_1() {
  const Matrix a = jordan_block(5, Gaussian(1));
  const Matrix h = Matrix::from_rows({{0, 0, 0, 0, 1},
                                      {0, 0, 0, -1, -1},
                                      {0, 0, 1, 2, 2},
                                      {0, -1, 2, 4, 6},
                                      {1, -1, 2, 6, 2}});
  Matrix d(5, 5);
  d.set_block(3, 3, Matrix::from_rows({{5, 8}, {8, 16}}));
  ExampleRecord rec{1, "example-1", HPair(a, h)};
  rec.expected_defect = d;
  rec.expected_n = Subspace::span(basis_e(5, {0, 1, 2}));
  rec.expected_m = Subspace::span(basis_e(5, {0, 1}));
  rec.expected_dims = {2, 1, 2, 0};
  rec.expected_a22 = Matrix::from_rows({{1}});
  rec.expected_h22 = Matrix::from_rows({{1}});
  rec.expected_expansive = true;
  rec.expected_unitary = false;
  rec.expected_unitary_part = false;
  rec.recorded_s = Matrix::from_rows({{1, 0, 0, 3, 0},
                                      {0, 1, 0, -2, 0},
                                      {0, 0, 1, 0, 2},
                                      {0, 0, 0, -1, -1},
                                      {0, 0, 0, 1, 0}});
  rec.recorded_transformed_a = Matrix::from_rows({{1, 1, 0, -2, 0},
                                                  {0, 1, 1, 0, 2},
                                                  {0, 0, 1, 1, -1},
                                                  {0, 0, 0, 1, 0},
                                                  {0, 0, 0, -1, 1}});
  rec.recorded_transformed_h = Matrix::from_rows({{0, 0, 0, 1, 0},
                                                  {0, 0, 0, 0, 1},
                                                  {0, 0, 1, 0, 0},
                                                  {1, 0, 0, 0, -4},
                                                  {0, 1, 0, -4, 0}});
  // The recorded third basis group pairs correctly against M but is not
  // H-neutral (its Gram is [[0,-4],[-4,0]]), so the strict pattern checks
  // reject this transform.
  rec.recorded_s_strict = false;
  return rec;
}

ExampleRecord make_example_2() {
  const Matrix a = jordan_block(5, Gaussian(1));
  const Matrix h = Matrix::from_rows({{"0", "0", "0", "0", "1"},
                                      {"0", "0", "0", "-1", "3/2"},
                                      {"0", "0", "1", "-1/2", "1/2"},
                                      {"0", "-1", "-1/2", "0", "1"},
                                      {"1", "3/2", "1/2", "1", "0"}});
  Matrix d(5, 5);
  d(4, 4) = Gaussian(2);
  ExampleRecord rec{2, "example-2", HPair(a, h)};
  rec.expected_defect = d;
  rec.expected_n = Subspace::span(basis_e(5, {0, 1, 2, 3}));
  rec.expected_m = Subspace::span(basis_e(5, {0}));
  rec.expected_dims = {1, 3, 1, 0};
  rec.expected_a22 = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  rec.expected_h22 =
      Matrix::from_rows({{"0", "0", "-1"}, {"0", "1", "-1/2"}, {"-1", "-1/2", "0"}});
  rec.expected_expansive = true;
  rec.expected_unitary = false;
  rec.expected_unitary_part = false;
  rec.expected_skew_link =
      Matrix::from_rows({{"-47/32"}, {"7/8"}, {"1/4"}, {"3/2"}, {"1"}});
  rec.recorded_s = Matrix::from_rows({{"1", "0", "0", "0", "-47/32"},
                                      {"0", "1", "0", "0", "7/8"},
                                      {"0", "0", "1", "0", "1/4"},
                                      {"0", "0", "0", "1", "3/2"},
                                      {"0", "0", "0", "0", "1"}});
  rec.recorded_transformed_a = Matrix::from_rows({{"1", "1", "0", "0", "7/8"},
                                                  {"0", "1", "1", "0", "1/4"},
                                                  {"0", "0", "1", "1", "3/2"},
                                                  {"0", "0", "0", "1", "1"},
                                                  {"0", "0", "0", "0", "1"}});
  rec.recorded_transformed_h = Matrix::from_rows({{"0", "0", "0", "0", "1"},
                                                  {"0", "0", "0", "-1", "0"},
                                                  {"0", "0", "1", "-1/2", "0"},
                                                  {"0", "-1", "-1/2", "0", "0"},
                                                  {"1", "0", "0", "0", "0"}});
  rec.recorded_s_strict = true;
  return rec;
}

ExampleRecord make_example_3() {
  const Matrix a = jordan_block(5, Gaussian(1));
  const Matrix h = Matrix::from_rows({{"0", "0", "0", "0", "1"},
                                      {"0", "0", "0", "-1", "3/2"},
                                      {"0", "0", "1", "-1/2", "1/2"},
                                      {"0", "-1", "-1/2", "0", "0"},
                                      {"1", "3/2", "1/2", "0", "0"}});
  ExampleRecord rec{3, "example-3", HPair(a, h)};
  rec.expected_defect = Matrix::zero(5, 5);
  rec.expected_n = Subspace::full(5);
  rec.expected_m = Subspace::zero(5);
  rec.expected_dims = {0, 5, 0, 0};
  rec.expected_a22 = a;
  rec.expected_h22 = h;
  rec.expected_expansive = true;
  rec.expected_unitary = true;
  rec.expected_unitary_part = true;
  rec.recorded_s = Matrix::identity(5);
  rec.recorded_s_strict = true;
  return rec;
}

ExampleRecord make_example_4() {
  const Matrix j2 = jordan_block(2, Gaussian(1));
  const Matrix a = direct_sum(direct_sum(j2, j2), j2);
  const Matrix h44 = Matrix::from_rows(
      {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  const Matrix h = direct_sum(h44, Matrix::from_rows({{0, 1}, {1, 0}}));
  Matrix d(6, 6);
  d(5, 5) = Gaussian(2);
  ExampleRecord rec{4, "example-4", HPair(a, h)};
  rec.expected_defect = d;
  rec.expected_n = Subspace::span(basis_e(6, {0, 1, 2, 3, 4}));
  rec.expected_m = Subspace::span(basis_e(6, {4}));
  rec.expected_dims = {1, 4, 1, 0};
  rec.expected_a22 = direct_sum(j2, j2);
  rec.expected_h22 = h44;
  rec.expected_expansive = true;
  rec.expected_unitary = false;
  rec.expected_unitary_part = true;
  // Basis named by the record: e5, then e1..e4, then e6.
  rec.recorded_s = Matrix::from_rows({{0, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 0},
                                      {1, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 1}});
  rec.recorded_s_strict = true;
  return rec;
}

ExampleRecord make_example_5() {
  const Matrix a = jordan_block(4, Gaussian(1));
  const Matrix h = Matrix::from_rows(
      {{0, 0, 0, -1}, {0, 0, 1, -1}, {0, 1, 0, 0}, {-1, -1, 0, 0}});
  Matrix d(4, 4);
  d(2, 2) = Gaussian(2);
  ExampleRecord rec{5, "example-5", HPair(a, h)};
  rec.expected_defect = d;
  rec.expected_n = Subspace::span(basis_e(4, {0, 1}));
  rec.expected_m = rec.expected_n;
  rec.expected_dims = {2, 0, 2, 0};
  rec.expected_a22 = Matrix(0, 0);
  rec.expected_h22 = Matrix(0, 0);
  rec.expected_expansive = true;
  rec.expected_unitary = false;
  rec.expected_unitary_part = true;  // vacuously: the compression is empty
  return rec;
}

}  // namespace

const std::vector<ExampleRecord>& bundled_examples() {
  static const std::vector<ExampleRecord> corpus = [] {
    std::vector<ExampleRecord> v;
    v.push_back(make_example_1());
    v.push_back(make_example_2());
    v.push_back(make_example_3());
    v.push_back(make_example_4());
    v.push_back(make_example_5());
    return v;
  }();
  return corpus;
}

const ExampleRecord& bundled_example(int id) {
  for (const auto& rec : bundled_examples()) {
    if (rec.id == id) return rec;
  }
  throw Error(ErrorCode::parse_error, "no bundled example with id " + std::to_string(id));
}

}  // namespace krein
