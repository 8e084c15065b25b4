#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krein/pair.hpp"

namespace krein {

/// Sizes of the four coordinate blocks. The first and third block always
/// have equal size (m2 = m): they carry the mutually paired neutral
/// subspaces.
struct BlockDims {
  std::size_t m = 0;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t m3 = 0;

  std::size_t total() const { return m + m1 + m2 + m3; }
  friend bool operator==(const BlockDims&, const BlockDims&) = default;
};

std::string to_string(const BlockDims& dims);

/// 4x4 block view of an n x n matrix partitioned by BlockDims.
class Blocks {
 public:
  Blocks(const Matrix& m, const BlockDims& dims);

  /// Block (i, j), 1-based like the display layout.
  Matrix operator()(std::size_t i, std::size_t j) const;

 private:
  const Matrix* m_;
  std::size_t offset_[5];
};

/// One structural identity, either confirmed or refuted with a witness (a
/// nonzero discrepancy matrix).
struct Check {
  std::string name;
  bool pass = false;
  std::optional<Matrix> witness;
};

class VerificationReport {
 public:
  void add(std::string name, bool pass, std::optional<Matrix> witness = std::nullopt);
  void add_residual(std::string name, const Matrix& residual);

  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(std::string_view name) const;
  std::vector<std::string> failed_names() const;

 private:
  std::vector<Check> checks_;
};

/// The full structure decomposition of an expansive pair: the basis S, the
/// block sizes, and the transformed matrices S^{-1}AS, S*HS, S*DS from which
/// every named block is cut.
class Decomposition {
 public:
  Decomposition(Matrix s, BlockDims dims, Matrix transformed_a, Matrix transformed_h,
                Matrix transformed_d);

  const Matrix& s() const { return s_; }
  const BlockDims& dims() const { return dims_; }
  const Matrix& transformed_a() const { return ta_; }
  const Matrix& transformed_h() const { return th_; }
  const Matrix& transformed_d() const { return td_; }

  Matrix a_block(std::size_t i, std::size_t j) const { return Blocks(ta_, dims_)(i, j); }
  Matrix a11() const { return a_block(1, 1); }
  Matrix a12() const { return a_block(1, 2); }
  Matrix a13() const { return a_block(1, 3); }
  Matrix a14() const { return a_block(1, 4); }
  Matrix a22() const { return a_block(2, 2); }
  Matrix a23() const { return a_block(2, 3); }
  Matrix a33() const { return a_block(3, 3); }
  Matrix a43() const { return a_block(4, 3); }
  Matrix a44() const { return a_block(4, 4); }
  Matrix h22() const { return Blocks(th_, dims_)(2, 2); }
  Matrix h44() const { return Blocks(th_, dims_)(4, 4); }
  Matrix d11() const { return Blocks(td_, dims_)(3, 3); }
  Matrix d12() const { return Blocks(td_, dims_)(3, 4); }
  Matrix d22() const { return Blocks(td_, dims_)(4, 4); }

 private:
  Matrix s_;
  BlockDims dims_;
  Matrix ta_;
  Matrix th_;
  Matrix td_;
};

/// The isotropic part M = N `intersect` (HN)^perp of N; H-neutral by
/// construction.
Subspace neutral_core(const Subspace& n, const Matrix& h);

/// A skew-linked partner for the neutral subspace M: returns Y (n x dim M)
/// with P*HY = I, Y*HY = 0 and Q*HY = 0, where P and Q are the canonical
/// bases of M and M1. Preconditions (all checked): M is H-neutral, M1 is
/// H-nondegenerate, and M is H-orthogonal to M1.
///
/// Construction: W = ker(Q*H); solve (P*H W) Z = I with free variables
/// zeroed and put Y0 = W Z; then neutralize with the half-Gram correction
/// Y = Y0 - (1/2) P (Y0* H Y0).
Matrix skew_link(const Subspace& m, const Subspace& m1, const Matrix& h);

struct DecomposeOptions {
  /// When set, the complement of M in N is drawn under a seeded random
  /// ordering of N's basis instead of the deterministic greedy order.
  std::optional<std::uint64_t> complement_seed;
};

/// Error raised when the defect has negative directions; carries the defect
/// inertia for diagnostics.
class NotExpansiveError : public Error {
 public:
  explicit NotExpansiveError(const Inertia& defect_inertia)
      : Error(ErrorCode::not_expansive,
              "pair is not expansive: defect inertia (pos, neg, zero) = " +
                  krein::to_string(defect_inertia)),
        defect_inertia_(defect_inertia) {}

  const Inertia& defect_inertia() const { return defect_inertia_; }

 private:
  Inertia defect_inertia_;
};

/// Runs the full pipeline on an expansive pair: N (unobservable subspace of
/// the defect), M = N `intersect` (HN)^perp, a complement M1, the skew-linked
/// partner M2, and M3 as the H-orthogonal companion of the sum. Every
/// structural identity is re-verified before returning; a failure raises
/// ErrorCode::theorem_violation rather than returning a bad value.
Decomposition decompose(const HPair& p, const DecomposeOptions& options = {});

/// Independent re-derivation: transforms (A, H, D) by the given S and checks
/// every structural identity by name. Throws ErrorCode::invalid_transform if
/// S is singular, and ErrorCode::dimension_mismatch unless dims sum to n
/// with m2 = m.
VerificationReport verify(const HPair& p, const Matrix& s, const BlockDims& dims);

struct UnitaryCompression {
  Matrix a22;
  Matrix h22;
  /// True when the compression block is A-invariant (A12 = 0), i.e. the
  /// compression is a unitary part.
  bool is_unitary_part = false;
};

UnitaryCompression unitary_compression(const Decomposition& d);

}  // namespace krein
