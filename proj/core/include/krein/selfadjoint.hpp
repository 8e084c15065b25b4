#pragma once

#include "krein/decomposition.hpp"

namespace krein {

/// The block form of an H-selfadjoint matrix relative to an A-invariant
/// subspace N: same four-space split as Decomposition, but the center and
/// tail blocks are selfadjoint rather than unitary/expansive, and the third
/// block column is determined by adjoints (A33 = A11*, A23 = H22^{-1} A12*,
/// A43 = H44^{-1} A14*).
class SelfadjointDecomposition {
 public:
  SelfadjointDecomposition(Matrix s, BlockDims dims, Matrix transformed_a,
                           Matrix transformed_h);

  const Matrix& s() const { return s_; }
  const BlockDims& dims() const { return dims_; }
  const Matrix& transformed_a() const { return ta_; }
  const Matrix& transformed_h() const { return th_; }

  Matrix a_block(std::size_t i, std::size_t j) const { return Blocks(ta_, dims_)(i, j); }
  Matrix a11() const { return a_block(1, 1); }
  Matrix a12() const { return a_block(1, 2); }
  Matrix a13() const { return a_block(1, 3); }
  Matrix a14() const { return a_block(1, 4); }
  Matrix a22() const { return a_block(2, 2); }
  Matrix a44() const { return a_block(4, 4); }
  Matrix h22() const { return Blocks(th_, dims_)(2, 2); }
  Matrix h44() const { return Blocks(th_, dims_)(4, 4); }

 private:
  Matrix s_;
  BlockDims dims_;
  Matrix ta_;
  Matrix th_;
};

/// Checks the selfadjoint block pattern for a given transform, one named
/// check per identity.
VerificationReport selfadjoint_pattern_report(const HPair& p, const Matrix& s,
                                              const BlockDims& dims);

/// Runs the four-space pipeline with a caller-supplied A-invariant N.
/// Preconditions (checked): HA = A*H and A N inside N. Every pattern
/// identity is asserted before returning.
SelfadjointDecomposition selfadjoint_decompose(const HPair& p, const Subspace& invariant);

}  // namespace krein
