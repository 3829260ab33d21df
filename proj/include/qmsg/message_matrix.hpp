#pragma once

#include "qmsg/dense.hpp"
#include "qmsg/shape.hpp"

namespace qmsg {

// Density operator on a truncated many-letter space: D x D, Hermitian,
// positive semidefinite, unit trace. Subject to the dense-dimension cap.
//
// block_diagonal() reports whether all cross-length blocks vanish within
// tol::block; it is computed once at construction.
class MessageMatrix {
 public:
  MessageMatrix(SpaceShape shape, DenseMatrix matrix);

  const SpaceShape& shape() const { return shape_; }
  const DenseMatrix& matrix() const { return matrix_; }
  std::uint64_t dimension() const { return shape_.dimension(); }
  bool block_diagonal() const { return block_diagonal_; }

 private:
  SpaceShape shape_;
  DenseMatrix matrix_;
  bool block_diagonal_ = false;
};

}  // namespace qmsg
