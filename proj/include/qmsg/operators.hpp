#pragma once

#include <functional>
#include <optional>

#include "qmsg/message_matrix.hpp"
#include "qmsg/state.hpp"

namespace qmsg {

// Self-adjoint observable on a truncated many-letter space. Two storage
// forms: a dense Hermitian matrix (capped at dense_cap), or a diagonal
// fast path mapping each basis word to a real value (no cap).
class Observable {
 public:
  using DiagonalFn = std::function<double(const BasisString&)>;

  static Observable diagonal(SpaceShape shape, DiagonalFn value);
  static Observable dense(SpaceShape shape, DenseMatrix matrix);

  // For matrices from user files: symmetrize (A + A^dagger)/2 when the
  // asymmetry is within tol::herm_input, reject otherwise.
  static Observable dense_from_input(SpaceShape shape, DenseMatrix matrix);

  const SpaceShape& shape() const { return shape_; }
  bool is_diagonal() const { return static_cast<bool>(diag_); }
  double diagonal_value(const BasisString& s) const;
  const DenseMatrix& matrix() const;

 private:
  Observable(SpaceShape shape, DiagonalFn diag, std::optional<DenseMatrix> mat)
      : shape_(std::move(shape)), diag_(std::move(diag)), matrix_(std::move(mat)) {}

  SpaceShape shape_;
  DiagonalFn diag_;
  std::optional<DenseMatrix> matrix_;
};

// L = sum_n n Pi_n: diagonal, value n on every word of length n.
Observable length_operator(const SpaceShape& shape);

// Orthogonal projector onto the length-n sector.
class LengthProjector {
 public:
  LengthProjector(SpaceShape shape, std::size_t sector);

  std::size_t sector() const { return sector_; }
  const SpaceShape& shape() const { return shape_; }
  std::uint64_t trace() const { return shape_.sector_dim(sector_); }

  // Pi_n |phi>, unnormalized (flagged as an intermediate).
  ManyLetterState apply(const ManyLetterState& phi) const;
  // Pi_n m Pi_n, i.e. keeps only the (n,n) diagonal block.
  DenseMatrix apply(const DenseMatrix& m) const;
  // ||Pi_n phi||^2.
  double weight(const ManyLetterState& phi) const;

 private:
  SpaceShape shape_;
  std::size_t sector_;
};

// <phi|A|phi>; throws if the residual imaginary part exceeds tol::imag.
double expectation(const Observable& a, const ManyLetterState& phi);

// Tr{sigma A}, real within tol::imag.
double ensemble_average(const Observable& a, const MessageMatrix& sigma);

double expected_length(const ManyLetterState& phi);
double expected_length(const MessageMatrix& sigma);

// Max-entry norm of AB - BA.
double commutator_norm(const Observable& a, const Observable& b);
double commutator_norm(const Observable& a, const MessageMatrix& b);

}  // namespace qmsg
