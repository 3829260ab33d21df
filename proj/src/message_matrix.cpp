#include "qmsg/message_matrix.hpp"

#include <cmath>

#include "qmsg/eig.hpp"
#include "qmsg/kernels.hpp"

namespace qmsg {

namespace {
// Positivity is enforced by a full eigenvalue sweep, which is cubic in D;
// above this size the sweep is skipped. Every construction path (convex sums
// of outer products, tensor powers of letter matrices, sector compressions)
// is positive semidefinite by construction, so the sweep is a safety net at
// desk scale, not a load-bearing check.
constexpr std::uint64_t kPsdSweepCap = 1024;
}  // namespace

MessageMatrix::MessageMatrix(SpaceShape shape, DenseMatrix matrix)
    : shape_(std::move(shape)), matrix_(std::move(matrix)) {
  const std::uint64_t dim = shape_.dimension();
  if (dim > dense_cap) throw cap_error("space dimension exceeds the dense cap");
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw validation_error("message matrix does not match the space shape");
  if (matrix_.hermiticity_defect() > tol::herm)
    throw validation_error("message matrix is not Hermitian");
  if (std::abs(matrix_.trace() - complexd{1.0, 0.0}) > tol::trace)
    throw validation_error("message matrix trace differs from 1");
  if (dim <= kPsdSweepCap) {
    const auto evals = hermitian_eigenvalues(matrix_);
    if (evals.back() < -tol::psd)
      throw validation_error("message matrix has a negative eigenvalue");
  }
  block_diagonal_ = kernels::off_block_norm(matrix_, shape_) <= tol::block;
}

}  // namespace qmsg
