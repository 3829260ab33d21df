#include "qmsg/operators.hpp"

#include <cmath>

#include "qmsg/kernels.hpp"

namespace qmsg {

namespace {

double real_within_tol(complexd value, const char* what) {
  if (std::abs(value.imag()) > tol::imag)
    throw validation_error(std::string(what) + " has a non-negligible imaginary part");
  return value.real();
}

}  // namespace

Observable Observable::diagonal(SpaceShape shape, DiagonalFn value) {
  if (!value) throw validation_error("diagonal observable needs a value function");
  return Observable(std::move(shape), std::move(value), std::nullopt);
}

Observable Observable::dense(SpaceShape shape, DenseMatrix matrix) {
  if (shape.dimension() > dense_cap)
    throw cap_error("space dimension exceeds the dense cap");
  if (matrix.rows() != shape.dimension() || matrix.cols() != shape.dimension())
    throw validation_error("observable matrix does not match the space shape");
  if (matrix.hermiticity_defect() > tol::herm)
    throw validation_error("observable matrix is not Hermitian");
  return Observable(std::move(shape), nullptr, std::move(matrix));
}

Observable Observable::dense_from_input(SpaceShape shape, DenseMatrix matrix) {
  if (shape.dimension() > dense_cap)
    throw cap_error("space dimension exceeds the dense cap");
  if (matrix.rows() != shape.dimension() || matrix.cols() != shape.dimension())
    throw validation_error("observable matrix does not match the space shape");
  if (matrix.hermiticity_defect() > tol::herm_input)
    throw validation_error("observable matrix is too far from Hermitian");
  DenseMatrix sym(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      sym(i, j) = 0.5 * (matrix(i, j) + std::conj(matrix(j, i)));
  return Observable(std::move(shape), nullptr, std::move(sym));
}

double Observable::diagonal_value(const BasisString& s) const {
  if (!diag_) throw validation_error("observable is not diagonal");
  return diag_(s);
}

const DenseMatrix& Observable::matrix() const {
  if (!matrix_) throw validation_error("observable has no dense matrix");
  return *matrix_;
}

Observable length_operator(const SpaceShape& shape) {
  return Observable::diagonal(
      shape, [](const BasisString& s) { return static_cast<double>(s.length()); });
}

LengthProjector::LengthProjector(SpaceShape shape, std::size_t sector)
    : shape_(std::move(shape)), sector_(sector) {
  if (sector_ > shape_.max_length())
    throw validation_error("projector sector exceeds the maximum length");
}

ManyLetterState LengthProjector::apply(const ManyLetterState& phi) const {
  if (!(phi.shape() == shape_))
    throw validation_error("state does not match the projector shape");
  const std::uint64_t lo = shape_.sector_offset(sector_);
  const std::uint64_t hi = lo + shape_.sector_dim(sector_);
  ManyLetterState::AmplitudeMap kept;
  for (const auto& [idx, amp] : phi.amplitudes())
    if (idx >= lo && idx < hi) kept[idx] = amp;
  return ManyLetterState::unnormalized(shape_, std::move(kept));
}

DenseMatrix LengthProjector::apply(const DenseMatrix& m) const {
  if (m.rows() != shape_.dimension() || m.cols() != shape_.dimension())
    throw validation_error("matrix does not match the projector shape");
  const std::uint64_t lo = shape_.sector_offset(sector_);
  const std::uint64_t hi = lo + shape_.sector_dim(sector_);
  DenseMatrix out(m.rows(), m.cols());
  for (std::uint64_t i = lo; i < hi; ++i)
    for (std::uint64_t j = lo; j < hi; ++j) out(i, j) = m(i, j);
  return out;
}

double LengthProjector::weight(const ManyLetterState& phi) const {
  if (!(phi.shape() == shape_))
    throw validation_error("state does not match the projector shape");
  const std::uint64_t lo = shape_.sector_offset(sector_);
  const std::uint64_t hi = lo + shape_.sector_dim(sector_);
  double w = 0.0;
  for (const auto& [idx, amp] : phi.amplitudes())
    if (idx >= lo && idx < hi) w += std::norm(amp);
  return w;
}

double expectation(const Observable& a, const ManyLetterState& phi) {
  if (!(a.shape() == phi.shape()))
    throw validation_error("observable and state shapes differ");
  if (!phi.is_normalized())
    throw validation_error("expectation needs a normalized state");
  if (a.is_diagonal()) {
    double s = 0.0;
    for (const auto& [idx, amp] : phi.amplitudes())
      s += std::norm(amp) * a.diagonal_value(phi.shape().string_at(idx));
    return s;
  }
  const DenseMatrix& m = a.matrix();
  complexd s{0.0, 0.0};
  for (const auto& [ri, ra] : phi.amplitudes())
    for (const auto& [ci, ca] : phi.amplitudes())
      s += std::conj(ra) * m(ri, ci) * ca;
  return real_within_tol(s, "expectation value");
}

double ensemble_average(const Observable& a, const MessageMatrix& sigma) {
  if (!(a.shape() == sigma.shape()))
    throw validation_error("observable and matrix shapes differ");
  if (a.is_diagonal()) {
    complexd s{0.0, 0.0};
    for (std::uint64_t i = 0; i < sigma.dimension(); ++i)
      s += sigma.matrix()(i, i) * a.diagonal_value(sigma.shape().string_at(i));
    return real_within_tol(s, "ensemble average");
  }
  return real_within_tol(kernels::trace_product(sigma.matrix(), a.matrix()),
                         "ensemble average");
}

double expected_length(const ManyLetterState& phi) {
  return expectation(length_operator(phi.shape()), phi);
}

double expected_length(const MessageMatrix& sigma) {
  return ensemble_average(length_operator(sigma.shape()), sigma);
}

namespace {

// [diag(f), M] entrywise: (f_i - f_j) M_ij.
double diag_commutator_norm(const Observable& diag, const DenseMatrix& m) {
  const SpaceShape& shape = diag.shape();
  std::vector<double> value(shape.dimension());
  for (std::uint64_t i = 0; i < shape.dimension(); ++i)
    value[i] = diag.diagonal_value(shape.string_at(i));
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      worst = std::max(worst, std::abs((value[i] - value[j]) * m(i, j)));
  return worst;
}

}  // namespace

double commutator_norm(const Observable& a, const Observable& b) {
  if (!(a.shape() == b.shape()))
    throw validation_error("commutator needs matching shapes");
  if (a.is_diagonal() && b.is_diagonal()) return 0.0;
  if (a.is_diagonal()) return diag_commutator_norm(a, b.matrix());
  if (b.is_diagonal()) return diag_commutator_norm(b, a.matrix());
  const DenseMatrix ab = kernels::matmul(a.matrix(), b.matrix());
  const DenseMatrix ba = kernels::matmul(b.matrix(), a.matrix());
  return kernels::max_abs_diff(ab, ba);
}

double commutator_norm(const Observable& a, const MessageMatrix& b) {
  if (!(a.shape() == b.shape()))
    throw validation_error("commutator needs matching shapes");
  if (a.is_diagonal()) return diag_commutator_norm(a, b.matrix());
  const DenseMatrix ab = kernels::matmul(a.matrix(), b.matrix());
  const DenseMatrix ba = kernels::matmul(b.matrix(), a.matrix());
  return kernels::max_abs_diff(ab, ba);
}

}  // namespace qmsg
