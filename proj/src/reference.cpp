#include <cmath>

#include "qmsg/kernels.hpp"

// Serial twins of the qmsg::kernels entry points. Plain loops, no pragmas;
// tests pin the parallel kernels against these and the benchmark times both.

namespace qmsg::reference {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw validation_error("matmul dimension mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complexd aik = a(i, k);
      if (aik == complexd{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

void accumulate_outer(DenseMatrix& acc, double weight, const SparseVector& v) {
  for (const auto& [ri, ra] : v) {
    const complexd wa = weight * ra;
    for (const auto& [ci, ca] : v) acc(ri, ci) += wa * std::conj(ca);
  }
}

double frobenius_norm(const DenseMatrix& m) {
  double total = 0.0;
  for (const complexd& v : m.data()) total += std::norm(v);
  return std::sqrt(total);
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("matrix dimensions do not match");
  double total = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    total += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(total);
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("matrix dimensions do not match");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

complexd trace_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw validation_error("trace_product dimension mismatch");
  complexd total{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) total += a(i, k) * b(k, i);
  return total;
}

DenseMatrix dephase(const DenseMatrix& m, const SpaceShape& shape) {
  if (m.rows() != shape.dimension() || m.cols() != shape.dimension())
    throw validation_error("matrix does not match the space shape");
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (shape.length_at(i) == shape.length_at(j)) out(i, j) = m(i, j);
  return out;
}

double off_block_norm(const DenseMatrix& m, const SpaceShape& shape) {
  if (m.rows() != shape.dimension() || m.cols() != shape.dimension())
    throw validation_error("matrix does not match the space shape");
  double total = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (shape.length_at(i) != shape.length_at(j)) total += std::norm(m(i, j));
  return std::sqrt(total);
}

}  // namespace qmsg::reference
