#include "qmsg/kernels.hpp"

#include <cmath>

namespace qmsg::kernels {

namespace {

void check_square_same(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("matrix dimensions do not match");
}

// Lengths of all global indices, materialized once per kernel call.
std::vector<std::uint32_t> index_lengths(const SpaceShape& shape) {
  std::vector<std::uint32_t> len(shape.dimension());
  for (std::size_t n = 0; n <= shape.max_length(); ++n) {
    const std::uint64_t lo = shape.sector_offset(n);
    const std::uint64_t hi = lo + shape.sector_dim(n);
    for (std::uint64_t i = lo; i < hi; ++i) len[i] = static_cast<std::uint32_t>(n);
  }
  return len;
}

}  // namespace

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw validation_error("matmul dimension mismatch");
  DenseMatrix out(a.rows(), b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const complexd aik = a(static_cast<std::size_t>(i), k);
      if (aik == complexd{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out(static_cast<std::size_t>(i), j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(out.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::size_t i1 = static_cast<std::size_t>(r) / b.rows();
    const std::size_t i2 = static_cast<std::size_t>(r) % b.rows();
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const complexd av = a(i1, j1);
      for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
        out(static_cast<std::size_t>(r), j1 * b.cols() + j2) = av * b(i2, j2);
    }
  }
  return out;
}

void accumulate_outer(DenseMatrix& acc, double weight, const SparseVector& v) {
  const std::int64_t nnz = static_cast<std::int64_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < nnz; ++r) {
    const auto& [ri, ra] = v[static_cast<std::size_t>(r)];
    const complexd wa = weight * ra;
    for (const auto& [ci, ca] : v) acc(ri, ci) += wa * std::conj(ca);
  }
}

double frobenius_norm(const DenseMatrix& m) {
  const std::int64_t rows = static_cast<std::int64_t>(m.rows());
  std::vector<double> partial(m.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(static_cast<std::size_t>(i), j));
    partial[static_cast<std::size_t>(i)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  check_square_same(a, b);
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
  std::vector<double> partial(a.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      s += std::norm(a(static_cast<std::size_t>(i), j) - b(static_cast<std::size_t>(i), j));
    partial[static_cast<std::size_t>(i)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  check_square_same(a, b);
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double d = std::abs(a(static_cast<std::size_t>(i), j) - b(static_cast<std::size_t>(i), j));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

complexd trace_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw validation_error("trace_product dimension mismatch");
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
  std::vector<complexd> partial(a.rows(), complexd{0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    complexd s{0.0, 0.0};
    for (std::size_t k = 0; k < a.cols(); ++k)
      s += a(static_cast<std::size_t>(i), k) * b(k, static_cast<std::size_t>(i));
    partial[static_cast<std::size_t>(i)] = s;
  }
  complexd total{0.0, 0.0};
  for (const complexd& p : partial) total += p;
  return total;
}

DenseMatrix dephase(const DenseMatrix& m, const SpaceShape& shape) {
  if (m.rows() != shape.dimension() || m.cols() != shape.dimension())
    throw validation_error("matrix does not match the space shape");
  const auto len = index_lengths(shape);
  DenseMatrix out(m.rows(), m.cols());
  const std::int64_t rows = static_cast<std::int64_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (len[si] == len[j]) out(si, j) = m(si, j);
  }
  return out;
}

double off_block_norm(const DenseMatrix& m, const SpaceShape& shape) {
  if (m.rows() != shape.dimension() || m.cols() != shape.dimension())
    throw validation_error("matrix does not match the space shape");
  const auto len = index_lengths(shape);
  const std::int64_t rows = static_cast<std::int64_t>(m.rows());
  std::vector<double> partial(m.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (len[si] != len[j]) s += std::norm(m(si, j));
    partial[si] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return std::sqrt(total);
}

}  // namespace qmsg::kernels
