#pragma once

#include <cstdint>
#include <vector>

#include "qmsg/core.hpp"

namespace qmsg {

// Row-major dense complex matrix. Plain storage; the numerical work lives in
// qmsg::kernels (OpenMP) and qmsg::reference (serial twin).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, complexd{0.0, 0.0}) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  complexd& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const complexd& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<complexd>& data() { return data_; }
  const std::vector<complexd>& data() const { return data_; }

  complexd trace() const;
  double hermiticity_defect() const;  // max entry of |A - A^dagger|
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complexd> data_;
};

}  // namespace qmsg
