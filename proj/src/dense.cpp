#include "qmsg/dense.hpp"

#include <algorithm>
#include <cmath>

namespace qmsg {

complexd DenseMatrix::trace() const {
  complexd t{0.0, 0.0};
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double DenseMatrix::max_abs() const {
  double worst = 0.0;
  for (const complexd& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace qmsg
