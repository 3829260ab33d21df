#include "qmsg/eig.hpp"

#include <Eigen/Dense>

namespace qmsg {

namespace {

Eigen::MatrixXcd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

EigenSystem hermitian_eigensystem(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("eigensystem needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  if (solver.info() != Eigen::Success)
    throw validation_error("Hermitian eigendecomposition failed to converge");
  const std::size_t n = m.rows();
  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors = DenseMatrix(n, n);
  // Eigen sorts ascending; flip to descending.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = n - 1 - k;
    sys.values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
    for (std::size_t i = 0; i < n; ++i)
      sys.vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                static_cast<Eigen::Index>(src));
  }
  return sys;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("eigensystem needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw validation_error("Hermitian eigendecomposition failed to converge");
  const std::size_t n = m.rows();
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k)
    values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(n - 1 - k));
  return values;
}

}  // namespace qmsg
