#pragma once

#include <vector>

#include "qmsg/dense.hpp"

namespace qmsg {

struct EigenSystem {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column k pairs with values[k]
};

// Eigendecomposition of a Hermitian matrix. The input is assumed Hermitian
// within tol::herm; only the lower triangle is referenced.
EigenSystem hermitian_eigensystem(const DenseMatrix& m);

// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& m);

}  // namespace qmsg
