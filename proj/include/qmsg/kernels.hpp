#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qmsg/dense.hpp"
#include "qmsg/shape.hpp"

namespace qmsg {

// Sparse vector on the global basis-word enumeration, ordered by index.
using SparseVector = std::vector<std::pair<std::uint64_t, complexd>>;

// OpenMP-parallel dense kernels. Every output element is owned by exactly one
// thread and reductions accumulate fixed-order per-row partials, so results
// are identical for any thread count. qmsg::reference holds the serial twins.
namespace kernels {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b);

// acc += weight * v v^dagger (rank-1 update on the sparse support).
void accumulate_outer(DenseMatrix& acc, double weight, const SparseVector& v);

double frobenius_norm(const DenseMatrix& m);
double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
complexd trace_product(const DenseMatrix& a, const DenseMatrix& b);  // Tr{a b}

// Zeroes every entry coupling words of distinct length.
DenseMatrix dephase(const DenseMatrix& m, const SpaceShape& shape);
// Frobenius norm of exactly the part dephase removes.
double off_block_norm(const DenseMatrix& m, const SpaceShape& shape);

}  // namespace kernels

// Serial reference implementations, kept for tests and the benchmark.
namespace reference {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix tensor_product(const DenseMatrix& a, const DenseMatrix& b);
void accumulate_outer(DenseMatrix& acc, double weight, const SparseVector& v);
double frobenius_norm(const DenseMatrix& m);
double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
complexd trace_product(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dephase(const DenseMatrix& m, const SpaceShape& shape);
double off_block_norm(const DenseMatrix& m, const SpaceShape& shape);

}  // namespace reference

}  // namespace qmsg
