#include <doctest.h>

#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmsg/kernels.hpp"

using qmsg::DenseMatrix;
using qmsg::complexd;

namespace {

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseMatrix m(rows, cols);
  for (complexd& v : m.data()) v = complexd{dist(gen), dist(gen)};
  return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("parallel kernels match the serial reference") {
  const DenseMatrix a = random_matrix(37, 37, 1);
  const DenseMatrix b = random_matrix(37, 37, 2);

  SUBCASE("matmul is bitwise equal") {
    CHECK(qmsg::reference::max_abs_diff(qmsg::kernels::matmul(a, b),
                                        qmsg::reference::matmul(a, b)) == 0.0);
  }
  SUBCASE("tensor product is bitwise equal") {
    const DenseMatrix s = random_matrix(5, 5, 3);
    const DenseMatrix t = random_matrix(7, 7, 4);
    CHECK(qmsg::reference::max_abs_diff(qmsg::kernels::tensor_product(s, t),
                                        qmsg::reference::tensor_product(s, t)) == 0.0);
  }
  SUBCASE("outer accumulation is bitwise equal") {
    qmsg::SparseVector v;
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::uint64_t i = 0; i < 37; i += 3)
      v.emplace_back(i, complexd{dist(gen), dist(gen)});
    DenseMatrix acc_p(37, 37), acc_s(37, 37);
    qmsg::kernels::accumulate_outer(acc_p, 0.7, v);
    qmsg::reference::accumulate_outer(acc_s, 0.7, v);
    CHECK(qmsg::reference::max_abs_diff(acc_p, acc_s) == 0.0);
  }
  SUBCASE("reductions agree within rounding") {
    CHECK(qmsg::kernels::frobenius_distance(a, b) ==
          doctest::Approx(qmsg::reference::frobenius_distance(a, b)).epsilon(1e-13));
    CHECK(qmsg::kernels::frobenius_norm(a) ==
          doctest::Approx(qmsg::reference::frobenius_norm(a)).epsilon(1e-13));
    const complexd tp = qmsg::kernels::trace_product(a, b);
    const complexd ts = qmsg::reference::trace_product(a, b);
    CHECK(std::abs(tp - ts) < 1e-10);
    CHECK(qmsg::kernels::max_abs_diff(a, b) == qmsg::reference::max_abs_diff(a, b));
  }
  SUBCASE("dephase and off-block norm") {
    const qmsg::SpaceShape shape(3, 3);  // D = 40
    const DenseMatrix m = random_matrix(shape.dimension(), shape.dimension(), 6);
    CHECK(qmsg::reference::max_abs_diff(qmsg::kernels::dephase(m, shape),
                                        qmsg::reference::dephase(m, shape)) == 0.0);
    CHECK(qmsg::kernels::off_block_norm(m, shape) ==
          doctest::Approx(qmsg::reference::off_block_norm(m, shape)).epsilon(1e-13));
  }
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
  const DenseMatrix a = random_matrix(64, 64, 7);
  const DenseMatrix b = random_matrix(64, 64, 8);
  const qmsg::SpaceShape shape(2, 5);  // D = 63; pad matrices accordingly
  const DenseMatrix c = random_matrix(shape.dimension(), shape.dimension(), 9);

  const int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const DenseMatrix mm1 = qmsg::kernels::matmul(a, b);
  const double fd1 = qmsg::kernels::frobenius_distance(a, b);
  const double ob1 = qmsg::kernels::off_block_norm(c, shape);
  omp_set_num_threads(max_threads);
  const DenseMatrix mm2 = qmsg::kernels::matmul(a, b);
  const double fd2 = qmsg::kernels::frobenius_distance(a, b);
  const double ob2 = qmsg::kernels::off_block_norm(c, shape);

  CHECK(qmsg::reference::max_abs_diff(mm1, mm2) == 0.0);
  CHECK(fd1 == fd2);
  CHECK(ob1 == ob2);
}
#endif

TEST_CASE("dimension mismatches are rejected") {
  const DenseMatrix a = random_matrix(4, 4, 10);
  const DenseMatrix b = random_matrix(5, 5, 11);
  CHECK_THROWS_AS(qmsg::kernels::matmul(a, b), qmsg::validation_error);
  CHECK_THROWS_AS(qmsg::kernels::frobenius_distance(a, b), qmsg::validation_error);
  CHECK_THROWS_AS(qmsg::kernels::dephase(a, qmsg::SpaceShape(2, 2)),
                  qmsg::validation_error);
}

}  // TEST_SUITE
