// Times the OpenMP kernels against their serial reference twins and checks
// that both produce the same numbers.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmsg/kernels.hpp"
#include "qmsg/measurement.hpp"

namespace {

using qmsg::DenseMatrix;
using qmsg::complexd;

DenseMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (complexd& v : m.data()) v = complexd{dist(gen), dist(gen)};
  return m;
}

DenseMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  DenseMatrix m = random_matrix(n, seed);
  DenseMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, double delta) {
  std::printf("%-22s %10.1f %10.1f %9.2fx   %.3e\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, delta);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-22s %10s %10s %10s   %s\n", "kernel", "serial ms", "parallel ms",
              "speedup", "max |delta|");

  {
    const std::size_t n = 384;
    const DenseMatrix a = random_matrix(n, 1);
    const DenseMatrix b = random_matrix(n, 2);
    DenseMatrix rs, rp;
    const double ts = time_ms([&] { rs = qmsg::reference::matmul(a, b); });
    const double tp = time_ms([&] { rp = qmsg::kernels::matmul(a, b); });
    row("matmul 384", ts, tp, qmsg::reference::max_abs_diff(rs, rp));
  }
  {
    const DenseMatrix a = random_matrix(48, 3);
    const DenseMatrix b = random_matrix(48, 4);
    DenseMatrix rs, rp;
    const double ts = time_ms([&] { rs = qmsg::reference::tensor_product(a, b); });
    const double tp = time_ms([&] { rp = qmsg::kernels::tensor_product(a, b); });
    row("tensor 48x48", ts, tp, qmsg::reference::max_abs_diff(rs, rp));
  }
  {
    const qmsg::SpaceShape shape(2, 10);  // D = 2047
    const DenseMatrix m = random_hermitian(shape.dimension(), 5);
    DenseMatrix rs, rp;
    const double ts = time_ms([&] { rs = qmsg::reference::dephase(m, shape); });
    const double tp = time_ms([&] { rp = qmsg::kernels::dephase(m, shape); });
    row("dephase D=2047", ts, tp, qmsg::reference::max_abs_diff(rs, rp));
  }
  {
    const std::size_t n = 2048;
    const DenseMatrix a = random_matrix(n, 6);
    const DenseMatrix b = random_matrix(n, 7);
    double rs = 0.0, rp = 0.0;
    const double ts = time_ms([&] { rs = qmsg::reference::frobenius_distance(a, b); });
    const double tp = time_ms([&] { rp = qmsg::kernels::frobenius_distance(a, b); });
    row("frobenius D=2048", ts, tp, std::abs(rs - rp));
  }
  {
    const std::size_t n = 1024;
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    qmsg::SparseVector v;
    for (std::size_t i = 0; i < n; ++i)
      v.emplace_back(i, complexd{dist(gen), dist(gen)});
    DenseMatrix rs(n, n), rp(n, n);
    const double ts = time_ms([&] {
      for (int k = 0; k < 32; ++k) qmsg::reference::accumulate_outer(rs, 0.03125, v);
    });
    const double tp = time_ms([&] {
      for (int k = 0; k < 32; ++k) qmsg::kernels::accumulate_outer(rp, 0.03125, v);
    });
    row("outer 1024 x32", ts, tp, qmsg::reference::max_abs_diff(rs, rp));
  }
  {
    // Sampling scales over trials; compare one thread against all threads.
    const qmsg::SpaceShape shape(2, 5);
    qmsg::ManyLetterState::AmplitudeMap amps;
    const double amp = 1.0 / std::sqrt(static_cast<double>(shape.dimension()));
    for (std::uint64_t i = 0; i < shape.dimension(); ++i) amps[i] = amp;
    const auto state = qmsg::ManyLetterState::normalized(shape, std::move(amps));
    const std::uint64_t trials = 4'000'000;
    qmsg::Histogram hs, hp;
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const double ts = time_ms(
        [&] { hs = qmsg::sample_statistics(state, qmsg::MeasureKind::basis, trials, 9); });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    const double tp = time_ms(
        [&] { hp = qmsg::sample_statistics(state, qmsg::MeasureKind::basis, trials, 9); });
    double delta = 0.0;
    for (std::size_t i = 0; i < hs.bins.size(); ++i)
      delta = std::max(delta, std::abs(static_cast<double>(hs.bins[i].count) -
                                       static_cast<double>(hp.bins[i].count)));
    row("sample 4M trials", ts, tp, delta);
  }
  return 0;
}
