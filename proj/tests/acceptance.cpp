// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerance in place; the brute-force checks run
// against the independent naive implementation in oracle.cpp.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "qmsg/io.hpp"
#include "qmsg/kernels.hpp"
#include "qmsg/measurement.hpp"
#include "testutil.hpp"

using qmsg::BasisString;
using qmsg::complexd;
using qmsg::Ensemble;
using qmsg::EnsembleEntry;
using qmsg::ManyLetterState;
using qmsg::MessageMatrix;
using qmsg::SpaceShape;
using testutil::kInvSqrt2;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", number, name,
              detail.c_str());
  if (!pass) ++g_failures;
}

ManyLetterState basis_word(const SpaceShape& shape, const BasisString& s) {
  ManyLetterState::AmplitudeMap amps;
  amps[shape.index_of(s)] = complexd{1.0, 0.0};
  return ManyLetterState::normalized(shape, std::move(amps));
}

// --- 1: direct-sum orthogonality and completeness ---------------------------

void criterion_1() {
  Timer timer;
  const SpaceShape shape(2, 5);  // D = 63
  double worst_inner = 0.0;
  bool exact = true;
  for (std::uint64_t i = 0; i < shape.dimension(); ++i)
    for (std::uint64_t j = 0; j < shape.dimension(); ++j) {
      if (shape.length_at(i) == shape.length_at(j)) continue;
      const complexd overlap = inner_product(basis_word(shape, shape.string_at(i)),
                                             basis_word(shape, shape.string_at(j)));
      if (overlap != complexd{0.0, 0.0}) exact = false;
      worst_inner = std::max(worst_inner, std::abs(overlap));
    }

  std::mt19937_64 gen(101);
  double worst_completeness = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const auto phi = testutil::random_state(shape, gen, 12);
    double total = 0.0;
    for (std::size_t n = 0; n <= 5; ++n)
      total += qmsg::LengthProjector(shape, n).weight(phi);
    worst_completeness = std::max(worst_completeness, std::abs(total - 1.0));
  }

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "cross-length overlaps exactly zero, completeness defect "
         << worst_completeness << ", " << elapsed << " s";
  report(1, "direct-sum orthogonality and completeness",
         exact && worst_inner == 0.0 && worst_completeness <= 1e-9 && elapsed < 1.0,
         detail.str());
}

// --- 2: length-operator law --------------------------------------------------

void criterion_2() {
  Timer timer;
  std::mt19937_64 gen(102);
  double worst_state = 0.0;
  const SpaceShape big(3, 5);
  const qmsg::Observable len_big = qmsg::length_operator(big);
  for (int rep = 0; rep < 100; ++rep) {
    const auto phi = testutil::random_state(big, gen, 12);
    double direct = 0.0;
    for (const auto& [idx, amp] : phi.amplitudes())
      direct += std::norm(amp) * double(big.string_at(idx).length());
    worst_state = std::max(worst_state, std::abs(qmsg::expectation(len_big, phi) - direct));
  }

  double worst_ensemble = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const SpaceShape shape(2 + rep % 2, 1 + rep % 3);
    const auto ensemble = testutil::random_ensemble(shape, gen);
    const auto sigma = message_matrix(ensemble);
    double direct = 0.0;
    for (const auto& e : ensemble.entries())
      direct += e.probability * qmsg::expected_length(e.state);
    worst_ensemble =
        std::max(worst_ensemble, std::abs(qmsg::expected_length(sigma) - direct));
  }

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "state defect " << worst_state << ", ensemble defect " << worst_ensemble
         << ", " << elapsed << " s";
  report(2, "length-operator expectation law",
         worst_state <= 1e-10 && worst_ensemble <= 1e-10 && elapsed < 5.0,
         detail.str());
}

// --- 3: ensemble indistinguishability ----------------------------------------

void criterion_3() {
  Timer timer;
  std::mt19937_64 gen(103);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const SpaceShape shape(2 + rep % 2, 1 + rep % 3);  // K <= 3, N <= 3
    const auto ensemble = testutil::random_ensemble(shape, gen);
    const auto sigma = message_matrix(ensemble);
    const auto rebuilt = message_matrix(eigen_ensemble(sigma));
    worst = std::max(worst, qmsg::kernels::frobenius_distance(sigma.matrix(),
                                                              rebuilt.matrix()));
  }

  const SpaceShape qubit(2, 1);
  ManyLetterState::AmplitudeMap plus_amps, minus_amps;
  plus_amps[1] = kInvSqrt2;
  plus_amps[2] = kInvSqrt2;
  minus_amps[1] = kInvSqrt2;
  minus_amps[2] = -kInvSqrt2;
  const Ensemble computational(
      qubit, {EnsembleEntry{basis_word(qubit, BasisString{{0}}), 0.5},
              EnsembleEntry{basis_word(qubit, BasisString{{1}}), 0.5}});
  const Ensemble conjugate(
      qubit,
      {EnsembleEntry{ManyLetterState::normalized(qubit, plus_amps), 0.5},
       EnsembleEntry{ManyLetterState::normalized(qubit, minus_amps), 0.5}});
  const auto verdict = ensembles_equivalent(computational, conjugate, 1e-12);

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "worst eigen-ensemble distance " << worst << ", basis-pair distance "
         << verdict.distance << ", " << elapsed << " s";
  report(3, "ensembles with one message matrix are indistinguishable",
         worst <= 1e-10 && verdict.equivalent && elapsed < 10.0, detail.str());
}

// --- 4: factorization of product ensembles ----------------------------------

void criterion_4() {
  Timer timer;
  std::mt19937_64 gen(104);
  const qmsg::Alphabet qubit = testutil::qubit_alphabet();
  double worst = 0.0;
  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t n = 1 + rep % 3;  // N <= 3
    std::vector<std::vector<double>> factors;
    for (std::size_t i = 0; i < n; ++i)
      factors.push_back(testutil::random_prob_vector(2, gen));
    std::vector<double> joint;
    for (std::size_t flat = 0; flat < (std::size_t(1) << n); ++flat) {
      double p = 1.0;
      for (std::size_t pos = 0; pos < n; ++pos)
        p *= factors[pos][(flat >> (n - 1 - pos)) & 1];
      joint.push_back(p);
    }
    const auto result =
        product_ensemble_matrix(qubit, qmsg::JointDistribution(2, n, joint));
    qmsg::DenseMatrix tensor(1, 1);
    tensor(0, 0) = 1.0;
    for (const auto& rho : result.marginals)
      tensor = qmsg::kernels::tensor_product(tensor, rho.matrix());
    const SpaceShape shape(2, n);
    qmsg::DenseMatrix embedded(shape.dimension(), shape.dimension());
    const std::uint64_t lo = shape.sector_offset(n);
    for (std::size_t i = 0; i < tensor.rows(); ++i)
      for (std::size_t j = 0; j < tensor.cols(); ++j)
        embedded(lo + i, lo + j) = tensor(i, j);
    worst = std::max(worst, qmsg::kernels::frobenius_distance(result.matrix.matrix(),
                                                              embedded));
  }

  // Perfectly correlated counterexample, confirmed by a naive 4x4 construction.
  const auto correlated =
      product_ensemble_matrix(qubit, qmsg::JointDistribution(2, 2, {0.5, 0.0, 0.0, 0.5}));
  qmsg::DenseMatrix marg_tensor = qmsg::kernels::tensor_product(
      correlated.marginals[0].matrix(), correlated.marginals[1].matrix());
  const SpaceShape shape2(2, 2);
  const std::uint64_t lo2 = shape2.sector_offset(2);
  double impl_gap_sq = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      impl_gap_sq += std::norm(correlated.matrix.matrix()(lo2 + i, lo2 + j) -
                               marg_tensor(i, j));
  const double impl_gap = std::sqrt(impl_gap_sq);

  oracle::Mat naive_sigma = oracle::zero(4);
  oracle::Vec w00(4, 0.0), w11(4, 0.0);
  w00[0] = 1.0;  // |00> in lexicographic sector order
  w11[3] = 1.0;  // |11>
  oracle::add_outer(naive_sigma, 0.5, w00);
  oracle::add_outer(naive_sigma, 0.5, w11);
  oracle::Mat naive_product = oracle::zero(4);
  for (std::size_t i = 0; i < 4; ++i) naive_product[i][i] = 0.25;
  const double naive_gap =
      oracle::frobenius(oracle::subtract(naive_sigma, naive_product));

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "worst factorizing defect " << worst << ", correlated gap " << impl_gap
         << " vs naive " << naive_gap << ", " << elapsed << " s";
  report(4, "product ensembles factorize into marginals",
         worst <= 1e-10 && impl_gap > 0.4 && naive_gap > 0.4 &&
             std::abs(impl_gap - naive_gap) <= 1e-10,
         detail.str());
}

// --- 5: grand canonical round trip -------------------------------------------

void criterion_5() {
  Timer timer;
  std::mt19937_64 gen(105);
  double worst_lambda = 0.0, worst_block = 0.0, worst_mean = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t max_len = 1 + rep % 5;  // N <= 5
    const auto rho = testutil::random_letter_matrix(2, gen);
    const auto lambdas = testutil::random_prob_vector(max_len + 1, gen);
    const auto sigma = grand_canonical_matrix(rho, lambdas);
    const auto decomp = block_diagonalize(sigma);

    for (std::size_t n = 0; n <= max_len; ++n)
      worst_lambda = std::max(worst_lambda, std::abs(decomp.lambdas[n] - lambdas[n]));
    for (const auto& block : decomp.blocks) {
      qmsg::DenseMatrix power(1, 1);
      power(0, 0) = 1.0;
      for (std::size_t i = 0; i < block.length; ++i)
        power = qmsg::kernels::tensor_product(power, rho.matrix());
      worst_block = std::max(
          worst_block, qmsg::kernels::frobenius_distance(block.matrix, power));
    }
    double mean = 0.0;
    for (std::size_t n = 0; n <= max_len; ++n) mean += lambdas[n] * double(n);
    worst_mean = std::max(worst_mean, std::abs(qmsg::expected_length(sigma) - mean));
  }

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "lambda defect " << worst_lambda << ", block defect " << worst_block
         << ", mean defect " << worst_mean << ", " << elapsed << " s";
  report(5, "grand canonical matrices round-trip through block diagonalization",
         worst_lambda <= 1e-10 && worst_block <= 1e-10 && worst_mean <= 1e-10 &&
             elapsed < 10.0,
         detail.str());
}

// --- 6: dephasing and commutation --------------------------------------------

void criterion_6() {
  Timer timer;
  std::mt19937_64 gen(106);
  double worst_comm = 0.0, worst_idem = 0.0, worst_trace = 0.0, worst_mean = 0.0;
  int produced = 0;
  while (produced < 20) {
    const SpaceShape shape(2, 2 + produced % 3);
    const auto ensemble = testutil::random_ensemble(shape, gen, 4, 8);
    const auto sigma = message_matrix(ensemble);
    if (qmsg::kernels::off_block_norm(sigma.matrix(), shape) <= 1e-6)
      continue;  // want genuine cross-length coherences
    ++produced;

    const auto dephased = dephase_length(sigma);
    worst_comm = std::max(
        worst_comm, qmsg::commutator_norm(qmsg::length_operator(shape), dephased));
    const auto twice = dephase_length(dephased);
    worst_idem = std::max(worst_idem, qmsg::kernels::frobenius_distance(
                                          twice.matrix(), dephased.matrix()));
    worst_trace = std::max(worst_trace, std::abs(dephased.matrix().trace().real() -
                                                 sigma.matrix().trace().real()));
    worst_mean = std::max(worst_mean, std::abs(qmsg::expected_length(dephased) -
                                               qmsg::expected_length(sigma)));
  }

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "commutator " << worst_comm << ", idempotence defect " << worst_idem
         << ", trace defect " << worst_trace << ", mean defect " << worst_mean << ", "
         << elapsed << " s";
  report(6, "length dephasing commutes, is idempotent and trace preserving",
         worst_comm <= 1e-12 && worst_idem == 0.0 && worst_trace <= 1e-12 &&
             worst_mean <= 1e-12,
         detail.str());
}

// --- 7: seeded measurement statistics ----------------------------------------

void criterion_7() {
  Timer timer;
  const std::uint64_t trials = 100000;

  // (|0> + |11>)/sqrt(2): the length-1 frequency sits in 0.5 +- 0.006.
  const SpaceShape shape(2, 2);
  ManyLetterState::AmplitudeMap amps;
  amps[shape.index_of(BasisString{{0}})] = kInvSqrt2;
  amps[shape.index_of(BasisString{{1, 1}})] = kInvSqrt2;
  const auto phi = ManyLetterState::normalized(shape, std::move(amps));
  const auto h_len = sample_statistics(phi, qmsg::MeasureKind::length, trials, 2024);
  double freq1 = 0.0;
  for (const auto& bin : h_len.bins)
    if (bin.label == "1") freq1 = bin.frequency;
  const bool length_ok = std::abs(freq1 - 0.5) <= 0.006;

  // Grand canonical basis statistics within 3.8 binomial standard deviations.
  const auto rho =
      letter_matrix(testutil::qubit_alphabet(), std::vector<double>{0.75, 0.25});
  const auto sigma = grand_canonical_matrix(rho, std::vector<double>{0.5, 0.25, 0.25});
  const auto h_basis = sample_statistics(sigma, qmsg::MeasureKind::basis, trials, 77);
  const double expected[] = {0.5,        3.0 / 16.0, 1.0 / 16.0, 9.0 / 64.0,
                             3.0 / 64.0, 3.0 / 64.0, 1.0 / 64.0};
  bool basis_ok = h_basis.bins.size() == 7;
  double worst_sigmas = 0.0;
  if (basis_ok)
    for (std::size_t i = 0; i < 7; ++i) {
      const double p = expected[i];
      const double sd = std::sqrt(p * (1.0 - p) / double(trials));
      worst_sigmas = std::max(worst_sigmas,
                              std::abs(h_basis.bins[i].frequency - p) / sd);
    }
  basis_ok = basis_ok && worst_sigmas <= 3.8;

  // Same seed, byte-identical serialized histograms.
  const auto again = sample_statistics(sigma, qmsg::MeasureKind::basis, trials, 77);
  const bool bytes_ok = qmsg::io::write_histogram(h_basis).dump() ==
                        qmsg::io::write_histogram(again).dump();

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "length-1 frequency " << freq1 << ", worst basis deviation "
         << worst_sigmas << " sd, byte-identical " << (bytes_ok ? "yes" : "no")
         << ", " << elapsed << " s";
  report(7, "seeded measurement statistics match the distributions",
         length_ok && basis_ok && bytes_ok && elapsed < 30.0, detail.str());
}

// --- 8: equivalence with the naive dense implementation ----------------------

void criterion_8() {
  Timer timer;
  std::mt19937_64 gen(108);
  double worst = 0.0;

  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t max_len = 2 + rep % 3;  // N <= 4, D <= 31
    const SpaceShape shape(2, max_len);
    const auto words = oracle::enumerate_words(2, max_len);
    const auto ensemble = testutil::random_ensemble(shape, gen, 5, 10);

    // Message matrix.
    oracle::Mat naive = oracle::zero(words.size());
    for (const auto& e : ensemble.entries())
      oracle::add_outer(naive, e.probability, oracle::dense_state(e.state, words));
    const auto sigma = message_matrix(ensemble);
    const auto impl = oracle::from_library(sigma.matrix());
    worst = std::max(worst, oracle::max_abs(oracle::subtract(impl, naive)));

    // Spectral reconstruction, rebuilt with naive outer products.
    oracle::Mat rebuilt = oracle::zero(words.size());
    for (const auto& entry : spectral_decomposition(sigma))
      oracle::add_outer(rebuilt, entry.probability,
                        oracle::dense_state(entry.state, words));
    worst = std::max(worst, oracle::max_abs(oracle::subtract(rebuilt, naive)));

    // Block diagonalization: lambdas, blocks and residual.
    const auto decomp = block_diagonalize(sigma);
    const auto naive_dist = oracle::length_distribution(naive, words, max_len);
    for (std::size_t n = 0; n <= max_len; ++n)
      worst = std::max(worst, std::abs(decomp.lambdas[n] - naive_dist[n]));
    const double naive_residual =
        oracle::frobenius(oracle::subtract(naive, oracle::dephase(naive, words)));
    worst = std::max(worst, std::abs(decomp.off_block_residual - naive_residual));
    for (const auto& block : decomp.blocks) {
      std::size_t first = 0;
      while (words[first].size() != block.length) ++first;
      for (std::size_t i = 0; i < block.matrix.rows(); ++i)
        for (std::size_t j = 0; j < block.matrix.cols(); ++j)
          worst = std::max(worst, std::abs(block.matrix(i, j) -
                                           naive[first + i][first + j] /
                                               naive_dist[block.length]));
    }

    // Expected lengths, pure and mixed.
    worst = std::max(worst, std::abs(qmsg::expected_length(sigma) -
                                     oracle::expected_length(naive, words)));
    const auto& phi = ensemble.entries()[0].state;
    worst = std::max(worst,
                     std::abs(qmsg::expected_length(phi) -
                              oracle::expected_length(oracle::dense_state(phi, words),
                                                      words)));

    // Measurement distributions.
    const auto impl_dist_pure = length_outcome_distribution(phi);
    const auto naive_dist_pure =
        oracle::length_distribution(oracle::dense_state(phi, words), words, max_len);
    for (std::size_t n = 0; n <= max_len; ++n)
      worst = std::max(worst, std::abs(impl_dist_pure[n] - naive_dist_pure[n]));
    const auto impl_dist_mixed = length_outcome_distribution(sigma);
    for (std::size_t n = 0; n <= max_len; ++n)
      worst = std::max(worst, std::abs(impl_dist_mixed[n] - naive_dist[n]));
    for (std::size_t i = 0; i < words.size(); ++i) {
      const double impl_p =
          std::max(sigma.matrix()(i, i).real(), 0.0);  // basis-measurement weight
      worst = std::max(worst, std::abs(impl_p - naive[i][i].real()));
    }
  }

  const double elapsed = timer.seconds();
  std::ostringstream detail;
  detail << "worst deviation " << worst << " over K=2, N<=4, " << elapsed << " s";
  report(8, "results match the naive dense implementation", worst <= 1e-10,
         detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0)
    std::printf("all 8 criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
