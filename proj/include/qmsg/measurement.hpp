#pragma once

#include <string>

#include "qmsg/ensemble.hpp"

namespace qmsg {

// p_n for n = 0..N: sector weights of a pure state or block traces of a
// message matrix. Sums to 1 within tol::prob; its mean is the expected length.
std::vector<double> length_outcome_distribution(const ManyLetterState& phi);
std::vector<double> length_outcome_distribution(const MessageMatrix& sigma);

struct PureLengthOutcome {
  std::size_t length;
  double probability;
  ManyLetterState post_state;
};

struct MixedLengthOutcome {
  std::size_t length;
  double probability;
  MessageMatrix post_state;
};

// Projective length measurement. Sampling is by inverse CDF over ascending
// sector order using rng::uniform01(seed, counter); deterministic given the
// seed. The post state is the renormalized projection onto the sampled sector.
PureLengthOutcome measure_length(const ManyLetterState& phi, std::uint64_t seed,
                                 std::uint64_t counter = 0);
MixedLengthOutcome measure_length(const MessageMatrix& sigma, std::uint64_t seed,
                                  std::uint64_t counter = 0);

struct BasisOutcome {
  BasisString value;
  double probability;
  ManyLetterState post_state;  // the basis word itself (full collapse)
};

// Measurement in the basis-word basis: outcome a^n with probability
// |phi(a^n)|^2, or <a^n|sigma|a^n> for a mixed input.
BasisOutcome measure_basis(const ManyLetterState& phi, std::uint64_t seed,
                           std::uint64_t counter = 0);
BasisOutcome measure_basis(const MessageMatrix& sigma, std::uint64_t seed,
                           std::uint64_t counter = 0);

// sum_n Pi_n sigma Pi_n: kills coherences between distinct lengths. Trace
// preserving, idempotent, commutes with the length operator.
MessageMatrix dephase_length(const MessageMatrix& sigma);

enum class MeasureKind { length, basis };

struct Histogram {
  struct Bin {
    std::string label;          // "2" for lengths, "(0,1)" for basis words
    std::size_t outcome_length; // sector of the outcome
    std::uint64_t count;
    double frequency;
  };
  std::vector<Bin> bins;  // enumeration order; only outcomes with p > 0
  double mean_length = 0.0;
  double variance = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Repeated seeded measurement; trial t consumes rng counter t, so the
// histogram is identical for any thread count.
Histogram sample_statistics(const ManyLetterState& phi, MeasureKind kind,
                            std::uint64_t trials, std::uint64_t seed);
Histogram sample_statistics(const MessageMatrix& sigma, MeasureKind kind,
                            std::uint64_t trials, std::uint64_t seed);

}  // namespace qmsg
