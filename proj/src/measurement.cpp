#include "qmsg/measurement.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "qmsg/kernels.hpp"
#include "qmsg/rng.hpp"

namespace qmsg {

namespace {

// One sampleable outcome: a label in enumeration order plus its probability.
struct OutcomeSpec {
  std::string label;
  std::size_t length;
  double probability;
};

std::size_t pick(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return cdf.size() - 1;  // u beyond accumulated total
  return static_cast<std::size_t>(it - cdf.begin());
}

std::vector<double> cumulative(const std::vector<OutcomeSpec>& outcomes) {
  std::vector<double> cdf(outcomes.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    acc += outcomes[i].probability;
    cdf[i] = acc;
  }
  return cdf;
}

std::vector<OutcomeSpec> length_outcomes(const std::vector<double>& dist) {
  std::vector<OutcomeSpec> out;
  for (std::size_t n = 0; n < dist.size(); ++n)
    if (dist[n] > 0.0)
      out.push_back(OutcomeSpec{std::to_string(n), n, dist[n]});
  return out;
}

std::vector<OutcomeSpec> basis_outcomes(const ManyLetterState& phi) {
  std::vector<OutcomeSpec> out;
  for (const auto& [idx, amp] : phi.amplitudes()) {
    const BasisString s = phi.shape().string_at(idx);
    out.push_back(OutcomeSpec{to_string(s), s.length(), std::norm(amp)});
  }
  return out;
}

std::vector<OutcomeSpec> basis_outcomes(const MessageMatrix& sigma) {
  std::vector<OutcomeSpec> out;
  for (std::uint64_t i = 0; i < sigma.dimension(); ++i) {
    const double p = std::max(sigma.matrix()(i, i).real(), 0.0);
    if (p <= 0.0) continue;
    const BasisString s = sigma.shape().string_at(i);
    out.push_back(OutcomeSpec{to_string(s), s.length(), p});
  }
  return out;
}

Histogram run_trials(const std::vector<OutcomeSpec>& outcomes, std::uint64_t trials,
                     std::uint64_t seed) {
  if (trials == 0) throw validation_error("at least one trial required");
  if (outcomes.empty()) throw validation_error("no outcome has positive probability");
  const std::vector<double> cdf = cumulative(outcomes);

  std::vector<std::uint64_t> counts(outcomes.size(), 0);
  const std::int64_t n_trials = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(outcomes.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < n_trials; ++t)
      ++local[pick(cdf, rng::uniform01(seed, static_cast<std::uint64_t>(t)))];
#pragma omp critical
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
  }

  Histogram h;
  h.trials = trials;
  h.seed = seed;
  double mean = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    h.bins.push_back(Histogram::Bin{outcomes[i].label, outcomes[i].length, counts[i],
                                    static_cast<double>(counts[i]) / trials});
    mean += static_cast<double>(counts[i]) * outcomes[i].length;
  }
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const double d = static_cast<double>(outcomes[i].length) - mean;
    var += static_cast<double>(counts[i]) * d * d;
  }
  h.mean_length = mean;
  h.variance = var / static_cast<double>(trials);
  return h;
}

}  // namespace

std::vector<double> length_outcome_distribution(const ManyLetterState& phi) {
  if (!phi.is_normalized())
    throw validation_error("length distribution needs a normalized state");
  const SpaceShape& shape = phi.shape();
  std::vector<double> dist(shape.max_length() + 1, 0.0);
  for (const auto& [idx, amp] : phi.amplitudes())
    dist[shape.length_at(idx)] += std::norm(amp);
  return dist;
}

std::vector<double> length_outcome_distribution(const MessageMatrix& sigma) {
  const SpaceShape& shape = sigma.shape();
  std::vector<double> dist(shape.max_length() + 1, 0.0);
  for (std::size_t n = 0; n <= shape.max_length(); ++n) {
    const std::uint64_t lo = shape.sector_offset(n);
    const std::uint64_t dim = shape.sector_dim(n);
    double lambda = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) lambda += sigma.matrix()(lo + i, lo + i).real();
    dist[n] = std::max(lambda, 0.0);
  }
  return dist;
}

PureLengthOutcome measure_length(const ManyLetterState& phi, std::uint64_t seed,
                                 std::uint64_t counter) {
  const std::vector<double> dist = length_outcome_distribution(phi);
  const auto outcomes = length_outcomes(dist);
  const std::size_t n = outcomes[pick(cumulative(outcomes), rng::uniform01(seed, counter))].length;
  const double p = dist[n];
  assert(p > 0.0);

  const LengthProjector projector(phi.shape(), n);
  const ManyLetterState projected = projector.apply(phi);
  ManyLetterState::AmplitudeMap amps;
  const double scale = 1.0 / std::sqrt(p);
  for (const auto& [idx, amp] : projected.amplitudes()) amps[idx] = amp * scale;
  return PureLengthOutcome{n, p,
                           ManyLetterState::normalized(phi.shape(), std::move(amps))};
}

MixedLengthOutcome measure_length(const MessageMatrix& sigma, std::uint64_t seed,
                                  std::uint64_t counter) {
  const std::vector<double> dist = length_outcome_distribution(sigma);
  const auto outcomes = length_outcomes(dist);
  const std::size_t n = outcomes[pick(cumulative(outcomes), rng::uniform01(seed, counter))].length;
  const double p = dist[n];
  assert(p > 0.0);

  const LengthProjector projector(sigma.shape(), n);
  DenseMatrix block = projector.apply(sigma.matrix());
  for (complexd& v : block.data()) v /= p;
  return MixedLengthOutcome{n, p, MessageMatrix(sigma.shape(), std::move(block))};
}

BasisOutcome measure_basis(const ManyLetterState& phi, std::uint64_t seed,
                           std::uint64_t counter) {
  if (!phi.is_normalized())
    throw validation_error("basis measurement needs a normalized state");
  std::vector<std::uint64_t> indices;
  std::vector<OutcomeSpec> outcomes;
  for (const auto& [idx, amp] : phi.amplitudes()) {
    indices.push_back(idx);
    const BasisString s = phi.shape().string_at(idx);
    outcomes.push_back(OutcomeSpec{to_string(s), s.length(), std::norm(amp)});
  }
  if (outcomes.empty()) throw validation_error("state has empty support");
  const std::size_t k = pick(cumulative(outcomes), rng::uniform01(seed, counter));
  const std::uint64_t idx = indices[k];
  ManyLetterState::AmplitudeMap amps;
  amps[idx] = complexd{1.0, 0.0};
  return BasisOutcome{phi.shape().string_at(idx), outcomes[k].probability,
                      ManyLetterState::normalized(phi.shape(), std::move(amps))};
}

BasisOutcome measure_basis(const MessageMatrix& sigma, std::uint64_t seed,
                           std::uint64_t counter) {
  std::vector<std::uint64_t> indices;
  std::vector<OutcomeSpec> outcomes;
  for (std::uint64_t i = 0; i < sigma.dimension(); ++i) {
    const double p = std::max(sigma.matrix()(i, i).real(), 0.0);
    if (p <= 0.0) continue;
    indices.push_back(i);
    const BasisString s = sigma.shape().string_at(i);
    outcomes.push_back(OutcomeSpec{to_string(s), s.length(), p});
  }
  if (outcomes.empty()) throw validation_error("matrix has an all-zero diagonal");
  const std::size_t k = pick(cumulative(outcomes), rng::uniform01(seed, counter));
  const std::uint64_t idx = indices[k];
  ManyLetterState::AmplitudeMap amps;
  amps[idx] = complexd{1.0, 0.0};
  return BasisOutcome{sigma.shape().string_at(idx), outcomes[k].probability,
                      ManyLetterState::normalized(sigma.shape(), std::move(amps))};
}

MessageMatrix dephase_length(const MessageMatrix& sigma) {
  return MessageMatrix(sigma.shape(), kernels::dephase(sigma.matrix(), sigma.shape()));
}

Histogram sample_statistics(const ManyLetterState& phi, MeasureKind kind,
                            std::uint64_t trials, std::uint64_t seed) {
  if (kind == MeasureKind::length)
    return run_trials(length_outcomes(length_outcome_distribution(phi)), trials, seed);
  return run_trials(basis_outcomes(phi), trials, seed);
}

Histogram sample_statistics(const MessageMatrix& sigma, MeasureKind kind,
                            std::uint64_t trials, std::uint64_t seed) {
  if (kind == MeasureKind::length)
    return run_trials(length_outcomes(length_outcome_distribution(sigma)), trials, seed);
  return run_trials(basis_outcomes(sigma), trials, seed);
}

}  // namespace qmsg
