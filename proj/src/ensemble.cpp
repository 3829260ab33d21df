#include "qmsg/ensemble.hpp"

#include <cmath>

#include "qmsg/eig.hpp"
#include "qmsg/kernels.hpp"

namespace qmsg {

namespace {

constexpr std::uint64_t kJointTableCap = 1u << 20;

SparseVector to_sparse(const ManyLetterState& state) {
  SparseVector v;
  v.reserve(state.amplitudes().size());
  for (const auto& [idx, amp] : state.amplitudes()) v.emplace_back(idx, amp);
  return v;
}

// Sparse state from a dense column; drops entries at or below tol::amp.
ManyLetterState column_state(const SpaceShape& shape, const DenseMatrix& vectors,
                             std::size_t column) {
  ManyLetterState::AmplitudeMap amps;
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    const complexd a = vectors(i, column);
    if (std::abs(a) > tol::amp) amps[i] = a;
  }
  return ManyLetterState::normalized(shape, std::move(amps));
}

DenseMatrix tensor_power(const DenseMatrix& rho, std::size_t n) {
  DenseMatrix t(1, 1);
  t(0, 0) = 1.0;
  for (std::size_t i = 0; i < n; ++i) t = kernels::tensor_product(t, rho);
  return t;
}

void embed_block(DenseMatrix& out, const SpaceShape& shape, std::size_t sector,
                 const DenseMatrix& block, double scale) {
  const std::uint64_t lo = shape.sector_offset(sector);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      out(lo + i, lo + j) = scale * block(i, j);
}

}  // namespace

Ensemble::Ensemble(SpaceShape shape, std::vector<EnsembleEntry> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.empty()) throw validation_error("ensemble needs at least one entry");
  double sum = 0.0;
  for (const auto& e : entries_) {
    if (e.probability <= 0.0)
      throw validation_error("ensemble probabilities must be positive");
    if (!(e.state.shape() == shape_))
      throw validation_error("ensemble states must share the ensemble shape");
    if (!e.state.is_normalized())
      throw validation_error("ensemble states must be normalized");
    sum += e.probability;
  }
  if (std::abs(sum - 1.0) > tol::prob)
    throw validation_error("ensemble probabilities must sum to 1");
}

MessageMatrix message_matrix(const Ensemble& ensemble) {
  const SpaceShape& shape = ensemble.shape();
  if (shape.dimension() > dense_cap)
    throw cap_error("space dimension exceeds the dense cap");
  DenseMatrix m(shape.dimension(), shape.dimension());
  for (const auto& e : ensemble.entries())
    kernels::accumulate_outer(m, e.probability, to_sparse(e.state));
  return MessageMatrix(shape, std::move(m));
}

std::vector<SpectralEntry> spectral_decomposition(const MessageMatrix& sigma) {
  const EigenSystem sys = hermitian_eigensystem(sigma.matrix());
  std::vector<SpectralEntry> out;
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    if (sys.values[k] <= tol::eig) break;  // descending order
    out.push_back(
        SpectralEntry{sys.values[k], column_state(sigma.shape(), sys.vectors, k)});
  }
  return out;
}

Ensemble eigen_ensemble(const MessageMatrix& sigma) {
  std::vector<EnsembleEntry> entries;
  for (auto& [q, state] : spectral_decomposition(sigma))
    entries.push_back(EnsembleEntry{std::move(state), q});
  return Ensemble(sigma.shape(), std::move(entries));
}

JointDistribution::JointDistribution(std::size_t alphabet_size, std::size_t positions,
                                     std::vector<double> probabilities)
    : alphabet_size_(alphabet_size), positions_(positions), p_(std::move(probabilities)) {
  if (alphabet_size_ == 0) throw validation_error("joint needs a nonempty alphabet");
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < positions_; ++i) {
    if (expected > kJointTableCap / alphabet_size_)
      throw cap_error("joint table too large");
    expected *= alphabet_size_;
  }
  if (p_.size() != expected)
    throw validation_error("joint table size must be alphabet size to the power N");
  double sum = 0.0;
  for (double v : p_) {
    if (v < 0.0) throw validation_error("joint probabilities must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::prob)
    throw validation_error("joint probabilities must sum to 1");
}

std::size_t JointDistribution::letter_at(std::size_t flat, std::size_t position) const {
  std::size_t divisor = 1;
  for (std::size_t i = position + 1; i < positions_; ++i) divisor *= alphabet_size_;
  return (flat / divisor) % alphabet_size_;
}

ProductEnsembleResult product_ensemble_matrix(const Alphabet& alphabet,
                                              const JointDistribution& joint) {
  if (joint.alphabet_size() != alphabet.size())
    throw validation_error("joint table does not match the alphabet size");
  const std::size_t n = joint.positions();
  const SpaceShape shape(alphabet.rank(), n);
  if (shape.dimension() > dense_cap)
    throw cap_error("space dimension exceeds the dense cap");

  DenseMatrix m(shape.dimension(), shape.dimension());
  std::vector<std::size_t> letters(n);
  for (std::size_t flat = 0; flat < joint.probabilities().size(); ++flat) {
    const double p = joint.probabilities()[flat];
    if (p == 0.0) continue;
    for (std::size_t pos = 0; pos < n; ++pos) letters[pos] = joint.letter_at(flat, pos);
    const ManyLetterState word = product_message(alphabet, letters, n);
    kernels::accumulate_outer(m, p, to_sparse(word));
  }

  std::vector<LetterMatrix> marginals;
  marginals.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<double> marginal(alphabet.size(), 0.0);
    for (std::size_t flat = 0; flat < joint.probabilities().size(); ++flat)
      marginal[joint.letter_at(flat, pos)] += joint.probabilities()[flat];
    marginals.push_back(letter_matrix(alphabet, marginal));
  }
  return ProductEnsembleResult{MessageMatrix(shape, std::move(m)), std::move(marginals)};
}

MessageMatrix canonical_matrix(const LetterMatrix& rho, std::size_t n_letters) {
  const SpaceShape shape(rho.dim(), n_letters);
  if (shape.dimension() > dense_cap)
    throw cap_error("space dimension exceeds the dense cap");
  DenseMatrix m(shape.dimension(), shape.dimension());
  embed_block(m, shape, n_letters, tensor_power(rho.matrix(), n_letters), 1.0);
  return MessageMatrix(shape, std::move(m));
}

MessageMatrix grand_canonical_matrix(const LetterMatrix& rho,
                                     std::span<const double> lambdas) {
  if (lambdas.empty()) throw validation_error("lambda vector must be nonempty");
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw validation_error("length probabilities must be nonnegative");
    sum += l;
  }
  if (std::abs(sum - 1.0) > tol::prob)
    throw validation_error("length probabilities must sum to 1");

  const std::size_t max_len = lambdas.size() - 1;
  const SpaceShape shape(rho.dim(), max_len);
  if (shape.dimension() > dense_cap)
    throw cap_error("space dimension exceeds the dense cap");

  DenseMatrix m(shape.dimension(), shape.dimension());
  DenseMatrix power(1, 1);
  power(0, 0) = 1.0;
  for (std::size_t n = 0; n <= max_len; ++n) {
    if (n > 0) power = kernels::tensor_product(power, rho.matrix());
    if (lambdas[n] > 0.0) embed_block(m, shape, n, power, lambdas[n]);
  }
  return MessageMatrix(shape, std::move(m));
}

BlockDecomposition block_diagonalize(const MessageMatrix& sigma) {
  const SpaceShape& shape = sigma.shape();
  BlockDecomposition out;
  out.lambdas.resize(shape.max_length() + 1, 0.0);
  for (std::size_t n = 0; n <= shape.max_length(); ++n) {
    const std::uint64_t lo = shape.sector_offset(n);
    const std::uint64_t dim = shape.sector_dim(n);
    double lambda = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) lambda += sigma.matrix()(lo + i, lo + i).real();
    lambda = std::max(lambda, 0.0);
    out.lambdas[n] = lambda;
    if (lambda > tol::prob) {
      DenseMatrix block(dim, dim);
      for (std::uint64_t i = 0; i < dim; ++i)
        for (std::uint64_t j = 0; j < dim; ++j)
          block(i, j) = sigma.matrix()(lo + i, lo + j) / lambda;
      out.blocks.push_back(SectorBlock{n, lambda, std::move(block)});
    }
  }
  out.off_block_residual = kernels::off_block_norm(sigma.matrix(), shape);
  return out;
}

EquivalenceReport ensembles_equivalent(const Ensemble& a, const Ensemble& b,
                                       double tolerance) {
  if (!(a.shape() == b.shape()))
    throw validation_error("ensembles live on different space shapes");
  const MessageMatrix ma = message_matrix(a);
  const MessageMatrix mb = message_matrix(b);
  const double d = kernels::frobenius_distance(ma.matrix(), mb.matrix());
  return EquivalenceReport{d <= tolerance, d};
}

std::size_t source_rank(const Ensemble& ensemble) {
  const std::size_t g = ensemble.entries().size();
  DenseMatrix gram(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      gram(i, j) =
          inner_product(ensemble.entries()[i].state, ensemble.entries()[j].state);
  const auto evals = hermitian_eigenvalues(gram);
  std::size_t rank = 0;
  for (double v : evals)
    if (v > tol::rank) ++rank;
  return rank;
}

}  // namespace qmsg
