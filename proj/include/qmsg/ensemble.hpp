#pragma once

#include <span>
#include <vector>

#include "qmsg/message_matrix.hpp"
#include "qmsg/operators.hpp"
#include "qmsg/state.hpp"

namespace qmsg {

struct EnsembleEntry {
  ManyLetterState state;
  double probability;
};

// Finite list of (state, probability) pairs over one space shape;
// probabilities strictly positive and summing to 1.
class Ensemble {
 public:
  Ensemble(SpaceShape shape, std::vector<EnsembleEntry> entries);

  const SpaceShape& shape() const { return shape_; }
  const std::vector<EnsembleEntry>& entries() const { return entries_; }

 private:
  SpaceShape shape_;
  std::vector<EnsembleEntry> entries_;
};

// sigma = sum_phi p(phi) |phi><phi|.
MessageMatrix message_matrix(const Ensemble& ensemble);

struct SpectralEntry {
  double probability;     // eigenvalue q_i > tol::eig
  ManyLetterState state;  // eigenstate |e_i>
};

// Eigenpairs of sigma, descending, zero eigenvalues dropped.
std::vector<SpectralEntry> spectral_decomposition(const MessageMatrix& sigma);

// The ensemble of sigma's eigenstates weighted by eigenvalues: the most
// classical ensemble with the same message matrix.
Ensemble eigen_ensemble(const MessageMatrix& sigma);

// Joint a-priori distribution over words of fixed length from an alphabet:
// flat table over |Q|^positions letter words, big-endian.
class JointDistribution {
 public:
  JointDistribution(std::size_t alphabet_size, std::size_t positions,
                    std::vector<double> probabilities);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t positions() const { return positions_; }
  const std::vector<double>& probabilities() const { return p_; }

  // Letter index at a position of the flat-index word.
  std::size_t letter_at(std::size_t flat, std::size_t position) const;

 private:
  std::size_t alphabet_size_;
  std::size_t positions_;
  std::vector<double> p_;
};

struct ProductEnsembleResult {
  MessageMatrix matrix;                // embedded in the length-N sector
  std::vector<LetterMatrix> marginals; // rho_1 .. rho_N
};

// Message matrix of a product ensemble plus its per-position marginals.
// When the joint factorizes, matrix equals the tensor product of marginals.
ProductEnsembleResult product_ensemble_matrix(const Alphabet& alphabet,
                                              const JointDistribution& joint);

// rho^(x)N embedded in the length-N sector of the shape (K, N).
MessageMatrix canonical_matrix(const LetterMatrix& rho, std::size_t n_letters);

// sigma = sum_n lambda_n rho^(x)n, block diagonal over the length sectors.
MessageMatrix grand_canonical_matrix(const LetterMatrix& rho,
                                     std::span<const double> lambdas);

struct SectorBlock {
  std::size_t length;
  double lambda;
  DenseMatrix matrix;  // K^n x K^n, unit trace
};

struct BlockDecomposition {
  std::vector<double> lambdas;     // length probabilities, n = 0..N
  std::vector<SectorBlock> blocks; // sectors with lambda_n > tol::prob
  double off_block_residual;       // Frobenius norm of the cross-length part
};

// lambda_n = Tr{Pi_n sigma Pi_n}; sigma_n = Pi_n sigma Pi_n / lambda_n.
// The residual reports how far sigma is from commuting with the length
// operator; it is never an error.
BlockDecomposition block_diagonalize(const MessageMatrix& sigma);

struct EquivalenceReport {
  bool equivalent;
  double distance;  // Frobenius distance of the message matrices
};

EquivalenceReport ensembles_equivalent(const Ensemble& a, const Ensemble& b,
                                       double tolerance);

// Dimension of the span of the ensemble's states (numerical rank of their
// Gram matrix at tol::rank).
std::size_t source_rank(const Ensemble& ensemble);

}  // namespace qmsg
