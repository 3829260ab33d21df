#pragma once

#include <span>
#include <string>
#include <vector>

#include "qmsg/dense.hpp"

namespace qmsg {

// Single-letter density matrix in basis-alphabet coordinates:
// K x K, Hermitian, unit trace, positive semidefinite.
class LetterMatrix {
 public:
  explicit LetterMatrix(DenseMatrix m);

  const DenseMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  DenseMatrix matrix_;
};

// A quantum alphabet: normalized letter vectors (possibly non-orthogonal,
// possibly linearly dependent) in a common ambient space, together with the
// orthonormal basis alphabet spanning them.
//
// The basis is extracted by modified Gram-Schmidt in letter input order;
// residuals with norm <= tol::rank are discarded, so the basis (and every
// serialized result downstream) is deterministic in the input order.
class Alphabet {
 public:
  Alphabet(std::vector<std::vector<complexd>> letters, std::vector<std::string> labels);

  std::size_t size() const { return letters_.size(); }  // |Q|
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }  // K_Q

  const std::vector<complexd>& letter(std::size_t i) const;
  const std::string& label(std::size_t i) const;
  const std::vector<complexd>& basis_vector(std::size_t a) const;

  // Coordinates <a|x_i> of letter i in the basis alphabet (length K_Q).
  const std::vector<complexd>& letter_coords(std::size_t i) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<std::vector<complexd>> letters_;
  std::vector<std::string> labels_;
  std::vector<std::vector<complexd>> basis_;
  std::vector<std::vector<complexd>> coords_;
};

// Entry (i,j) = <x_i|x_j>; Hermitian with unit diagonal.
DenseMatrix gram_matrix(const Alphabet& alphabet);

// Coordinates of one letter in the basis alphabet.
std::vector<complexd> expand_letter(const Alphabet& alphabet, std::size_t letter_index);

// rho = sum_x p(x) |x><x| in basis-alphabet coordinates.
LetterMatrix letter_matrix(const Alphabet& alphabet, std::span<const double> priors);

struct LetterEigenpair {
  double probability;            // eigenvalue q(a)
  std::vector<complexd> vector;  // eigenvector |a> in basis coordinates
};

// Spectral decomposition of a letter matrix; eigenvalues descending.
std::vector<LetterEigenpair> letter_spectral(const LetterMatrix& rho);

}  // namespace qmsg
