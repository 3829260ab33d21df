#include "qmsg/alphabet.hpp"

#include <cmath>
#include <unordered_set>

#include "qmsg/eig.hpp"

namespace qmsg {

namespace {

complexd dot(const std::vector<complexd>& a, const std::vector<complexd>& b) {
  complexd s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const std::vector<complexd>& a) {
  double s = 0.0;
  for (const complexd& v : a) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

LetterMatrix::LetterMatrix(DenseMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw validation_error("letter matrix must be square and nonempty");
  if (matrix_.hermiticity_defect() > tol::herm)
    throw validation_error("letter matrix is not Hermitian");
  if (std::abs(matrix_.trace() - complexd{1.0, 0.0}) > tol::trace)
    throw validation_error("letter matrix trace differs from 1");
  const auto evals = hermitian_eigenvalues(matrix_);
  if (evals.back() < -tol::psd)
    throw validation_error("letter matrix has a negative eigenvalue");
}

Alphabet::Alphabet(std::vector<std::vector<complexd>> letters,
                   std::vector<std::string> labels)
    : letters_(std::move(letters)), labels_(std::move(labels)) {
  if (letters_.empty()) throw validation_error("alphabet needs at least one letter");
  if (labels_.size() != letters_.size())
    throw validation_error("one label per letter required");
  ambient_dim_ = letters_[0].size();
  if (ambient_dim_ == 0) throw validation_error("letters must have dimension >= 1");

  std::unordered_set<std::string> seen;
  for (const std::string& l : labels_)
    if (!seen.insert(l).second) throw validation_error("duplicate letter label: " + l);

  for (const auto& x : letters_) {
    if (x.size() != ambient_dim_)
      throw validation_error("letters must share one ambient dimension");
    if (std::abs(norm(x) - 1.0) > tol::norm)
      throw validation_error("letters must be normalized");
  }

  // Modified Gram-Schmidt over the letters in input order.
  for (const auto& x : letters_) {
    std::vector<complexd> v = x;
    for (const auto& b : basis_) {
      const complexd c = dot(b, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    const double r = norm(v);
    if (r > tol::rank) {
      for (complexd& vi : v) vi /= r;
      basis_.push_back(std::move(v));
    }
  }

  coords_.reserve(letters_.size());
  for (const auto& x : letters_) {
    std::vector<complexd> c(basis_.size());
    for (std::size_t a = 0; a < basis_.size(); ++a) c[a] = dot(basis_[a], x);
    // The basis must reproduce the letter it was built from.
    std::vector<complexd> rebuilt(ambient_dim_, complexd{0.0, 0.0});
    for (std::size_t a = 0; a < basis_.size(); ++a)
      for (std::size_t i = 0; i < ambient_dim_; ++i) rebuilt[i] += c[a] * basis_[a][i];
    for (std::size_t i = 0; i < ambient_dim_; ++i) rebuilt[i] -= x[i];
    if (norm(rebuilt) > tol::norm)
      throw validation_error("basis alphabet fails to span a letter");
    coords_.push_back(std::move(c));
  }
}

const std::vector<complexd>& Alphabet::letter(std::size_t i) const {
  if (i >= letters_.size()) throw validation_error("letter index out of range");
  return letters_[i];
}

const std::string& Alphabet::label(std::size_t i) const {
  if (i >= labels_.size()) throw validation_error("letter index out of range");
  return labels_[i];
}

const std::vector<complexd>& Alphabet::basis_vector(std::size_t a) const {
  if (a >= basis_.size()) throw validation_error("basis index out of range");
  return basis_[a];
}

const std::vector<complexd>& Alphabet::letter_coords(std::size_t i) const {
  if (i >= coords_.size()) throw validation_error("letter index out of range");
  return coords_[i];
}

DenseMatrix gram_matrix(const Alphabet& alphabet) {
  const std::size_t q = alphabet.size();
  DenseMatrix g(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) g(i, j) = dot(alphabet.letter(i), alphabet.letter(j));
  return g;
}

std::vector<complexd> expand_letter(const Alphabet& alphabet, std::size_t letter_index) {
  return alphabet.letter_coords(letter_index);
}

LetterMatrix letter_matrix(const Alphabet& alphabet, std::span<const double> priors) {
  if (priors.size() != alphabet.size())
    throw validation_error("one prior per letter required");
  double sum = 0.0;
  for (double p : priors) {
    if (p < 0.0) throw validation_error("priors must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::prob)
    throw validation_error("priors must sum to 1");

  const std::size_t k = alphabet.rank();
  DenseMatrix rho(k, k);
  for (std::size_t x = 0; x < alphabet.size(); ++x) {
    const auto& c = alphabet.letter_coords(x);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) rho(i, j) += priors[x] * c[i] * std::conj(c[j]);
  }
  return LetterMatrix(std::move(rho));
}

std::vector<LetterEigenpair> letter_spectral(const LetterMatrix& rho) {
  const EigenSystem sys = hermitian_eigensystem(rho.matrix());
  std::vector<LetterEigenpair> out;
  out.reserve(sys.values.size());
  for (std::size_t k = 0; k < sys.values.size(); ++k) {
    LetterEigenpair pair;
    pair.probability = sys.values[k];
    pair.vector.resize(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) pair.vector[i] = sys.vectors(i, k);
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace qmsg
