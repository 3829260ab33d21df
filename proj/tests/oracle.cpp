#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

std::vector<Word> enumerate_words(std::size_t k, std::size_t n) {
  // Plain breadth-first generation: length 0, then all length-1 words, ...
  std::vector<Word> words;
  words.push_back(Word{});
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (unsigned d = 0; d < k; ++d) {
        Word w = words[i];
        w.push_back(d);
        words.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return words;
}

std::size_t find_word(const std::vector<Word>& words, const Word& w) {
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i] == w) return i;
  throw std::runtime_error("word not found in enumeration");
}

Vec dense_state(const qmsg::ManyLetterState& state, const std::vector<Word>& words) {
  Vec v(words.size(), cplx{0.0, 0.0});
  for (const auto& [idx, amp] : state.amplitudes()) {
    const qmsg::BasisString s = state.shape().string_at(idx);
    Word w(s.digits.begin(), s.digits.end());
    v[find_word(words, w)] = amp;
  }
  return v;
}

Mat from_library(const qmsg::DenseMatrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

Mat zero(std::size_t n) { return Mat(n, Vec(n, cplx{0.0, 0.0})); }

void add_outer(Mat& acc, double weight, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      acc[i][j] += weight * v[i] * std::conj(v[j]);
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat out = zero(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Mat subtract(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] -= b[i][j];
  return out;
}

cplx trace(const Mat& m) {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

double frobenius(const Mat& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (const cplx& v : row) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const Mat& m) {
  double worst = 0.0;
  for (const auto& row : m)
    for (const cplx& v : row) worst = std::max(worst, std::abs(v));
  return worst;
}

double expected_length(const Vec& v, const std::vector<Word>& words) {
  double s = 0.0;
  for (std::size_t i = 0; i < words.size(); ++i)
    s += std::norm(v[i]) * static_cast<double>(words[i].size());
  return s;
}

double expected_length(const Mat& m, const std::vector<Word>& words) {
  double s = 0.0;
  for (std::size_t i = 0; i < words.size(); ++i)
    s += m[i][i].real() * static_cast<double>(words[i].size());
  return s;
}

std::vector<double> length_distribution(const Vec& v, const std::vector<Word>& words,
                                        std::size_t max_len) {
  std::vector<double> dist(max_len + 1, 0.0);
  for (std::size_t i = 0; i < words.size(); ++i) dist[words[i].size()] += std::norm(v[i]);
  return dist;
}

std::vector<double> length_distribution(const Mat& m, const std::vector<Word>& words,
                                        std::size_t max_len) {
  std::vector<double> dist(max_len + 1, 0.0);
  for (std::size_t i = 0; i < words.size(); ++i) dist[words[i].size()] += m[i][i].real();
  return dist;
}

Mat dephase(const Mat& m, const std::vector<Word>& words) {
  Mat out = zero(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (words[i].size() == words[j].size()) out[i][j] = m[i][j];
  return out;
}

std::size_t rank_by_elimination(Mat m, double tol) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  std::size_t col = 0;
  while (rank < rows && col < cols) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) <= tol) {
      ++col;
      continue;
    }
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const cplx f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
    ++col;
  }
  return rank;
}

std::pair<double, double> eig2x2(const Mat& h) {
  const double a = h[0][0].real();
  const double d = h[1][1].real();
  const double off = std::abs(h[0][1]);
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  return {mean + radius, mean - radius};
}

}  // namespace oracle
