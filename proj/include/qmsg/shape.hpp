#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmsg/core.hpp"

namespace qmsg {

// A word over the basis alphabet; digits are big-endian, each in [0, K).
// The length-0 word is the empty message.
struct BasisString {
  std::vector<std::uint32_t> digits;

  std::size_t length() const { return digits.size(); }
  friend bool operator==(const BasisString&, const BasisString&) = default;
};

// "(0,1)" for digits {0,1}; "()" for the empty message.
std::string to_string(const BasisString& s);

// Shape of a truncated many-letter space: K basis letters, words of length
// up to N, total dimension D = sum of K^n over n = 0..N.
//
// Basis words are enumerated by ascending length, then ascending big-endian
// mixed-radix value; index_of / string_at realize that order as a bijection
// between words and [0, D).
class SpaceShape {
 public:
  SpaceShape(std::size_t letter_dim, std::size_t max_length);

  std::size_t letter_dim() const { return k_; }
  std::size_t max_length() const { return n_; }
  std::uint64_t dimension() const { return offsets_.back(); }

  std::uint64_t sector_dim(std::size_t n) const;     // K^n
  std::uint64_t sector_offset(std::size_t n) const;  // index of the first length-n word

  std::uint64_t index_of(const BasisString& s) const;
  BasisString string_at(std::uint64_t index) const;
  std::size_t length_at(std::uint64_t index) const;  // sector holding a global index

  friend bool operator==(const SpaceShape&, const SpaceShape&) = default;

 private:
  std::size_t k_ = 1;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> offsets_;  // offsets_[m] = sum of K^j for j < m, m = 0..N+1
};

}  // namespace qmsg
