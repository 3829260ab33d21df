#include "qmsg/shape.hpp"

#include <algorithm>

namespace qmsg {

namespace {
// Keeps D and every sector dimension well inside uint64 range.
constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 62;
}  // namespace

std::string to_string(const BasisString& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.digits.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.digits[i]);
  }
  out += ')';
  return out;
}

SpaceShape::SpaceShape(std::size_t letter_dim, std::size_t max_length)
    : k_(letter_dim), n_(max_length) {
  if (k_ == 0) throw validation_error("letter dimension must be at least 1");
  offsets_.reserve(n_ + 2);
  offsets_.push_back(0);
  std::uint64_t sector = 1;
  std::uint64_t total = 0;
  for (std::size_t m = 0; m <= n_; ++m) {
    if (total > kIndexLimit - sector)
      throw cap_error("space dimension overflows the index range");
    total += sector;
    offsets_.push_back(total);
    if (m < n_) {
      if (sector > kIndexLimit / k_)
        throw cap_error("space dimension overflows the index range");
      sector *= k_;
    }
  }
}

std::uint64_t SpaceShape::sector_dim(std::size_t n) const {
  if (n > n_) throw validation_error("sector index exceeds the maximum length");
  return offsets_[n + 1] - offsets_[n];
}

std::uint64_t SpaceShape::sector_offset(std::size_t n) const {
  if (n > n_) throw validation_error("sector index exceeds the maximum length");
  return offsets_[n];
}

std::uint64_t SpaceShape::index_of(const BasisString& s) const {
  if (s.length() > n_)
    throw validation_error("basis string longer than the maximum length");
  std::uint64_t value = 0;
  for (std::uint32_t d : s.digits) {
    if (d >= k_) throw validation_error("basis-string digit out of range");
    value = value * k_ + d;
  }
  return offsets_[s.length()] + value;
}

BasisString SpaceShape::string_at(std::uint64_t index) const {
  const std::size_t n = length_at(index);
  std::uint64_t value = index - offsets_[n];
  BasisString s;
  s.digits.resize(n);
  for (std::size_t j = n; j-- > 0;) {
    s.digits[j] = static_cast<std::uint32_t>(value % k_);
    value /= k_;
  }
  return s;
}

std::size_t SpaceShape::length_at(std::uint64_t index) const {
  if (index >= dimension()) throw validation_error("global index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

}  // namespace qmsg
