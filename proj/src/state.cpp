#include "qmsg/state.hpp"

#include <cmath>

namespace qmsg {

namespace {
// Enumeration guard for expanding product messages over dense coordinates.
constexpr std::uint64_t kProductTermCap = 1u << 20;
}  // namespace

ManyLetterState::ManyLetterState(SpaceShape shape, AmplitudeMap amplitudes,
                                 bool normalized)
    : shape_(std::move(shape)), amps_(std::move(amplitudes)), normalized_(normalized) {
  const std::uint64_t dim = shape_.dimension();
  for (auto it = amps_.begin(); it != amps_.end();) {
    if (it->first >= dim) throw validation_error("amplitude index outside the space");
    if (std::abs(it->second) <= tol::amp)
      it = amps_.erase(it);
    else
      ++it;
  }
  if (normalized_ && std::abs(norm_squared() - 1.0) > tol::norm)
    throw validation_error("state is not normalized");
}

ManyLetterState ManyLetterState::normalized(SpaceShape shape, AmplitudeMap amplitudes) {
  return ManyLetterState(std::move(shape), std::move(amplitudes), true);
}

ManyLetterState ManyLetterState::unnormalized(SpaceShape shape, AmplitudeMap amplitudes) {
  return ManyLetterState(std::move(shape), std::move(amplitudes), false);
}

ManyLetterState ManyLetterState::empty_message(SpaceShape shape) {
  AmplitudeMap amps;
  amps[0] = complexd{1.0, 0.0};
  return ManyLetterState(std::move(shape), std::move(amps), true);
}

double ManyLetterState::norm_squared() const {
  double s = 0.0;
  for (const auto& [idx, amp] : amps_) s += std::norm(amp);
  return s;
}

complexd ManyLetterState::amplitude(std::uint64_t index) const {
  if (index >= shape_.dimension()) throw validation_error("global index out of range");
  const auto it = amps_.find(index);
  return it == amps_.end() ? complexd{0.0, 0.0} : it->second;
}

complexd ManyLetterState::amplitude(const BasisString& s) const {
  return amplitude(shape_.index_of(s));
}

bool ManyLetterState::has_definite_length() const {
  if (amps_.empty()) return false;
  const std::size_t n = shape_.length_at(amps_.begin()->first);
  return shape_.length_at(amps_.rbegin()->first) == n;
}

std::size_t ManyLetterState::definite_length() const {
  if (!has_definite_length())
    throw validation_error("state has no definite length");
  return shape_.length_at(amps_.begin()->first);
}

ManyLetterState product_message(const Alphabet& alphabet,
                                std::span<const std::size_t> letter_indices,
                                std::size_t max_length) {
  const std::size_t n = letter_indices.size();
  if (n > max_length)
    throw validation_error("product message longer than the maximum length");
  const SpaceShape shape(alphabet.rank(), max_length);

  std::vector<const std::vector<complexd>*> coords;
  coords.reserve(n);
  for (std::size_t i : letter_indices) coords.push_back(&alphabet.letter_coords(i));

  if (shape.sector_dim(n) > kProductTermCap)
    throw cap_error("product message expansion too large");

  // Odometer over all digit words of length n; amplitude is the product of
  // per-position basis coordinates.
  ManyLetterState::AmplitudeMap amps;
  std::vector<std::uint32_t> digits(n, 0);
  const std::size_t k = shape.letter_dim();
  while (true) {
    complexd amp{1.0, 0.0};
    for (std::size_t pos = 0; pos < n; ++pos) amp *= (*coords[pos])[digits[pos]];
    if (std::abs(amp) > tol::amp) amps[shape.index_of(BasisString{digits})] = amp;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < k) break;
      digits[pos] = 0;
      if (pos == 0) return ManyLetterState::normalized(shape, std::move(amps));
    }
    if (n == 0) break;
  }
  return ManyLetterState::normalized(shape, std::move(amps));
}

ManyLetterState superpose(
    std::span<const std::pair<complexd, ManyLetterState>> terms, bool normalize) {
  if (terms.empty()) throw validation_error("superposition needs at least one term");
  const SpaceShape& shape = terms[0].second.shape();
  for (const auto& [c, state] : terms)
    if (!(state.shape() == shape))
      throw validation_error("superposition terms must share one space shape");

  ManyLetterState::AmplitudeMap amps;
  for (const auto& [c, state] : terms)
    for (const auto& [idx, amp] : state.amplitudes()) amps[idx] += c * amp;

  if (!normalize) return ManyLetterState::unnormalized(shape, std::move(amps));

  double nsq = 0.0;
  for (const auto& [idx, amp] : amps) nsq += std::norm(amp);
  const double n = std::sqrt(nsq);
  if (n <= tol::amp) throw validation_error("superposition has zero norm");
  for (auto& [idx, amp] : amps) amp /= n;
  return ManyLetterState::normalized(shape, std::move(amps));
}

complexd inner_product(const ManyLetterState& psi, const ManyLetterState& phi) {
  if (!(psi.shape() == phi.shape()))
    throw validation_error("inner product needs matching space shapes");
  const auto& a = psi.amplitudes();
  const auto& b = phi.amplitudes();
  // Walk the smaller support.
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  complexd s{0.0, 0.0};
  for (const auto& [idx, amp] : small) {
    const auto it = large.find(idx);
    if (it == large.end()) continue;
    const complexd pa = (&small == &a) ? amp : it->second;
    const complexd pb = (&small == &a) ? it->second : amp;
    s += std::conj(pa) * pb;
  }
  return s;
}

complexd wave_component(const ManyLetterState& phi, const BasisString& s) {
  return phi.amplitude(s);
}

TruncationResult truncate(const ManyLetterState& phi, std::size_t new_max_length) {
  const SpaceShape shape(phi.shape().letter_dim(), new_max_length);
  const std::uint64_t dim = shape.dimension();
  ManyLetterState::AmplitudeMap kept;
  double discarded = 0.0;
  for (const auto& [idx, amp] : phi.amplitudes()) {
    // Global indices do not depend on the maximum length, only on K.
    if (idx < dim)
      kept[idx] = amp;
    else
      discarded += std::norm(amp);
  }
  double kept_sq = 0.0;
  for (const auto& [idx, amp] : kept) kept_sq += std::norm(amp);
  if (kept_sq <= tol::amp * tol::amp)
    throw validation_error("truncation discarded all weight");
  const double n = std::sqrt(kept_sq);
  for (auto& [idx, amp] : kept) amp /= n;
  return TruncationResult{ManyLetterState::normalized(shape, std::move(kept)),
                          discarded};
}

}  // namespace qmsg
