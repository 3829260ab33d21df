#pragma once

#include <map>
#include <span>
#include <utility>

#include "qmsg/alphabet.hpp"
#include "qmsg/shape.hpp"

namespace qmsg {

// Element of the truncated many-letter space: sparse complex amplitudes over
// basis words of mixed lengths, keyed by global index (so iteration order is
// the canonical enumeration: ascending length, then mixed-radix value).
//
// Amplitudes with |amp| <= tol::amp are dropped on every construction.
// States are normalized unless explicitly flagged as intermediates.
class ManyLetterState {
 public:
  using AmplitudeMap = std::map<std::uint64_t, complexd>;

  static ManyLetterState normalized(SpaceShape shape, AmplitudeMap amplitudes);
  static ManyLetterState unnormalized(SpaceShape shape, AmplitudeMap amplitudes);
  static ManyLetterState empty_message(SpaceShape shape);

  const SpaceShape& shape() const { return shape_; }
  const AmplitudeMap& amplitudes() const { return amps_; }
  bool is_normalized() const { return normalized_; }

  double norm_squared() const;
  complexd amplitude(std::uint64_t index) const;
  complexd amplitude(const BasisString& s) const;

  // Definite sector length if the support lives in one sector.
  bool has_definite_length() const;
  std::size_t definite_length() const;

 private:
  ManyLetterState(SpaceShape shape, AmplitudeMap amplitudes, bool normalized);

  SpaceShape shape_;
  AmplitudeMap amps_;
  bool normalized_ = true;
};

// |x_1 ... x_n> for letters of an alphabet, expanded in basis-alphabet
// coordinates and embedded in the length-n sector of a space with the given
// maximum length.
ManyLetterState product_message(const Alphabet& alphabet,
                                std::span<const std::size_t> letter_indices,
                                std::size_t max_length);

// Pointwise linear combination; all terms must share one shape.
ManyLetterState superpose(
    std::span<const std::pair<complexd, ManyLetterState>> terms, bool normalize);

// Direct-sum scalar product. States supported on disjoint lengths give an
// exact zero (their sparse supports never overlap).
complexd inner_product(const ManyLetterState& psi, const ManyLetterState& phi);

complexd wave_component(const ManyLetterState& phi, const BasisString& s);

struct TruncationResult {
  ManyLetterState state;
  double discarded_weight;
};

// Projects onto words of length <= new_max_length and renormalizes.
TruncationResult truncate(const ManyLetterState& phi, std::size_t new_max_length);

}  // namespace qmsg
