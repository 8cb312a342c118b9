#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace braidcode {

/// One signed Artin generator: sigma_i (sign +1) or its inverse (sign -1).
class Letter {
 public:
  constexpr Letter() = default;
  /// `signed_index` is +i for sigma_i and -i for sigma_i^-1; must be nonzero.
  constexpr explicit Letter(int signed_index) : value_(signed_index) {}
  constexpr Letter(int index, int sign) : value_(sign < 0 ? -index : index) {}

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_index() const { return value_; }
  constexpr Letter inverse() const { return Letter(-value_); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int value_ = 1;
};

/// Pure braid generator l_ij linking strands i < j.
struct PureGeneratorId {
  int i = 1;
  int j = 2;

  friend constexpr bool operator==(PureGeneratorId, PureGeneratorId) = default;
};

/// Image of a braid in the symmetric group. `image[k]` is the 0-based end
/// position of the strand that starts at position k.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int size);
  bool is_identity() const;
  /// Apply `*this` first, then `next`.
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// A word in the Artin generators of the braid group on `strands()` strands.
/// Immutable value; the empty word is the identity. Letters are read left to
/// right, the leftmost letter being applied first.
class BraidWord {
 public:
  /// Identity on `strands` strands.
  explicit BraidWord(int strands);
  /// Throws ValidationError if strands < 2 or any letter index exceeds
  /// strands - 1.
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Signed indices, e.g. {2, 2, 1, -2}.
  std::vector<int> signed_indices() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Validated construction from signed indices. The error message names the
/// offending position.
BraidWord make_word(int strands, std::span<const int> signed_indices);
inline BraidWord make_word(int strands, std::initializer_list<int> signed_indices) {
  return make_word(strands, std::span<const int>(signed_indices.begin(), signed_indices.size()));
}

/// Letters of `a` followed by letters of `b`; no reduction.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Reversed word with every sign flipped.
BraidWord invert(const BraidWord& w);

/// Cancels adjacent pairs sigma_i^e sigma_i^-e until none remain.
BraidWord free_reduce(const BraidWord& w);

/// sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1,
/// of length exactly 2(j - i).
BraidWord pure_generator(PureGeneratorId id, int strands);

/// Sum of letter signs (image under abelianization).
std::int64_t exponent_sum(const BraidWord& w);

/// Image in the symmetric group, sigma_i acting as the swap of positions
/// i and i+1.
Permutation permutation(const BraidWord& w);

}  // namespace braidcode
