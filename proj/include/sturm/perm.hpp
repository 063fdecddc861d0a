#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sturm {

// Meander labels (the h0 order, along the curve) and axis positions (the h1
// order, along the horizontal line) are both 1-based.
using Label = int;
using Position = int;

enum class IndexBase { zero, one };

// One-line permutation of {1..n}: map(k) is the meander label found at axis
// position k, position_of(j) its inverse. Construction guarantees a bijection
// of odd size; Sturm-ness is checked separately.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(map_.size()); }

  Label label_at(Position k) const { return map_[static_cast<std::size_t>(k - 1)]; }
  Position position_of(Label j) const { return inv_[static_cast<std::size_t>(j - 1)]; }

  std::span<const int> one_line() const noexcept { return map_; }
  std::span<const int> inverse_line() const noexcept { return inv_; }

  Permutation inverse() const { return Permutation(inv_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.map_ <=> b.map_; }

 private:
  std::vector<int> map_;
  std::vector<int> inv_;
};

// Whitespace- or comma-separated integers. With IndexBase::zero every value is
// shifted by +1 before validation. Throws ParseError naming the token.
Permutation parse_permutation(std::string_view text, IndexBase base = IndexBase::one);

std::string format_permutation(const Permutation& p, IndexBase base = IndexBase::one);

// Morse numbers indexed by meander label.
class MorseVector {
 public:
  MorseVector() = default;
  explicit MorseVector(std::vector<int> values) : values_(std::move(values)) {}

  int operator[](Label j) const { return values_[static_cast<std::size_t>(j - 1)]; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const MorseVector&, const MorseVector&) = default;

 private:
  std::vector<int> values_;
};

bool is_dissipative(const Permutation& p);

// i_1 = 0, i_{j+1} = i_j + (-1)^{j+1} sign(pos(j+1) - pos(j)). Entries may be
// negative; is_morse() decides.
MorseVector morse_indices(const Permutation& p);

bool is_morse(const Permutation& p);

// Trivial equivalences. tau (x -> 1-x) swaps the two boundary orders, so it
// acts as inversion; kappa (u -> -u) reverses both orders, i.e. conjugation
// by j -> n+1-j. Both throw Errc::not_sturm on non-Sturm input.
Permutation apply_tau(const Permutation& p);
Permutation apply_kappa(const Permutation& p);

struct KleinOrbit {
  // identity, tau, kappa, tau*kappa in that order.
  std::array<Permutation, 4> members;
  // Number of pairwise distinct members (1, 2 or 4).
  int distinct;

  bool degenerate() const noexcept { return distinct < 4; }
};

KleinOrbit klein_orbit(const Permutation& p);

}  // namespace sturm
