#pragma once

#include <span>
#include <string>
#include <vector>

#include "sturm/meander.hpp"
#include "sturm/perm.hpp"

namespace sturm {

enum class Sign { minus, plus };

const char* to_string(Sign sign) noexcept;

// Symmetric zero-number table indexed by labels. The diagonal stores Morse
// indices for display; it is never read as a zero number.
class ZeroMatrix {
 public:
  ZeroMatrix() = default;
  explicit ZeroMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int size() const noexcept { return n_; }

  int operator()(Label j, Label k) const { return data_[index(j, k)]; }
  int& operator()(Label j, Label k) { return data_[index(j, k)]; }

  std::span<const int> row_major() const noexcept { return data_; }

  // Rows of space-separated integers, newline-terminated.
  std::string to_text() const;

  friend bool operator==(const ZeroMatrix&, const ZeroMatrix&) = default;

 private:
  std::size_t index(Label j, Label k) const {
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k - 1);
  }

  int n_ = 0;
  std::vector<int> data_;
};

// Boundary rows are zero; every other row j is filled from column n down to
// j+1 by the descending crossing recursion. Throws Errc::not_sturm.
ZeroMatrix z_matrix(const Permutation& p);

// Zero number of v_k - v_j from Morse index, quadrant parity and crossing
// number at j alone. Evaluated on (min, max). Throws for j == k.
int z_pair_nsl(const Permutation& p, Label j, Label k);

struct SignedZero {
  int z;
  Sign sign;

  friend bool operator==(const SignedZero&, const SignedZero&) = default;
};

// z(w - base) with the sign of the difference at x = 0.
SignedZero signed_z(const ZeroMatrix& z, Label base, Label w);
SignedZero signed_z(const Permutation& p, Label base, Label w);

// A contiguous run of L meander labels known only through the relative axis
// order of its members and the Morse index of its first label.
class MeanderWindow {
 public:
  // `labels_by_rank[r]` is the window offset (1..L) found at the r-th
  // leftmost axis position among the window members.
  static MeanderWindow from_axis_sequence(std::vector<int> labels_by_rank, int anchor_morse);

  // Window of `length` labels starting at `first` in a full permutation,
  // anchored at the true Morse index of `first`.
  static MeanderWindow from_permutation(const Permutation& p, Label first, int length);

  int length() const noexcept { return static_cast<int>(rank_.size()); }
  int anchor_morse() const noexcept { return anchor_morse_; }
  // Rank (1..L) of window offset t (1..L) among the window's axis positions.
  int rank_of(int offset) const { return rank_[static_cast<std::size_t>(offset - 1)]; }
  Direction anchor_direction() const noexcept { return anchor_morse_ % 2 == 0 ? Direction::up : Direction::down; }

 private:
  MeanderWindow(std::vector<int> rank, int anchor_morse) : rank_(std::move(rank)), anchor_morse_(anchor_morse) {}

  std::vector<int> rank_;
  int anchor_morse_;
};

// Morse indices of the window labels. Throws Errc::inconsistent_window when
// the recursion goes negative.
std::vector<int> window_morse(const MeanderWindow& win);

// Zero numbers between all window labels, Morse indices on the diagonal.
ZeroMatrix window_z(const MeanderWindow& win);

}  // namespace sturm
