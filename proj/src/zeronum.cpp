#include "sturm/zeronum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sturm/error.hpp"

namespace sturm {

const char* to_string(Sign sign) noexcept { return sign == Sign::plus ? "+" : "-"; }

namespace {

int sign_of(int x) { return (x > 0) - (x < 0); }

// (-1)^{j+1} for a label whose Morse index is `morse`; labels and Morse
// indices have opposite parity.
int alternation_from_morse(int morse) { return morse % 2 == 0 ? 1 : -1; }

}  // namespace

std::string ZeroMatrix::to_text() const {
  std::ostringstream out;
  for (Label j = 1; j <= n_; ++j) {
    for (Label k = 1; k <= n_; ++k) {
      if (k > 1) out << ' ';
      out << (*this)(j, k);
    }
    out << '\n';
  }
  return out.str();
}

ZeroMatrix z_matrix(const Permutation& p) {
  require_sturm(p);
  const int n = p.size();
  const MorseVector morse = morse_indices(p);
  ZeroMatrix z(n);
  // Row 1 and column n stay zero; rows are independent of each other.
  for (Label j = 2; j < n; ++j) {
    const Position at = p.position_of(j);
    int value = 0;
    for (Label k = n - 1; k > j; --k) {
      const int alternation = (k % 2 == 0) ? 1 : -1;  // (-1)^k
      value += alternation * (sign_of(p.position_of(k + 1) - at) - sign_of(p.position_of(k) - at)) / 2;
      z(j, k) = value;
    }
  }
  for (Label j = 1; j <= n; ++j) {
    z(j, j) = morse[j];
    for (Label k = j + 1; k <= n; ++k) z(k, j) = z(j, k);
  }
  return z;
}

int z_pair_nsl(const Permutation& p, Label j, Label k) {
  require_sturm(p);
  if (j < 1 || j > p.size() || k < 1 || k > p.size()) throw Error(Errc::out_of_range, "label out of range");
  if (j == k) throw Error(Errc::invalid_argument, "zero number of an equilibrium with itself is undefined");
  const Label lo = std::min(j, k);
  const Label hi = std::max(j, k);
  const MorseVector morse = morse_indices(p);
  const int base = quadrant_parity(p, lo) == Parity::odd ? morse[lo] : morse[lo] - 1;
  return base + crossing_number(p, lo, hi, lo);
}

SignedZero signed_z(const ZeroMatrix& z, Label base, Label w) {
  if (base < 1 || base > z.size() || w < 1 || w > z.size()) throw Error(Errc::out_of_range, "label out of range");
  if (base == w) throw Error(Errc::invalid_argument, "signed zero number needs two distinct equilibria");
  return {z(base, w), w > base ? Sign::plus : Sign::minus};
}

SignedZero signed_z(const Permutation& p, Label base, Label w) { return signed_z(z_matrix(p), base, w); }

MeanderWindow MeanderWindow::from_axis_sequence(std::vector<int> labels_by_rank, int anchor_morse) {
  const int length = static_cast<int>(labels_by_rank.size());
  if (length < 2) throw Error(Errc::invalid_argument, "window needs at least two labels");
  if (anchor_morse < 0) throw Error(Errc::invalid_argument, "anchor Morse index must be non-negative");
  std::vector<int> rank(labels_by_rank.size(), 0);
  for (int r = 1; r <= length; ++r) {
    const int offset = labels_by_rank[static_cast<std::size_t>(r - 1)];
    if (offset < 1 || offset > length || rank[static_cast<std::size_t>(offset - 1)] != 0) {
      throw Error(Errc::invalid_argument,
                  "window order entry " + std::to_string(r) + " breaks the bijection of {1.." + std::to_string(length) + "}");
    }
    rank[static_cast<std::size_t>(offset - 1)] = r;
  }
  return MeanderWindow(std::move(rank), anchor_morse);
}

MeanderWindow MeanderWindow::from_permutation(const Permutation& p, Label first, int length) {
  if (length < 2 || first < 1 || first + length - 1 > p.size()) {
    throw Error(Errc::out_of_range, "window [" + std::to_string(first) + ", " + std::to_string(first + length - 1) +
                                        "] does not fit in 1.." + std::to_string(p.size()));
  }
  std::vector<int> offsets(static_cast<std::size_t>(length));
  std::iota(offsets.begin(), offsets.end(), 1);
  std::ranges::sort(offsets, {}, [&](int t) { return p.position_of(first + t - 1); });
  return from_axis_sequence(std::move(offsets), morse_indices(p)[first]);
}

std::vector<int> window_morse(const MeanderWindow& win) {
  const int length = win.length();
  std::vector<int> m(static_cast<std::size_t>(length));
  m[0] = win.anchor_morse();
  for (int t = 1; t < length; ++t) {
    const int prev = m[static_cast<std::size_t>(t - 1)];
    const int next = prev + alternation_from_morse(prev) * sign_of(win.rank_of(t + 1) - win.rank_of(t));
    if (next < 0) {
      throw Error(Errc::inconsistent_window,
                  "Morse recursion turns negative at window offset " + std::to_string(t + 1));
    }
    m[static_cast<std::size_t>(t)] = next;
  }
  return m;
}

ZeroMatrix window_z(const MeanderWindow& win) {
  const std::vector<int> m = window_morse(win);
  const int length = win.length();
  auto morse = [&](int t) { return m[static_cast<std::size_t>(t - 1)]; };
  ZeroMatrix z(length);
  for (int a = 1; a <= length; ++a) {
    z(a, a) = morse(a);
    if (a == length) break;
    const bool odd_quadrant = morse(a + 1) == morse(a) + 1;
    const int at = win.rank_of(a);
    int crossings = 0;
    for (int b = a + 1; b <= length; ++b) {
      // Steps leaving a itself touch the line at a and are not counted.
      if (b - 1 > a) {
        const int t = b - 1;
        crossings += alternation_from_morse(morse(t)) *
                     (sign_of(win.rank_of(t + 1) - at) - sign_of(win.rank_of(t) - at)) / 2;
      }
      const int value = morse(a) - (odd_quadrant ? 0 : 1) + crossings;
      if (value < 0) {
        throw Error(Errc::inconsistent_window, "negative zero number between window offsets " + std::to_string(a) +
                                                   " and " + std::to_string(b));
      }
      z(a, b) = value;
      z(b, a) = value;
    }
  }
  return z;
}

}  // namespace sturm
