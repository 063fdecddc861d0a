#include "sturm/meander.hpp"

#include <algorithm>

#include "sturm/error.hpp"

namespace sturm {

const char* to_string(Side side) noexcept { return side == Side::above ? "above" : "below"; }
const char* to_string(Parity parity) noexcept { return parity == Parity::odd ? "odd" : "even"; }
const char* to_string(Direction direction) noexcept { return direction == Direction::up ? "up" : "down"; }

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

Side side_of_step(Label j) { return j % 2 == 1 ? Side::above : Side::below; }

void require_label(const Permutation& p, Label j, const char* what) {
  if (j < 1 || j > p.size()) {
    throw Error(Errc::out_of_range,
                std::string(what) + " " + std::to_string(j) + " outside 1.." + std::to_string(p.size()));
  }
}

}  // namespace

MeanderDiagram build_diagram(const Permutation& p) {
  MeanderDiagram d;
  d.n = p.size();
  d.arcs.reserve(static_cast<std::size_t>(d.n - 1));
  for (Label j = 1; j < d.n; ++j) d.arcs.push_back({p.position_of(j), p.position_of(j + 1), side_of_step(j), j});
  return d;
}

bool is_meander(const Permutation& p) {
  const int n = p.size();
  // partner[side][pos]: other endpoint of the arc on that side ending at pos.
  std::vector<int> partner[2] = {std::vector<int>(static_cast<std::size_t>(n + 1), 0),
                                 std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
  for (Label j = 1; j < n; ++j) {
    auto& side = partner[j % 2];
    const Position a = p.position_of(j);
    const Position b = p.position_of(j + 1);
    side[static_cast<std::size_t>(a)] = b;
    side[static_cast<std::size_t>(b)] = a;
  }
  for (auto& side : partner) {
    std::vector<int> open;
    for (Position x = 1; x <= n; ++x) {
      const int other = side[static_cast<std::size_t>(x)];
      if (other == 0) continue;
      if (other > x) {
        open.push_back(x);
      } else {
        if (open.empty() || open.back() != other) return false;
        open.pop_back();
      }
    }
  }
  return true;
}

bool is_sturm(const Permutation& p) { return is_dissipative(p) && is_morse(p) && is_meander(p); }

void require_sturm(const Permutation& p) {
  if (!is_sturm(p)) throw Error(Errc::not_sturm, "permutation " + format_permutation(p) + " is not Sturm");
}

int crossing_number(const Permutation& p, Label j, Label k, Label l) {
  require_label(p, j, "label");
  require_label(p, k, "label");
  require_label(p, l, "label");
  if (j == k) return 0;
  if (j > k) return -crossing_number(p, k, j, l);
  const Position at = p.position_of(l);
  // Twice the sum keeps the half-integer steps exact.
  int twice = 0;
  for (Label m = j; m < k; ++m) {
    if (m == l || m + 1 == l) continue;
    const int alternation = (m % 2 == 1) ? 1 : -1;
    twice += alternation * (sign(p.position_of(m + 1) - at) - sign(p.position_of(m) - at));
  }
  return twice / 2;
}

Parity quadrant_parity(const Permutation& p, Label j) {
  require_label(p, j, "label");
  if (j == p.size()) throw Error(Errc::out_of_range, "label " + std::to_string(j) + " has no outgoing arc");
  const MorseVector m = morse_indices(p);
  return m[j + 1] == m[j] + 1 ? Parity::odd : Parity::even;
}

Direction crossing_direction(const Permutation& p, Label j) {
  require_label(p, j, "label");
  return morse_indices(p)[j] % 2 == 0 ? Direction::up : Direction::down;
}

}  // namespace sturm
