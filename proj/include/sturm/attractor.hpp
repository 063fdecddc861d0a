#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sturm/perm.hpp"
#include "sturm/zeronum.hpp"

namespace sturm {

enum class Boundary { x0 = 0, x1 = 1 };

inline Boundary opposite(Boundary b) noexcept { return b == Boundary::x0 ? Boundary::x1 : Boundary::x0; }
inline Sign opposite(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

const char* to_string(Boundary b) noexcept;

using Connection = std::pair<Label, Label>;

// Everything derived from a Sturm permutation that the connection and minimax
// queries need. Immutable once built.
class AttractorModel {
 public:
  explicit AttractorModel(Permutation p);

  const Permutation& permutation() const noexcept { return p_; }
  const MorseVector& morse() const noexcept { return morse_; }
  const ZeroMatrix& z() const noexcept { return z_; }
  int size() const noexcept { return p_.size(); }

  // Sorted lexicographically by (source, target).
  const std::vector<Connection>& connections() const noexcept { return connections_; }

  bool connects(Label source, Label target) const;

  // Transitive closure of connects(); source never reaches itself.
  bool reachable(Label source, Label target) const;

 private:
  Permutation p_;
  MorseVector morse_;
  ZeroMatrix z_;
  std::vector<Connection> connections_;
  std::vector<char> edge_;
};

// Throws Errc::not_sturm.
AttractorModel build_model(const Permutation& p);

struct ZAdjacency {
  bool adjacent;
  // Smallest label w strictly between j and k with
  // z(w - v_j) = z(v_k - w) = z(v_k - v_j), if any.
  std::optional<Label> blocker;
};

ZAdjacency is_z_adjacent(const AttractorModel& model, Label j, Label k);

// Morse drop plus z-adjacency.
bool connects(const AttractorModel& model, Label j, Label k);

struct GraphNode {
  Label label;
  int morse;
};

struct ConnectionGraph {
  std::vector<GraphNode> nodes;
  std::vector<Connection> edges;
};

ConnectionGraph connection_graph(const AttractorModel& model);

// w^iota_sign: predecessor/successor of O in the boundary order at x = iota.
struct NeighborQuartet {
  std::optional<Label> w0_minus;
  std::optional<Label> w0_plus;
  std::optional<Label> w1_minus;
  std::optional<Label> w1_plus;

  std::optional<Label> get(Boundary b, Sign s) const;
};

NeighborQuartet boundary_neighbors(const AttractorModel& model, Label O);

// E^k_sign(O): every w with z(w - O) = k_sign that O connects to. Sorted by
// label. Throws Errc::invalid_argument when O is stable or k is out of
// [0, morse(O)).
std::vector<Label> target_set(const AttractorModel& model, Label O, int k, Sign sign);

// Closest / most distant members of a target set, measured by label distance
// at x = 0 and by axis-position distance at x = 1.
struct MinimaxEquilibria {
  Label closest_x0;
  Label closest_x1;
  Label most_distant_x0;
  Label most_distant_x1;

  Label closest(Boundary b) const noexcept { return b == Boundary::x0 ? closest_x0 : closest_x1; }
  Label most_distant(Boundary b) const noexcept { return b == Boundary::x0 ? most_distant_x0 : most_distant_x1; }
};

// Throws Errc::invalid_argument when the target set is empty.
MinimaxEquilibria minimax(const AttractorModel& model, Label O, int k, Sign sign);

// Sign of the target set whose closest-at-iota member a neighbour w^iota_side
// with Morse index n-1 coincides with.
Sign identified_sign(Boundary iota, Sign neighbor_side, int n) noexcept;

struct NeighborIdentification {
  Boundary boundary;
  Sign side;
  Label neighbor;
  int neighbor_morse;
  // False when the neighbour has Morse index n+1.
  bool applicable;
  // Filled only when applicable.
  Sign target_sign = Sign::plus;
  std::optional<Label> predicted;
  bool holds = false;
};

// One entry per existing neighbour, in the order w0-, w0+, w1-, w1+.
std::vector<NeighborIdentification> identify_neighbors(const AttractorModel& model, Label O);

struct MinimaxCase {
  Boundary boundary;
  Sign sign;
  Label neighbor;
  Label closest;                 // closest at `boundary`
  Label most_distant_opposite;   // most distant at the opposite boundary
  bool neighbor_identified;      // neighbor == closest
  bool minimax_holds;            // closest == most_distant_opposite
  // When minimax fails: the zero numbers z(u - O), z(o - O), z(o - u) for
  // u = closest and o = most distant, i.e. the would-be blocking triple.
  std::optional<std::array<int, 3>> blocking_triple;

  bool passed() const noexcept { return neighbor_identified && minimax_holds; }
};

struct ExtendedMinimaxCheck {
  int k;
  Sign sign;
  Boundary boundary;
  Label closest;
  Label most_distant_opposite;
  bool holds;
};

struct TheoremVerdict {
  Label base;
  int n;
  std::vector<MinimaxCase> cases;           // theorem hypothesis satisfied
  std::vector<ExtendedMinimaxCheck> extended;  // all k < n, reported only

  bool passed() const noexcept;
  bool extended_passed() const noexcept;
};

// Throws Errc::invalid_argument when morse(O) == 0.
TheoremVerdict verify_minimax_theorem(const AttractorModel& model, Label O);

}  // namespace sturm
