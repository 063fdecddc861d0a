#include "sturm/attractor.hpp"

#include <algorithm>
#include <cstdlib>

#include "sturm/error.hpp"

namespace sturm {

const char* to_string(Boundary b) noexcept { return b == Boundary::x0 ? "x0" : "x1"; }

namespace {

void require_label(const AttractorModel& model, Label j) {
  if (j < 1 || j > model.size()) {
    throw Error(Errc::out_of_range, "label " + std::to_string(j) + " outside 1.." + std::to_string(model.size()));
  }
}

void require_unstable(const AttractorModel& model, Label O) {
  require_label(model, O);
  if (model.morse()[O] == 0) {
    throw Error(Errc::invalid_argument, "equilibrium " + std::to_string(O) + " is stable (Morse index 0)");
  }
}

std::optional<Label> first_blocker(const ZeroMatrix& z, Label j, Label k) {
  const int target = z(k, j);
  for (Label w = std::min(j, k) + 1; w < std::max(j, k); ++w) {
    if (z(w, j) == target && z(k, w) == target) return w;
  }
  return std::nullopt;
}

}  // namespace

AttractorModel::AttractorModel(Permutation p)
    : p_(std::move(p)), morse_(morse_indices(p_)), z_(z_matrix(p_)) {
  const int n = p_.size();
  edge_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Label j = 1; j <= n; ++j) {
    for (Label k = 1; k <= n; ++k) {
      if (j == k || morse_[j] <= morse_[k]) continue;
      if (first_blocker(z_, j, k)) continue;
      connections_.emplace_back(j, k);
      edge_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k - 1)] = 1;
    }
  }
}

bool AttractorModel::connects(Label source, Label target) const {
  const int n = size();
  if (source < 1 || source > n || target < 1 || target > n) return false;
  return edge_[static_cast<std::size_t>(source - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(target - 1)] != 0;
}

bool AttractorModel::reachable(Label source, Label target) const {
  const int n = size();
  if (source < 1 || source > n || target < 1 || target > n || source == target) return false;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  std::vector<Label> stack{source};
  seen[static_cast<std::size_t>(source)] = 1;
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    for (Label w = 1; w <= n; ++w) {
      if (seen[static_cast<std::size_t>(w)] || !connects(v, w)) continue;
      if (w == target) return true;
      seen[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

AttractorModel build_model(const Permutation& p) {
  require_sturm(p);
  return AttractorModel(p);
}

ZAdjacency is_z_adjacent(const AttractorModel& model, Label j, Label k) {
  require_label(model, j);
  require_label(model, k);
  if (j == k) throw Error(Errc::invalid_argument, "z-adjacency needs two distinct equilibria");
  const std::optional<Label> w = first_blocker(model.z(), j, k);
  return {!w.has_value(), w};
}

bool connects(const AttractorModel& model, Label j, Label k) {
  require_label(model, j);
  require_label(model, k);
  if (j == k) throw Error(Errc::invalid_argument, "an equilibrium does not connect to itself");
  return model.morse()[j] > model.morse()[k] && is_z_adjacent(model, j, k).adjacent;
}

ConnectionGraph connection_graph(const AttractorModel& model) {
  ConnectionGraph g;
  for (Label j = 1; j <= model.size(); ++j) g.nodes.push_back({j, model.morse()[j]});
  g.edges = model.connections();
  return g;
}

std::optional<Label> NeighborQuartet::get(Boundary b, Sign s) const {
  if (b == Boundary::x0) return s == Sign::minus ? w0_minus : w0_plus;
  return s == Sign::minus ? w1_minus : w1_plus;
}

NeighborQuartet boundary_neighbors(const AttractorModel& model, Label O) {
  require_label(model, O);
  const Permutation& p = model.permutation();
  const int n = model.size();
  NeighborQuartet q;
  if (O > 1) q.w0_minus = O - 1;
  if (O < n) q.w0_plus = O + 1;
  const Position at = p.position_of(O);
  if (at > 1) q.w1_minus = p.label_at(at - 1);
  if (at < n) q.w1_plus = p.label_at(at + 1);
  return q;
}

std::vector<Label> target_set(const AttractorModel& model, Label O, int k, Sign sign) {
  require_unstable(model, O);
  const int n = model.morse()[O];
  if (k < 0 || k >= n) {
    throw Error(Errc::invalid_argument,
                "zero number " + std::to_string(k) + " outside [0, " + std::to_string(n) + ") for equilibrium " +
                    std::to_string(O));
  }
  std::vector<Label> out;
  for (Label w = 1; w <= model.size(); ++w) {
    if (w == O || model.z()(O, w) != k) continue;
    if ((w > O) != (sign == Sign::plus)) continue;
    if (model.connects(O, w)) out.push_back(w);
  }
  return out;
}

MinimaxEquilibria minimax(const AttractorModel& model, Label O, int k, Sign sign) {
  const std::vector<Label> targets = target_set(model, O, k, sign);
  if (targets.empty()) {
    throw Error(Errc::invalid_argument, "target set E^" + std::to_string(k) + "_" + to_string(sign) + "(" +
                                            std::to_string(O) + ") is empty");
  }
  const Permutation& p = model.permutation();
  auto d0 = [&](Label w) { return std::abs(w - O); };
  auto d1 = [&](Label w) { return std::abs(p.position_of(w) - p.position_of(O)); };
  // Ties cannot occur within one sign class; min_element keeps the smaller
  // label regardless.
  auto by = [](auto dist) { return [dist](Label a, Label b) { return dist(a) < dist(b); }; };
  return {
      *std::ranges::min_element(targets, by(d0)),
      *std::ranges::min_element(targets, by(d1)),
      *std::ranges::max_element(targets, by(d0)),
      *std::ranges::max_element(targets, by(d1)),
  };
}

Sign identified_sign(Boundary iota, Sign neighbor_side, int n) noexcept {
  if (iota == Boundary::x0 || n % 2 == 1) return neighbor_side;
  return opposite(neighbor_side);
}

std::vector<NeighborIdentification> identify_neighbors(const AttractorModel& model, Label O) {
  require_unstable(model, O);
  const int n = model.morse()[O];
  const NeighborQuartet quartet = boundary_neighbors(model, O);
  std::vector<NeighborIdentification> out;
  for (Boundary b : {Boundary::x0, Boundary::x1}) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      const std::optional<Label> w = quartet.get(b, s);
      if (!w) continue;
      NeighborIdentification id{b, s, *w, model.morse()[*w], model.morse()[*w] == n - 1, Sign::plus, std::nullopt, false};
      if (id.applicable) {
        id.target_sign = identified_sign(b, s, n);
        const std::vector<Label> targets = target_set(model, O, n - 1, id.target_sign);
        if (!targets.empty()) id.predicted = minimax(model, O, n - 1, id.target_sign).closest(b);
        id.holds = id.predicted == *w;
      }
      out.push_back(id);
    }
  }
  return out;
}

bool TheoremVerdict::passed() const noexcept {
  return std::ranges::all_of(cases, [](const MinimaxCase& c) { return c.passed(); });
}

bool TheoremVerdict::extended_passed() const noexcept {
  return std::ranges::all_of(extended, [](const ExtendedMinimaxCheck& c) { return c.holds; });
}

TheoremVerdict verify_minimax_theorem(const AttractorModel& model, Label O) {
  require_unstable(model, O);
  const int n = model.morse()[O];
  TheoremVerdict verdict{O, n, {}, {}};

  for (const NeighborIdentification& id : identify_neighbors(model, O)) {
    if (!id.applicable) continue;
    MinimaxCase c{id.boundary, id.target_sign, id.neighbor, 0, 0, false, false, std::nullopt};
    if (!target_set(model, O, n - 1, id.target_sign).empty()) {
      const MinimaxEquilibria mm = minimax(model, O, n - 1, id.target_sign);
      c.closest = mm.closest(id.boundary);
      c.most_distant_opposite = mm.most_distant(opposite(id.boundary));
      c.neighbor_identified = c.neighbor == c.closest;
      c.minimax_holds = c.closest == c.most_distant_opposite;
      if (!c.minimax_holds) {
        const ZeroMatrix& z = model.z();
        c.blocking_triple = std::array<int, 3>{z(c.closest, O), z(c.most_distant_opposite, O),
                                               z(c.most_distant_opposite, c.closest)};
      }
    }
    verdict.cases.push_back(c);
  }

  for (int k = 0; k < n; ++k) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (target_set(model, O, k, s).empty()) continue;
      const MinimaxEquilibria mm = minimax(model, O, k, s);
      for (Boundary b : {Boundary::x0, Boundary::x1}) {
        verdict.extended.push_back(
            {k, s, b, mm.closest(b), mm.most_distant(opposite(b)), mm.closest(b) == mm.most_distant(opposite(b))});
      }
    }
  }
  return verdict;
}

}  // namespace sturm
