#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "sturm/attractor.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "sturm/suspension.hpp"
#include "sturm/zeronum.hpp"

namespace sturm {

bool HarnessReport::passed() const noexcept {
  return std::ranges::all_of(properties, [](const PropertyResult& r) { return r.failures == 0; });
}

namespace {

class Tally {
 public:
  PropertyResult& operator[](const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, results_.size());
    if (inserted) results_.push_back({name, 0, 0, std::nullopt});
    return results_[it->second];
  }

  void record(const std::string& name, bool ok, const Permutation& p, const std::string& detail = {}) {
    PropertyResult& r = (*this)[name];
    ++r.checked;
    if (ok) return;
    ++r.failures;
    if (!r.first_counterexample) r.first_counterexample = format_permutation(p) + (detail.empty() ? "" : " " + detail);
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

void check_permutation(const Permutation& p, const std::set<Permutation>& same_size,
                       const std::set<Permutation>& next_size, bool have_next, Tally& tally) {
  const int n = p.size();
  const MorseVector m = morse_indices(p);

  bool steps = m[1] == 0;
  bool parity = true;
  for (Label j = 1; j <= n; ++j) {
    if (j < n && std::abs(m[j + 1] - m[j]) != 1) steps = false;
    if ((m[j] + j) % 2 != 1) parity = false;
  }
  tally.record("morse_start_and_unit_steps", steps, p);
  tally.record("morse_label_parity", parity, p);
  tally.record("morse_last_is_zero", m[n] == 0, p);

  const Permutation t = apply_tau(p);
  const Permutation k = apply_kappa(p);
  tally.record("klein_involutions_commute",
               apply_tau(t) == p && apply_kappa(k) == p && apply_tau(k) == apply_kappa(t), p);
  {
    const MorseVector mt = morse_indices(t);
    const MorseVector mk = morse_indices(k);
    bool ok = true;
    for (int q = 1; q <= n; ++q) ok = ok && mt[q] == m[p.label_at(q)] && mk[q] == m[n + 1 - q];
    tally.record("klein_morse_relabeling", ok, p);
  }
  const KleinOrbit orbit = klein_orbit(p);
  tally.record("klein_orbit_closure",
               std::ranges::all_of(orbit.members, [&](const Permutation& q) { return same_size.contains(q); }), p);

  {
    bool additive = true;
    bool endpoint = true;
    for (Label l = 1; l <= n && additive; ++l) {
      for (Label a = 1; a <= n && additive; ++a) {
        for (Label b = 1; b <= n && additive; ++b) {
          const int ab = crossing_number(p, a, b, l);
          additive = ab == -crossing_number(p, b, a, l);
          for (Label c = 1; c <= n && additive; ++c) {
            additive = ab + crossing_number(p, b, c, l) == crossing_number(p, a, c, l);
          }
        }
      }
    }
    for (Label j = 1; j < n; ++j) {
      endpoint = endpoint && crossing_number(p, j, j + 1, j) == 0 && crossing_number(p, j, j + 1, j + 1) == 0;
    }
    tally.record("crossing_additivity_antisymmetry", additive, p);
    tally.record("crossing_endpoint_zero", endpoint, p);
  }

  const AttractorModel model(p);
  const ZeroMatrix& z = model.z();
  {
    bool nsl = true;
    bool shape = true;
    std::string where;
    for (Label j = 1; j <= n; ++j) {
      for (Label q = 1; q <= n; ++q) {
        if (z(j, q) != z(q, j) || z(j, q) < 0) shape = false;
        if (j != q && z_pair_nsl(p, j, q) != z(j, q) && nsl) {
          nsl = false;
          where = "(" + std::to_string(j) + "," + std::to_string(q) + ")";
        }
      }
      if (j > 1 && j < n && (z(1, j) != 0 || z(j, n) != 0)) shape = false;
    }
    bool adjacency = true;
    for (Label j = 1; j < n; ++j) adjacency = adjacency && z(j, j + 1) == std::min(m[j], m[j + 1]);
    tally.record("nsl_identity", nsl, p, where);
    tally.record("z_symmetric_with_zero_boundary_rows", shape, p);
    tally.record("z_adjacency_law", adjacency, p);
  }

  {
    bool faithful = true;
    for (Label first = 1; first < n && faithful; ++first) {
      for (int len = 2; first + len - 1 <= n && faithful; ++len) {
        const ZeroMatrix w = window_z(MeanderWindow::from_permutation(p, first, len));
        for (int a = 1; a <= len; ++a) {
          for (int b = 1; b <= len; ++b) faithful = faithful && w(a, b) == z(first + a - 1, first + b - 1);
        }
      }
    }
    tally.record("window_faithfulness", faithful, p);
  }

  {
    bool dichotomy = true;
    bool neighbours_connect = true;
    for (Label O = 1; O <= n; ++O) {
      const NeighborQuartet q = boundary_neighbors(model, O);
      for (auto w : {q.w0_minus, q.w0_plus, q.w1_minus, q.w1_plus}) {
        if (!w) continue;
        if (std::abs(m[*w] - m[O]) != 1) dichotomy = false;
        const Label hi = m[*w] > m[O] ? *w : O;
        const Label lo = hi == O ? *w : O;
        if (!model.connects(hi, lo)) neighbours_connect = false;
      }
    }
    tally.record("neighbor_morse_dichotomy", dichotomy, p);
    tally.record("boundary_neighbors_connected", neighbours_connect, p);
  }

  {
    bool theorem = true;
    std::string where;
    for (Label O = 1; O <= n; ++O) {
      if (m[O] == 0) continue;
      if (!verify_minimax_theorem(model, O).passed() && theorem) {
        theorem = false;
        where = "O=" + std::to_string(O);
      }
    }
    tally.record("minimax_theorem", theorem, p, where);
  }

  {
    const AttractorModel mt(t);
    const AttractorModel mk(k);
    std::vector<Connection> via_tau;
    std::vector<Connection> via_kappa;
    for (auto [a, b] : model.connections()) {
      via_tau.emplace_back(p.position_of(a), p.position_of(b));
      via_kappa.emplace_back(n + 1 - a, n + 1 - b);
    }
    std::ranges::sort(via_tau);
    std::ranges::sort(via_kappa);
    tally.record("connection_graph_klein_invariance", via_tau == mt.connections() && via_kappa == mk.connections(), p);
  }

  const SuspensionReport s = verify_suspension(p);
  std::string failed;
  for (const SuspensionCheck& c : s.checks) {
    if (!c.passed && failed.empty()) failed = c.name + ": " + c.detail;
  }
  tally.record("suspension_lemmas", s.passed(), p, failed);
  if (have_next) tally.record("suspension_closure", next_size.contains(s.suspended), p);
}

}  // namespace

HarnessReport property_harness(int n_max, const EnumerateOptions& options) {
  if (n_max < 1 || n_max % 2 == 0) throw Error(Errc::invalid_argument, "n_max must be odd and positive");
  if (n_max > options.bound) throw Error(Errc::bound_exceeded, "n_max exceeds the enumeration bound");

  HarnessReport report;
  report.n_max = n_max;
  Tally tally;

  std::vector<std::vector<Permutation>> families;
  for (int n = 1; n <= n_max; n += 2) families.push_back(enumerate_sturm(n, options));
  // One size past n_max, for suspension closure, only when it stays cheap.
  const bool have_next = n_max + 2 <= options.bound;
  if (have_next) families.push_back(enumerate_sturm(n_max + 2, options));

  for (std::size_t f = 0; f * 2 + 1 <= static_cast<std::size_t>(n_max); ++f) {
    const int n = static_cast<int>(f * 2 + 1);
    const auto& family = families[f];
    report.counts.push_back(family.size());
    const std::set<Permutation> same(family.begin(), family.end());
    const bool next_known = f + 1 < families.size();
    const std::set<Permutation> next =
        next_known ? std::set<Permutation>(families[f + 1].begin(), families[f + 1].end()) : std::set<Permutation>{};

    tally.record("lexicographic_unique_order", std::ranges::adjacent_find(family, std::greater_equal<>{}) == family.end(),
                 Permutation::identity(n));
    if (n <= 7) {
      EnumerateOptions filter = options;
      filter.engine = Engine::filter;
      EnumerateOptions backtrack = options;
      backtrack.engine = Engine::backtrack;
      tally.record("engines_agree", enumerate_sturm(n, filter) == enumerate_sturm(n, backtrack),
                   Permutation::identity(n));
    }
    for (const Permutation& p : family) {
      check_permutation(p, same, next, next_known, tally);
      ++report.permutations_checked;
    }
  }
  report.properties = tally.take();
  return report;
}

}  // namespace sturm
