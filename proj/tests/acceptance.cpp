// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "sturm/attractor.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/meander.hpp"
#include "sturm/suspension.hpp"
#include "sturm/zeronum.hpp"

using namespace sturm;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string join(std::span<const int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Outcome validate_seven() {
  const auto start = std::chrono::steady_clock::now();
  const Permutation p = parse_permutation("1 4 5 6 3 2 7");
  const bool sturm = is_sturm(p);
  const MorseVector m = morse_indices(p);
  const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  const bool ok = sturm && join(m.values()) == "0 1 2 1 0 1 0" && us < 1000.0;
  return {ok, "morse [" + join(m.values()) + "], " + std::to_string(static_cast<int>(us)) + " us"};
}

Outcome suspension_seven() {
  const Permutation s = suspend(Permutation(fixtures::kSeven)).suspended;
  const std::string line = format_permutation(s, IndexBase::zero);
  const std::string morse = join(morse_indices(s).values());
  return {line == "0 7 2 3 6 5 4 1 8" && morse == "0 1 2 3 2 1 2 1 0", line + " / morse " + morse};
}

Outcome window_and_target_set() {
  const MeanderWindow win = MeanderWindow::from_axis_sequence(fixtures::kWindowOrder, fixtures::kWindowAnchor);
  const ZeroMatrix z = window_z(win);
  bool same = window_morse(win) == fixtures::kWindowMorse;
  for (int j = 1; j <= 12; ++j)
    for (int k = 1; k <= 12; ++k)
      same = same && z(j, k) == fixtures::kWindowMatrix[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
  const AttractorModel m = build_model(Permutation(fixtures::kSigmaStar));
  const auto e = target_set(m, 3, 1, Sign::plus);
  const bool set_ok = e == std::vector<Label>{4, 7, 8, 9, 10};
  return {same && set_ok, std::string("matrix ") + (same ? "equal" : "differs") + ", E = {" + join(e) + "}"};
}

Outcome neighbor_identification() {
  const AttractorModel m = build_model(Permutation(fixtures::kSigmaStar));
  const NeighborQuartet q = boundary_neighbors(m, 3);
  const MinimaxEquilibria e = minimax(m, 3, 1, Sign::plus);
  const bool ok = q.w0_plus == 4 && e.closest_x0 == 4 && e.most_distant_x1 == 4 && q.w1_minus == 10 &&
                  e.closest_x1 == 10 && e.most_distant_x0 == 10;
  std::ostringstream d;
  d << "w0+=" << q.w0_plus.value_or(0) << " closest_x0=" << e.closest_x0 << " most_distant_x1=" << e.most_distant_x1
    << "; w1-=" << q.w1_minus.value_or(0) << " closest_x1=" << e.closest_x1
    << " most_distant_x0=" << e.most_distant_x0;
  return {ok, d.str()};
}

Outcome theorem_exhaustive() {
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (int n = 1; n <= 9; n += 2)
    for (const Permutation& p : enumerate_sturm(n)) {
      const AttractorModel m = build_model(p);
      for (Label O = 1; O <= n; ++O) {
        if (m.morse()[O] == 0) continue;
        const TheoremVerdict v = verify_minimax_theorem(m, O);
        cases += v.cases.size();
        if (!v.passed()) ++failures;
      }
    }
  return {failures == 0 && cases > 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome nsl_exhaustive() {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  for (int n = 1; n <= 9; n += 2)
    for (const Permutation& p : enumerate_sturm(n)) {
      const ZeroMatrix z = z_matrix(p);
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          ++pairs;
          if (z_pair_nsl(p, j, k) != z(j, k)) ++failures;
        }
    }
  return {failures == 0, std::to_string(pairs) + " pairs, " + std::to_string(failures) + " mismatches"};
}

Outcome suspension_lemmas() {
  std::size_t checked = 0;
  std::string first_failure;
  for (int n = 1; n <= 7; n += 2)
    for (const Permutation& p : enumerate_sturm(n)) {
      ++checked;
      const SuspensionReport r = verify_suspension(p);
      for (const auto& c : r.checks)
        if (!c.passed && first_failure.empty()) first_failure = format_permutation(p) + ": " + c.name;
    }
  return {first_failure.empty(), std::to_string(checked) + " permutations" +
                                     (first_failure.empty() ? "" : ", first failure " + first_failure)};
}

Outcome enumeration_counts() {
  EnumerateOptions filter;
  filter.engine = Engine::filter;
  EnumerateOptions back;
  back.engine = Engine::backtrack;
  bool agree = true;
  for (int n = 1; n <= 7; n += 2) agree = agree && enumerate_sturm(n, filter) == enumerate_sturm(n, back);
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 9; n += 2) counts.push_back(enumerate_sturm(n).size());
  const bool ok = agree && counts == std::vector<std::size_t>{1, 1, 2, 7, 32};
  std::string d = "counts";
  for (auto c : counts) d += " " + std::to_string(c);
  return {ok, d + (agree ? ", engines agree" : ", engines disagree")};
}

Outcome random_windows() {
  std::mt19937 rng(9001);
  std::vector<Permutation> pool;
  for (int n = 3; n <= 9; n += 2)
    for (auto& p : enumerate_sturm(n)) pool.push_back(p);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const Permutation& p = pool[rng() % pool.size()];
    const int n = p.size();
    const int length = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int first = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - length + 1));
    const MeanderWindow win = MeanderWindow::from_permutation(p, first, length);
    const ZeroMatrix part = window_z(win);
    const ZeroMatrix full = z_matrix(p);
    const MorseVector morse = morse_indices(p);
    const std::vector<int> wm = window_morse(win);
    bool ok = true;
    for (int a = 1; a <= length; ++a) {
      ok = ok && wm[static_cast<std::size_t>(a - 1)] == morse[first + a - 1];
      for (int b = 1; b <= length; ++b)
        if (a != b) ok = ok && part(a, b) == full(first + a - 1, first + b - 1);
    }
    if (!ok) ++failures;
  }
  return {failures == 0, "1000 windows, " + std::to_string(failures) + " mismatches"};
}

Outcome deterministic_cli() {
  const std::vector<std::string> commands = {
      "analyze 1 4 5 6 3 2 7",
      "analyze 1 14 13 6 5 4 7 12 11 8 9 10 3 2 15",
      "render 1 4 5 6 3 2 7",
      "render --format dot 1 14 13 6 5 4 7 12 11 8 9 10 3 2 15",
  };
  for (const auto& c : commands) {
    const cli::Result a = cli::run(c);
    const cli::Result b = cli::run(c);
    if (a.status != 0 || a.out.empty() || a.out != b.out) return {false, "differs: " + c};
  }
  return {true, std::to_string(commands.size()) + " commands byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"validate 1 4 5 6 3 2 7 is Sturm with Morse 0 1 2 1 0 1 0 in under 1 ms", validate_seven},
      {"suspension of 1 4 5 6 3 2 7 is 0 7 2 3 6 5 4 1 8", suspension_seven},
      {"window matrix of the 15-point example and E^1_+(3) = {4,7,8,9,10}", window_and_target_set},
      {"w0+ = closest_x0 = most_distant_x1 and w1- = closest_x1 = most_distant_x0", neighbor_identification},
      {"minimax theorem holds for every Sturm permutation with n <= 9", theorem_exhaustive},
      {"NSL formula equals the zero-number recursion for n <= 9", nsl_exhaustive},
      {"suspension lemmas hold for n <= 7", suspension_lemmas},
      {"enumeration counts 1 1 2 7 32 and engines agree for n <= 7", enumeration_counts},
      {"1000 random windows reproduce the full zero-number matrix", random_windows},
      {"repeated CLI analyze/render output is byte-identical", deterministic_cli},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s  %2d  %s  (%s)\n", o.ok ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures;
}
