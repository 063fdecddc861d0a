#include "sturm/suspension.hpp"

#include <algorithm>

#include "sturm/attractor.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

SuspensionResult suspend(const Permutation& p) {
  require_sturm(p);
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n + 2));
  out.front() = 1;
  out.back() = n + 2;
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j)] = p.label_at(n + 1 - j) + 1;
  return {p, Permutation(std::move(out))};
}

Permutation suspend(const Permutation& p, int times) {
  if (times < 0) throw Error(Errc::invalid_argument, "suspension count must be non-negative");
  Permutation current = p;
  if (times == 0) require_sturm(current);
  for (int t = 0; t < times; ++t) current = suspend(current).suspended;
  return current;
}

bool SuspensionReport::passed() const noexcept {
  return std::ranges::all_of(checks, [](const SuspensionCheck& c) { return c.passed; });
}

namespace {

class CheckList {
 public:
  explicit CheckList(std::vector<SuspensionCheck>& out) : out_(out) {}

  void begin(std::string name) { out_.push_back({std::move(name), true, {}}); }

  void expect(bool ok, const std::string& detail) {
    SuspensionCheck& c = out_.back();
    if (ok || !c.passed) return;
    c.passed = false;
    c.detail = detail;
  }

 private:
  std::vector<SuspensionCheck>& out_;
};

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

SuspensionReport verify_suspension(const Permutation& p) {
  const SuspensionResult s = suspend(p);
  SuspensionReport report{s.original, s.suspended, {}};
  CheckList check(report.checks);
  const int n = p.size();
  auto img = SuspensionResult::inner_image;

  check.begin("suspension_is_sturm");
  check.expect(is_sturm(s.suspended), format_permutation(s.suspended));
  if (!is_sturm(s.suspended)) return report;

  const AttractorModel base(p);
  const AttractorModel susp(s.suspended);
  const MorseVector& m = base.morse();
  const MorseVector& mt = susp.morse();
  const ZeroMatrix& z = base.z();
  const ZeroMatrix& zt = susp.z();

  check.begin("extreme_morse_zero");
  check.expect(mt[1] == 0, "i(v~_0) = " + std::to_string(mt[1]));
  check.expect(mt[n + 2] == 0, "i(v~_N+1) = " + std::to_string(mt[n + 2]));

  check.begin("inner_morse_shift");
  for (Label j = 1; j <= n; ++j) {
    check.expect(mt[img(j)] == m[j] + 1, "label " + std::to_string(j));
  }

  check.begin("inner_zero_number_shift");
  for (Label j = 1; j <= n; ++j) {
    for (Label k = j + 1; k <= n; ++k) check.expect(zt(img(j), img(k)) == z(j, k) + 1, pair_str(j, k));
  }

  check.begin("extreme_zero_rows");
  for (Label k = 2; k <= n + 2; ++k) check.expect(zt(1, k) == 0, pair_str(0, k - 1));
  for (Label k = 1; k <= n + 1; ++k) check.expect(zt(k, n + 2) == 0, pair_str(k - 1, n + 1));

  check.begin("connection_graph_isomorphism");
  {
    std::vector<Connection> inner;
    for (auto [a, b] : susp.connections()) {
      if (a > 1 && a < n + 2 && b > 1 && b < n + 2) inner.emplace_back(a - 1, b - 1);
    }
    check.expect(inner == base.connections(), "inner connection sets differ");
  }

  check.begin("target_set_correspondence");
  for (Label O = 1; O <= n; ++O) {
    for (int k = 0; k < m[O]; ++k) {
      for (Sign sign : {Sign::minus, Sign::plus}) {
        std::vector<Label> mapped = target_set(base, O, k, sign);
        std::ranges::transform(mapped, mapped.begin(), img);
        check.expect(mapped == target_set(susp, img(O), k + 1, sign),
                     "E^" + std::to_string(k) + "_" + to_string(sign) + "(" + std::to_string(O) + ")");
      }
    }
  }

  check.begin("minimax_correspondence");
  for (Label O = 1; O <= n; ++O) {
    const int k = m[O] - 1;
    if (k < 0) continue;
    for (Sign sign : {Sign::minus, Sign::plus}) {
      if (target_set(base, O, k, sign).empty()) continue;
      const MinimaxEquilibria a = minimax(base, O, k, sign);
      const MinimaxEquilibria b = minimax(susp, img(O), k + 1, sign);
      check.expect(img(a.closest_x0) == b.closest_x0 && img(a.closest_x1) == b.closest_x1 &&
                       img(a.most_distant_x0) == b.most_distant_x0 && img(a.most_distant_x1) == b.most_distant_x1,
                   "O=" + std::to_string(O) + " sign " + to_string(sign));
    }
  }
  return report;
}

}  // namespace sturm
