#include "sturm/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::out_of_range: return "out_of_range";
    case Errc::not_sturm: return "not_sturm";
    case Errc::not_meander: return "not_meander";
    case Errc::inconsistent_window: return "inconsistent_window";
    case Errc::bound_exceeded: return "bound_exceeded";
  }
  return "unknown";
}

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

// Returns 0 when `values` is a bijection of {1..n}, otherwise the 1-based
// index of the first entry that breaks it.
int first_non_bijective(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(values.size() + 1, 0);
  for (int t = 0; t < n; ++t) {
    const int v = values[static_cast<std::size_t>(t)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return t + 1;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return 0;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
  if (map_.empty()) throw Error(Errc::invalid_argument, "empty permutation");
  if (map_.size() % 2 == 0) {
    throw Error(Errc::invalid_argument, "permutation size " + std::to_string(map_.size()) + " is even");
  }
  if (int bad = first_non_bijective(map_); bad != 0) {
    throw Error(Errc::invalid_argument, "entry " + std::to_string(bad) + " breaks the bijection of {1.." +
                                            std::to_string(map_.size()) + "}");
  }
  inv_.assign(map_.size(), 0);
  for (std::size_t k = 0; k < map_.size(); ++k) inv_[static_cast<std::size_t>(map_[k] - 1)] = static_cast<int>(k + 1);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text, IndexBase base) {
  std::vector<int> values;
  std::size_t i = 0;
  int token = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view tok = text.substr(i, end - i);
    ++token;
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError("token " + std::to_string(token) + " '" + std::string(tok) + "' is not an integer", token);
    }
    values.push_back(base == IndexBase::zero ? value + 1 : value);
    i = end;
  }
  if (values.empty()) throw ParseError("empty input", 0);
  if (int bad = first_non_bijective(values); bad != 0) {
    throw ParseError("token " + std::to_string(bad) + " breaks the bijection of {" +
                         (base == IndexBase::zero ? std::string("0..") + std::to_string(values.size() - 1)
                                                  : std::string("1..") + std::to_string(values.size())) +
                         "}",
                     bad);
  }
  if (values.size() % 2 == 0) {
    throw ParseError("permutation size " + std::to_string(values.size()) + " is even", token);
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p, IndexBase base) {
  std::ostringstream out;
  const int shift = base == IndexBase::zero ? 1 : 0;
  bool first = true;
  for (int v : p.one_line()) {
    if (!first) out << ' ';
    out << v - shift;
    first = false;
  }
  return out.str();
}

bool is_dissipative(const Permutation& p) {
  return p.label_at(1) == 1 && p.label_at(p.size()) == p.size();
}

MorseVector morse_indices(const Permutation& p) {
  const int n = p.size();
  std::vector<int> i(static_cast<std::size_t>(n), 0);
  for (Label j = 1; j < n; ++j) {
    const int alternation = (j % 2 == 1) ? 1 : -1;  // (-1)^{j+1}
    i[static_cast<std::size_t>(j)] = i[static_cast<std::size_t>(j - 1)] +
                                     alternation * sign(p.position_of(j + 1) - p.position_of(j));
  }
  return MorseVector(std::move(i));
}

bool is_morse(const Permutation& p) {
  const MorseVector m = morse_indices(p);
  return std::ranges::all_of(m.values(), [](int v) { return v >= 0; });
}

Permutation apply_tau(const Permutation& p) {
  require_sturm(p);
  return p.inverse();
}

Permutation apply_kappa(const Permutation& p) {
  require_sturm(p);
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (Position k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = n + 1 - p.label_at(n + 1 - k);
  return Permutation(std::move(out));
}

KleinOrbit klein_orbit(const Permutation& p) {
  Permutation t = apply_tau(p);
  Permutation k = apply_kappa(p);
  Permutation tk = apply_tau(k);
  KleinOrbit orbit{{p, std::move(t), std::move(k), std::move(tk)}, 0};
  std::vector<Permutation> distinct(orbit.members.begin(), orbit.members.end());
  std::ranges::sort(distinct);
  orbit.distinct = static_cast<int>(std::ranges::unique(distinct).begin() - distinct.begin());
  return orbit;
}

}  // namespace sturm
