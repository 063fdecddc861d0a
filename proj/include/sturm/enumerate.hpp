#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sturm/perm.hpp"

namespace sturm {

enum class Engine {
  automatic,  // filter for n <= 7, backtracking above
  filter,     // every permutation fixing 1 and n, tested with is_sturm
  backtrack,  // grows the axis sequence under arc-stack and Morse pruning
};

inline constexpr int kDefaultEnumerationBound = 11;
inline constexpr int kFilterEngineLimit = 9;

struct EnumerateOptions {
  int bound = kDefaultEnumerationBound;
  Engine engine = Engine::automatic;
  // Worker threads for the backtracking engine; 0 picks hardware concurrency.
  unsigned threads = 1;
};

// All Sturm permutations of size n in lexicographic order of the one-line
// form. Throws Errc::invalid_argument for even or non-positive n and
// Errc::bound_exceeded past the bound (or past the filter limit).
std::vector<Permutation> enumerate_sturm(int n, const EnumerateOptions& options = {});

// Streaming form; results arrive in the same order.
std::size_t for_each_sturm(int n, const std::function<void(const Permutation&)>& visit,
                           const EnumerateOptions& options = {});

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_counterexample;
};

struct HarnessReport {
  int n_max = 0;
  std::vector<std::size_t> counts;  // counts[i] for n = 2i + 1
  std::size_t permutations_checked = 0;
  std::vector<PropertyResult> properties;

  bool passed() const noexcept;
};

// Runs every module invariant over all Sturm permutations of odd size
// n <= n_max.
HarnessReport property_harness(int n_max, const EnumerateOptions& options = {});

}  // namespace sturm
