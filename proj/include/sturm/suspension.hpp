#pragma once

#include <string>
#include <vector>

#include "sturm/perm.hpp"

namespace sturm {

// Meander suspension: the segment from label 1 to label n is rotated by 180
// degrees and two new extreme crossings are added. Inner label j becomes j+1.
struct SuspensionResult {
  Permutation original;
  Permutation suspended;

  static Label inner_image(Label j) noexcept { return j + 1; }
};

// Throws Errc::not_sturm.
SuspensionResult suspend(const Permutation& p);

// `times` successive suspensions; times == 0 returns p unchanged.
Permutation suspend(const Permutation& p, int times);

struct SuspensionCheck {
  std::string name;
  bool passed;
  std::string detail;  // first mismatch, empty on success
};

struct SuspensionReport {
  Permutation original;
  Permutation suspended;
  std::vector<SuspensionCheck> checks;

  bool passed() const noexcept;
};

// Itemized check of the suspension lemmas: extreme Morse zeros, inner Morse
// shift, inner zero-number shift, vanishing extreme rows, connection graph
// isomorphism on inner labels, and the target-set / minimax correspondence.
SuspensionReport verify_suspension(const Permutation& p);

}  // namespace sturm
