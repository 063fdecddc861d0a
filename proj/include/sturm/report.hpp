#pragma once

#include <string>
#include <vector>

#include "sturm/attractor.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/perm.hpp"
#include "sturm/suspension.hpp"
#include "sturm/zeronum.hpp"

namespace sturm {

// Plain "key: value" lines: n, dissipative, morse, meander, sturm, and the
// Morse vector.
std::string validate_text(const Permutation& p);

// JSON documents. Arrays are 1-based by convention and every document carries
// "index_base": 1. Output is deterministic and newline-terminated.
std::string analyze_json(const AttractorModel& model);
std::string minimax_json(const AttractorModel& model, Label O);
std::string suspension_json(const SuspensionReport& report);
std::string harness_json(const HarnessReport& report);
std::string window_json(const MeanderWindow& win);

// Window report as text: a Morse line followed by the matrix rows.
std::string window_text(const MeanderWindow& win);

// Connection digraph; nodes in label order annotated "i=<morse>".
std::string to_dot(const AttractorModel& model);

}  // namespace sturm
