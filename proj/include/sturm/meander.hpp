#pragma once

#include <string>
#include <vector>

#include "sturm/perm.hpp"

namespace sturm {

enum class Side { above, below };

enum class Parity { even, odd };

// Vertical direction in which the curve crosses the axis.
enum class Direction { up, down };

const char* to_string(Side side) noexcept;
const char* to_string(Parity parity) noexcept;
const char* to_string(Direction direction) noexcept;

// Semicircle of the canonical meander joining labels `step` and `step + 1`.
struct Arc {
  Position from;
  Position to;
  Side side;
  Label step;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct MeanderDiagram {
  int n = 0;
  std::vector<Arc> arcs;
};

// Arc j joins positions pos(j), pos(j+1); odd steps lie above the axis since
// the curve enters the first crossing upwards.
MeanderDiagram build_diagram(const Permutation& p);

// True iff the arcs on each side are pairwise non-nested-or-disjoint. Linear
// sweep with one stack per side.
bool is_meander(const Permutation& p);

bool is_sturm(const Permutation& p);

// Throws Errc::not_sturm unless is_sturm(p).
void require_sturm(const Permutation& p);

// Net clockwise crossings of the curve segment from label j to label k through
// the vertical line at label l. Arcs ending at l are ignored.
int crossing_number(const Permutation& p, Label j, Label k, Label l);

// Parity of the quadrant of the arc leaving crossing j: odd iff the Morse
// number increases from j to j+1.
Parity quadrant_parity(const Permutation& p, Label j);

// Up iff the Morse number of j is even.
Direction crossing_direction(const Permutation& p, Label j);

struct SvgStyle {
  double scale = 40.0;
  bool annotate_morse = true;
  bool zero_based_labels = false;
};

// Standalone SVG of the canonical meander. Throws Errc::not_meander.
std::string render_svg(const Permutation& p, const SvgStyle& style = {});

}  // namespace sturm
