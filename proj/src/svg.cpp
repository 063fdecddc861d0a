#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Permutation& p, const SvgStyle& style) {
  if (!is_meander(p)) throw Error(Errc::not_meander, "permutation " + format_permutation(p) + " is not a meander");
  if (!(style.scale > 0.0)) throw Error(Errc::invalid_argument, "scale must be positive");

  const double s = style.scale;
  const MeanderDiagram diagram = build_diagram(p);
  const MorseVector morse = morse_indices(p);

  double reach_above = 0.0;
  double reach_below = 0.0;
  for (const Arc& arc : diagram.arcs) {
    double& reach = arc.side == Side::above ? reach_above : reach_below;
    reach = std::max(reach, std::abs(arc.to - arc.from) * s / 2.0);
  }
  const double margin = s;
  const double width = (diagram.n + 1) * s;
  const double baseline = margin + reach_above;
  const double height = baseline + reach_below + margin;
  const double stub = 0.6 * s;
  auto x_of = [&](Position k) { return k * s; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<title>meander " + format_permutation(p, style.zero_based_labels ? IndexBase::zero : IndexBase::one) +
         "</title>\n";
  out += "<g fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\">\n";
  out += "<line class=\"axis\" x1=\"" + num(0.5 * s) + "\" y1=\"" + num(baseline) + "\" x2=\"" +
         num(width - 0.5 * s) + "\" y2=\"" + num(baseline) + "\" stroke=\"#888\"/>\n";

  // Incoming ray from below at label 1, outgoing ray upwards at label n.
  const double x_first = x_of(p.position_of(1));
  const double x_last = x_of(p.position_of(diagram.n));
  out += "<path class=\"ray\" d=\"M " + num(x_first) + " " + num(baseline + stub) + " L " + num(x_first) + " " +
         num(baseline) + "\"/>\n";
  out += "<path class=\"ray\" d=\"M " + num(x_last) + " " + num(baseline) + " L " + num(x_last) + " " +
         num(baseline - stub) + "\"/>\n";

  for (const Arc& arc : diagram.arcs) {
    const Position left = std::min(arc.from, arc.to);
    const Position right = std::max(arc.from, arc.to);
    const double r = (right - left) * s / 2.0;
    out += "<path class=\"arc " + std::string(to_string(arc.side)) + "\" data-step=\"" + std::to_string(arc.step) +
           "\" d=\"M " + num(x_of(left)) + " " + num(baseline) + " A " + num(r) + " " + num(r) + " 0 0 " +
           (arc.side == Side::above ? "1" : "0") + " " + num(x_of(right)) + " " + num(baseline) + "\"/>\n";
  }
  out += "</g>\n";

  const int label_shift = style.zero_based_labels ? 1 : 0;
  out += "<g font-family=\"sans-serif\" font-size=\"" + num(0.3 * s) + "\" text-anchor=\"middle\">\n";
  for (Position k = 1; k <= diagram.n; ++k) {
    const Label j = p.label_at(k);
    const double x = x_of(k);
    out += "<circle class=\"crossing\" cx=\"" + num(x) + "\" cy=\"" + num(baseline) + "\" r=\"" + num(0.08 * s) +
           "\" fill=\"" + (morse[j] % 2 == 0 ? "#000" : "#fff") + "\" stroke=\"#000\"/>\n";
    out += "<text class=\"label\" x=\"" + num(x + 0.18 * s) + "\" y=\"" + num(baseline - 0.12 * s) + "\">" +
           std::to_string(j - label_shift) + "</text>\n";
    if (style.annotate_morse) {
      out += "<text class=\"morse\" x=\"" + num(x + 0.18 * s) + "\" y=\"" + num(baseline + 0.38 * s) +
             "\" fill=\"#a00\">i=" + std::to_string(morse[j]) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace sturm
