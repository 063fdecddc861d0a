#include "sturm/report.hpp"

#include <sstream>

#include "json.hpp"
#include "sturm/meander.hpp"

namespace sturm {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(std::span<const int> values) { return Json(std::vector<int>(values.begin(), values.end())); }

Json matrix_json(const ZeroMatrix& z) {
  Json rows = Json::array();
  for (Label j = 1; j <= z.size(); ++j) {
    Json row = Json::array();
    for (Label k = 1; k <= z.size(); ++k) row.push_back(z(j, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json optional_label(const std::optional<Label>& l) { return l ? Json(*l) : Json(nullptr); }

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json minimax_record(const AttractorModel& model, Label O) {
  const int n = model.morse()[O];
  Json rec;
  rec["O"] = O;
  rec["n"] = n;

  const NeighborQuartet q = boundary_neighbors(model, O);
  rec["neighbors"] = {{"w0_minus", optional_label(q.w0_minus)},
                      {"w0_plus", optional_label(q.w0_plus)},
                      {"w1_minus", optional_label(q.w1_minus)},
                      {"w1_plus", optional_label(q.w1_plus)}};

  Json targets = Json::array();
  for (int k = 0; k < n; ++k) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      targets.push_back({{"k", k}, {"sign", to_string(s)}, {"members", target_set(model, O, k, s)}});
    }
  }
  rec["target_sets"] = std::move(targets);

  Json mm = Json::array();
  for (Sign s : {Sign::minus, Sign::plus}) {
    Json entry{{"k", n - 1}, {"sign", to_string(s)}};
    if (target_set(model, O, n - 1, s).empty()) {
      entry["closest_x0"] = nullptr;
      entry["closest_x1"] = nullptr;
      entry["most_distant_x0"] = nullptr;
      entry["most_distant_x1"] = nullptr;
    } else {
      const MinimaxEquilibria e = minimax(model, O, n - 1, s);
      entry["closest_x0"] = e.closest_x0;
      entry["closest_x1"] = e.closest_x1;
      entry["most_distant_x0"] = e.most_distant_x0;
      entry["most_distant_x1"] = e.most_distant_x1;
    }
    mm.push_back(std::move(entry));
  }
  rec["minimax"] = std::move(mm);

  Json ids = Json::array();
  for (const NeighborIdentification& id : identify_neighbors(model, O)) {
    Json e{{"boundary", to_string(id.boundary)},
           {"side", to_string(id.side)},
           {"neighbor", id.neighbor},
           {"neighbor_morse", id.neighbor_morse},
           {"applicable", id.applicable}};
    if (id.applicable) {
      e["target_sign"] = to_string(id.target_sign);
      e["predicted"] = optional_label(id.predicted);
      e["holds"] = id.holds;
    }
    ids.push_back(std::move(e));
  }
  rec["identifications"] = std::move(ids);

  const TheoremVerdict v = verify_minimax_theorem(model, O);
  Json cases = Json::array();
  for (const MinimaxCase& c : v.cases) {
    Json e{{"boundary", to_string(c.boundary)},
           {"sign", to_string(c.sign)},
           {"neighbor", c.neighbor},
           {"closest", c.closest},
           {"most_distant_opposite", c.most_distant_opposite},
           {"neighbor_identified", c.neighbor_identified},
           {"minimax_holds", c.minimax_holds}};
    if (c.blocking_triple) e["blocking_triple"] = *c.blocking_triple;
    cases.push_back(std::move(e));
  }
  Json extended = Json::array();
  for (const ExtendedMinimaxCheck& c : v.extended) {
    extended.push_back({{"k", c.k},
                        {"sign", to_string(c.sign)},
                        {"boundary", to_string(c.boundary)},
                        {"closest", c.closest},
                        {"most_distant_opposite", c.most_distant_opposite},
                        {"holds", c.holds}});
  }
  rec["verdicts"] = {{"theorem", v.passed() ? "pass" : "fail"},
                     {"cases", std::move(cases)},
                     {"extended", v.extended_passed() ? "pass" : "fail"},
                     {"extended_checks", std::move(extended)}};
  return rec;
}

}  // namespace

std::string validate_text(const Permutation& p) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  const MorseVector m = morse_indices(p);
  std::ostringstream out;
  out << "n: " << p.size() << '\n';
  out << "dissipative: " << b(is_dissipative(p)) << '\n';
  out << "morse: " << b(is_morse(p)) << '\n';
  out << "meander: " << b(is_meander(p)) << '\n';
  out << "sturm: " << b(is_sturm(p)) << '\n';
  out << "morse_indices: [";
  for (int j = 1; j <= m.size(); ++j) out << (j > 1 ? "," : "") << m[j];
  out << "]\n";
  return out.str();
}

std::string analyze_json(const AttractorModel& model) {
  const Permutation& p = model.permutation();
  Json doc;
  doc["index_base"] = 1;
  doc["n"] = p.size();
  doc["sigma"] = to_json(p.one_line());
  doc["sigma_inverse"] = to_json(p.inverse_line());
  doc["morse"] = to_json(model.morse().values());
  doc["z_matrix"] = matrix_json(model.z());
  Json edges = Json::array();
  for (auto [a, b] : model.connections()) edges.push_back({a, b});
  doc["connections"] = std::move(edges);
  Json records = Json::array();
  for (Label O = 1; O <= p.size(); ++O) {
    if (model.morse()[O] > 0) records.push_back(minimax_record(model, O));
  }
  doc["minimax"] = std::move(records);
  return dump(doc);
}

std::string minimax_json(const AttractorModel& model, Label O) {
  Json doc;
  doc["index_base"] = 1;
  doc["sigma"] = to_json(model.permutation().one_line());
  doc["report"] = minimax_record(model, O);
  return dump(doc);
}

std::string suspension_json(const SuspensionReport& report) {
  Json doc;
  doc["index_base"] = 1;
  doc["sigma"] = to_json(report.original.one_line());
  doc["suspended"] = to_json(report.suspended.one_line());
  Json checks = Json::array();
  for (const SuspensionCheck& c : report.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = report.passed();
  return dump(doc);
}

std::string harness_json(const HarnessReport& report) {
  Json doc;
  doc["n_max"] = report.n_max;
  Json counts = Json::object();
  for (std::size_t i = 0; i < report.counts.size(); ++i) counts[std::to_string(2 * i + 1)] = report.counts[i];
  doc["counts"] = std::move(counts);
  doc["permutations_checked"] = report.permutations_checked;
  Json props = Json::array();
  for (const PropertyResult& r : report.properties) {
    Json e{{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}};
    if (r.first_counterexample) e["first_counterexample"] = *r.first_counterexample;
    props.push_back(std::move(e));
  }
  doc["properties"] = std::move(props);
  doc["passed"] = report.passed();
  return dump(doc);
}

std::string window_json(const MeanderWindow& win) {
  Json doc;
  doc["index_base"] = 1;
  doc["length"] = win.length();
  doc["anchor_morse"] = win.anchor_morse();
  doc["morse"] = window_morse(win);
  doc["z_matrix"] = matrix_json(window_z(win));
  return dump(doc);
}

std::string window_text(const MeanderWindow& win) {
  const std::vector<int> m = window_morse(win);
  std::ostringstream out;
  out << "morse:";
  for (int v : m) out << ' ' << v;
  out << "\nz_matrix:\n" << window_z(win).to_text();
  return out.str();
}

std::string to_dot(const AttractorModel& model) {
  std::ostringstream out;
  out << "digraph attractor {\n";
  out << "  rankdir=TB;\n";
  for (Label j = 1; j <= model.size(); ++j) {
    out << "  " << j << " [label=\"" << j << "\\ni=" << model.morse()[j] << "\"];\n";
  }
  for (auto [a, b] : model.connections()) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sturm
