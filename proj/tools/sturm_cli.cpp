// Command-line front end over the C interface of libsturm.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sturm/sturm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int report_error(sturm_status status) {
  std::cerr << "error: " << sturm_status_name(status) << ": " << sturm_last_error() << '\n';
  const bool usage = status == STURM_E_PARSE || status == STURM_E_INVALID_ARGUMENT ||
                     status == STURM_E_OUT_OF_RANGE || status == STURM_E_BOUND_EXCEEDED;
  return usage ? kExitUsage : kExitFailure;
}

struct PermGuard {
  sturm_perm* p = nullptr;
  ~PermGuard() { sturm_perm_free(p); }
};

struct Text {
  char* s = nullptr;
  ~Text() { sturm_string_free(s); }
};

struct InputOptions {
  std::vector<std::string> tokens;
  std::string file;
  bool zero_based_input = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("permutation", tokens, "One-line permutation; read from stdin when omitted");
    cmd->add_option("--input", file, "Read the permutation from a file");
    cmd->add_flag("--zero-based-input", zero_based_input, "Interpret the input as labels 0..N-1");
  }

  std::string text() const {
    if (!tokens.empty()) {
      std::string joined;
      for (const auto& t : tokens) joined += t + " ";
      return joined;
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw CLI::ValidationError("--input", "cannot open " + file);
      return {std::istreambuf_iterator<char>(in), {}};
    }
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
};

sturm_status load(const InputOptions& in, PermGuard& guard) {
  const std::string text = in.text();
  return sturm_perm_parse(text.c_str(), in.zero_based_input ? 1 : 0, &guard.p);
}

int print(sturm_status status, Text& t) {
  if (status != STURM_OK) return report_error(status);
  std::fputs(t.s, stdout);
  return kExitOk;
}

int enumerate_visit(const int* one_line, size_t n, void* user) {
  const int shift = *static_cast<int*>(user);
  std::string line;
  for (size_t k = 0; k < n; ++k) {
    if (k) line += ' ';
    line += std::to_string(one_line[k] - shift);
  }
  line += '\n';
  std::fputs(line.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturm permutations: meanders, Morse indices, zero numbers, connections and minimax equilibria"};
  app.require_subcommand(1);

  InputOptions in_validate, in_analyze, in_minimax, in_suspend, in_render;

  auto* validate = app.add_subcommand("validate", "Check dissipative / Morse / meander / Sturm");
  in_validate.attach(validate);

  auto* analyze = app.add_subcommand("analyze", "Full JSON report: Morse vector, zero numbers, connections");
  in_analyze.attach(analyze);

  int eq = 0;
  auto* minimax = app.add_subcommand("minimax", "Boundary neighbours, target sets and minimax verdict for one equilibrium");
  in_minimax.attach(minimax);
  minimax->add_option("--eq", eq, "Meander label of the equilibrium")->required();

  int times = 1;
  bool zero_based_out = false;
  bool suspension_report = false;
  auto* suspend = app.add_subcommand("suspend", "Meander suspension");
  in_suspend.attach(suspend);
  suspend->add_option("--times", times, "Number of suspensions")->check(CLI::NonNegativeNumber);
  suspend->add_flag("--zero-based", zero_based_out, "Print labels 0..N+1");
  suspend->add_flag("--report", suspension_report, "Verify the suspension lemmas and print a JSON report");

  int anchor_morse = 0;
  std::string order_text;
  bool window_as_json = false;
  bool matrix_only = false;
  auto* window = app.add_subcommand("window", "Morse indices and zero numbers of a meander segment");
  window->add_option("--anchor-morse", anchor_morse, "Morse index of the first window label")->required();
  window->add_option("--order", order_text, "Window labels 1..L listed by axis position")->required();
  auto* json_flag = window->add_flag("--json", window_as_json, "Emit JSON");
  window->add_flag("--matrix-only", matrix_only, "Emit only the matrix rows")->excludes(json_flag);

  int n = 0;
  bool count_only = false;
  std::string engine_name = "auto";
  int bound = 0;
  unsigned threads = 1;
  bool enum_zero_based = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream all Sturm permutations of size N");
  enumerate->add_option("--n", n, "Odd size")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_option("--engine", engine_name, "auto, filter or backtrack")
      ->check(CLI::IsMember({"auto", "filter", "backtrack"}));
  enumerate->add_option("--bound", bound, "Largest admissible size (default 11)");
  enumerate->add_option("--threads", threads, "Worker threads for backtracking; 0 = hardware");
  enumerate->add_flag("--zero-based", enum_zero_based, "Print labels 0..N-1");

  std::string format = "svg";
  double scale = 40.0;
  bool no_morse = false;
  bool render_zero_based = false;
  auto* render = app.add_subcommand("render", "Draw the meander (SVG) or the connection graph (DOT)");
  in_render.attach(render);
  render->add_option("--format", format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));
  render->add_option("--scale", scale, "Pixels between adjacent crossings")->check(CLI::PositiveNumber);
  render->add_flag("--no-morse", no_morse, "Omit Morse index annotations");
  render->add_flag("--zero-based", render_zero_based, "Label crossings 0..N-1");

  int n_max = 0;
  int harness_bound = 0;
  unsigned harness_threads = 1;
  auto* harness = app.add_subcommand("harness", "Run every property over all Sturm permutations up to N");
  harness->add_option("--n-max", n_max, "Largest odd size")->required();
  harness->add_option("--bound", harness_bound, "Enumeration bound (default 11)");
  harness->add_option("--threads", harness_threads, "Worker threads for enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  PermGuard perm;
  Text out;
  try {
    if (*validate) {
      if (sturm_status s = load(in_validate, perm); s != STURM_OK) return report_error(s);
      if (int rc = print(sturm_validate_text(perm.p, &out.s), out); rc != kExitOk) return rc;
      return sturm_is_sturm(perm.p) ? kExitOk : kExitFailure;
    }
    if (*analyze) {
      if (sturm_status s = load(in_analyze, perm); s != STURM_OK) return report_error(s);
      return print(sturm_analyze_json(perm.p, &out.s), out);
    }
    if (*minimax) {
      if (sturm_status s = load(in_minimax, perm); s != STURM_OK) return report_error(s);
      if (int rc = print(sturm_minimax_json(perm.p, eq, &out.s), out); rc != kExitOk) return rc;
      sturm_model* model = nullptr;
      if (sturm_status s = sturm_model_build(perm.p, &model); s != STURM_OK) return report_error(s);
      int holds = 0;
      const sturm_status s = sturm_model_theorem_holds(model, eq, &holds);
      sturm_model_free(model);
      if (s != STURM_OK) return report_error(s);
      return holds ? kExitOk : kExitFailure;
    }
    if (*suspend) {
      if (sturm_status s = load(in_suspend, perm); s != STURM_OK) return report_error(s);
      if (suspension_report) {
        if (times != 1) {
          std::cerr << "error: usage: --report verifies a single suspension\n";
          return kExitUsage;
        }
        int passed = 0;
        if (int rc = print(sturm_suspension_json(perm.p, &out.s, &passed), out); rc != kExitOk) return rc;
        return passed ? kExitOk : kExitFailure;
      }
      PermGuard result;
      if (sturm_status s = sturm_suspend(perm.p, times, &result.p); s != STURM_OK) return report_error(s);
      if (sturm_status s = sturm_perm_format(result.p, zero_based_out ? 1 : 0, &out.s); s != STURM_OK) {
        return report_error(s);
      }
      std::printf("%s\n", out.s);
      return kExitOk;
    }
    if (*window) {
      std::vector<int> order;
      std::string token;
      std::istringstream tokens(order_text);
      while (std::getline(tokens, token, ' ')) {
        for (auto& part : CLI::detail::split(token, ',')) {
          if (part.empty()) continue;
          try {
            std::size_t used = 0;
            order.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
          } catch (const std::exception&) {
            std::cerr << "error: parse_error: --order entry '" << part << "' is not an integer\n";
            return kExitUsage;
          }
        }
      }
      if (sturm_status s = sturm_window_report(order.data(), order.size(), anchor_morse, window_as_json ? 1 : 0, &out.s);
          s != STURM_OK) {
        return report_error(s);
      }
      std::string text = out.s;
      if (matrix_only) text = text.substr(text.find("z_matrix:\n") + 10);
      std::fputs(text.c_str(), stdout);
      return kExitOk;
    }
    if (*enumerate) {
      const sturm_engine engine = engine_name == "filter"      ? STURM_ENGINE_FILTER
                                  : engine_name == "backtrack" ? STURM_ENGINE_BACKTRACK
                                                               : STURM_ENGINE_AUTOMATIC;
      int shift = enum_zero_based ? 1 : 0;
      size_t count = 0;
      const sturm_status s =
          sturm_enumerate(n, engine, bound, threads, count_only ? nullptr : enumerate_visit, &shift, &count);
      if (s != STURM_OK) return report_error(s);
      if (count_only) std::printf("%zu\n", count);
      return kExitOk;
    }
    if (*render) {
      if (sturm_status s = load(in_render, perm); s != STURM_OK) return report_error(s);
      if (format == "dot") return print(sturm_render_dot(perm.p, &out.s), out);
      return print(sturm_render_svg(perm.p, scale, no_morse ? 0 : 1, render_zero_based ? 1 : 0, &out.s), out);
    }
    if (*harness) {
      int passed = 0;
      if (int rc = print(sturm_harness_json(n_max, harness_bound, harness_threads, &out.s, &passed), out); rc != kExitOk) {
        return rc;
      }
      return passed ? kExitOk : kExitFailure;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
