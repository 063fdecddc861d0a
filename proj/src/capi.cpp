#include "sturm/sturm.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "sturm/attractor.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "sturm/perm.hpp"
#include "sturm/report.hpp"
#include "sturm/suspension.hpp"
#include "sturm/zeronum.hpp"

struct sturm_perm {
  sturm::Permutation value;
};

struct sturm_model {
  sturm::AttractorModel value;
};

namespace {

thread_local std::string last_error;
thread_local int last_token = 0;

sturm_status status_of(sturm::Errc code) {
  switch (code) {
    case sturm::Errc::parse_error: return STURM_E_PARSE;
    case sturm::Errc::invalid_argument: return STURM_E_INVALID_ARGUMENT;
    case sturm::Errc::out_of_range: return STURM_E_OUT_OF_RANGE;
    case sturm::Errc::not_sturm: return STURM_E_NOT_STURM;
    case sturm::Errc::not_meander: return STURM_E_NOT_MEANDER;
    case sturm::Errc::inconsistent_window: return STURM_E_INCONSISTENT_WINDOW;
    case sturm::Errc::bound_exceeded: return STURM_E_BOUND_EXCEEDED;
  }
  return STURM_E_INTERNAL;
}

sturm_status fail(sturm_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
sturm_status guarded(F&& body) {
  last_error.clear();
  last_token = 0;
  try {
    return body();
  } catch (const sturm::ParseError& e) {
    last_token = e.token_index();
    return fail(STURM_E_PARSE, e.what());
  } catch (const sturm::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(STURM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(STURM_E_INTERNAL, e.what());
  } catch (...) {
    return fail(STURM_E_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sturm_status emit_string(char** out, const std::string& s) {
  if (!out) return fail(STURM_E_INVALID_ARGUMENT, "null output pointer");
  *out = copy_string(s);
  return STURM_OK;
}

sturm_status emit_perm(sturm_perm** out, sturm::Permutation p) {
  if (!out) return fail(STURM_E_INVALID_ARGUMENT, "null output pointer");
  *out = new sturm_perm{std::move(p)};
  return STURM_OK;
}

sturm_status copy_ints(std::span<const int> values, int* out, size_t capacity) {
  if (!out) return fail(STURM_E_INVALID_ARGUMENT, "null output buffer");
  if (capacity < values.size()) {
    return fail(STURM_E_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) + " of " +
                                              std::to_string(values.size()) + " values");
  }
  std::copy(values.begin(), values.end(), out);
  return STURM_OK;
}

#define STURM_REQUIRE(ptr)                                                         \
  do {                                                                             \
    if (!(ptr)) return fail(STURM_E_INVALID_ARGUMENT, "null argument: " #ptr);   \
  } while (0)

sturm::Sign sign_of(sturm_sign s) { return s == STURM_PLUS ? sturm::Sign::plus : sturm::Sign::minus; }

}  // namespace

extern "C" {

const char* sturm_status_name(sturm_status status) {
  switch (status) {
    case STURM_OK: return "ok";
    case STURM_E_PARSE: return "parse_error";
    case STURM_E_INVALID_ARGUMENT: return "invalid_argument";
    case STURM_E_OUT_OF_RANGE: return "out_of_range";
    case STURM_E_NOT_STURM: return "not_sturm";
    case STURM_E_NOT_MEANDER: return "not_meander";
    case STURM_E_INCONSISTENT_WINDOW: return "inconsistent_window";
    case STURM_E_BOUND_EXCEEDED: return "bound_exceeded";
    case STURM_E_BUFFER_TOO_SMALL: return "buffer_too_small";
    case STURM_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* sturm_last_error(void) { return last_error.c_str(); }
int sturm_last_error_token(void) { return last_token; }
void sturm_string_free(char* s) { std::free(s); }

sturm_status sturm_perm_parse(const char* text, int zero_based, sturm_perm** out) {
  return guarded([&] {
    STURM_REQUIRE(text);
    return emit_perm(out, sturm::parse_permutation(text, zero_based ? sturm::IndexBase::zero : sturm::IndexBase::one));
  });
}

sturm_status sturm_perm_from_array(const int* one_line, size_t n, sturm_perm** out) {
  return guarded([&] {
    STURM_REQUIRE(one_line);
    return emit_perm(out, sturm::Permutation(std::vector<int>(one_line, one_line + n)));
  });
}

void sturm_perm_free(sturm_perm* p) { delete p; }

size_t sturm_perm_size(const sturm_perm* p) { return p ? static_cast<size_t>(p->value.size()) : 0; }

sturm_status sturm_perm_get(const sturm_perm* p, int* out, size_t capacity) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return copy_ints(p->value.one_line(), out, capacity);
  });
}

sturm_status sturm_perm_format(const sturm_perm* p, int zero_based, char** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_string(out, sturm::format_permutation(p->value, zero_based ? sturm::IndexBase::zero
                                                                           : sturm::IndexBase::one));
  });
}

sturm_status sturm_perm_inverse(const sturm_perm* p, sturm_perm** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_perm(out, p->value.inverse());
  });
}

sturm_status sturm_perm_tau(const sturm_perm* p, sturm_perm** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_perm(out, sturm::apply_tau(p->value));
  });
}

sturm_status sturm_perm_kappa(const sturm_perm* p, sturm_perm** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_perm(out, sturm::apply_kappa(p->value));
  });
}

int sturm_is_dissipative(const sturm_perm* p) { return p && sturm::is_dissipative(p->value); }
int sturm_is_morse(const sturm_perm* p) { return p && sturm::is_morse(p->value); }
int sturm_is_meander(const sturm_perm* p) { return p && sturm::is_meander(p->value); }
int sturm_is_sturm(const sturm_perm* p) { return p && sturm::is_sturm(p->value); }

sturm_status sturm_morse_indices(const sturm_perm* p, int* out, size_t capacity) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return copy_ints(sturm::morse_indices(p->value).values(), out, capacity);
  });
}

sturm_status sturm_crossing_number(const sturm_perm* p, int j, int k, int l, int* out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    STURM_REQUIRE(out);
    *out = sturm::crossing_number(p->value, j, k, l);
    return STURM_OK;
  });
}

sturm_status sturm_z_matrix(const sturm_perm* p, int* out, size_t capacity) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return copy_ints(sturm::z_matrix(p->value).row_major(), out, capacity);
  });
}

sturm_status sturm_z_pair_nsl(const sturm_perm* p, int j, int k, int* out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    STURM_REQUIRE(out);
    *out = sturm::z_pair_nsl(p->value, j, k);
    return STURM_OK;
  });
}

sturm_status sturm_suspend(const sturm_perm* p, int times, sturm_perm** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_perm(out, sturm::suspend(p->value, times));
  });
}

sturm_status sturm_model_build(const sturm_perm* p, sturm_model** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    STURM_REQUIRE(out);
    *out = new sturm_model{sturm::build_model(p->value)};
    return STURM_OK;
  });
}

void sturm_model_free(sturm_model* m) { delete m; }

sturm_status sturm_model_connects(const sturm_model* m, int j, int k, int* out) {
  return guarded([&] {
    STURM_REQUIRE(m);
    STURM_REQUIRE(out);
    *out = sturm::connects(m->value, j, k) ? 1 : 0;
    return STURM_OK;
  });
}

sturm_status sturm_model_target_set(const sturm_model* m, int eq, int k, sturm_sign sign, int* out, size_t capacity,
                                    size_t* count) {
  return guarded([&] {
    STURM_REQUIRE(m);
    STURM_REQUIRE(count);
    const std::vector<int> members = sturm::target_set(m->value, eq, k, sign_of(sign));
    *count = members.size();
    if (members.empty()) return STURM_OK;
    return copy_ints(members, out, capacity);
  });
}

sturm_status sturm_model_theorem_holds(const sturm_model* m, int eq, int* out) {
  return guarded([&] {
    STURM_REQUIRE(m);
    STURM_REQUIRE(out);
    *out = sturm::verify_minimax_theorem(m->value, eq).passed() ? 1 : 0;
    return STURM_OK;
  });
}

sturm_status sturm_validate_text(const sturm_perm* p, char** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_string(out, sturm::validate_text(p->value));
  });
}

sturm_status sturm_analyze_json(const sturm_perm* p, char** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_string(out, sturm::analyze_json(sturm::build_model(p->value)));
  });
}

sturm_status sturm_minimax_json(const sturm_perm* p, int eq, char** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    const sturm::AttractorModel model = sturm::build_model(p->value);
    if (eq < 1 || eq > model.size()) {
      return fail(STURM_E_OUT_OF_RANGE, "equilibrium " + std::to_string(eq) + " outside 1.." + std::to_string(model.size()));
    }
    if (model.morse()[eq] == 0) {
      return fail(STURM_E_INVALID_ARGUMENT, "equilibrium " + std::to_string(eq) + " is stable (Morse index 0)");
    }
    return emit_string(out, sturm::minimax_json(model, eq));
  });
}

sturm_status sturm_suspension_json(const sturm_perm* p, char** out, int* passed) {
  return guarded([&] {
    STURM_REQUIRE(p);
    const sturm::SuspensionReport report = sturm::verify_suspension(p->value);
    if (passed) *passed = report.passed() ? 1 : 0;
    return emit_string(out, sturm::suspension_json(report));
  });
}

sturm_status sturm_render_svg(const sturm_perm* p, double scale, int annotate_morse, int zero_based, char** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    sturm::SvgStyle style;
    style.scale = scale;
    style.annotate_morse = annotate_morse != 0;
    style.zero_based_labels = zero_based != 0;
    return emit_string(out, sturm::render_svg(p->value, style));
  });
}

sturm_status sturm_render_dot(const sturm_perm* p, char** out) {
  return guarded([&] {
    STURM_REQUIRE(p);
    return emit_string(out, sturm::to_dot(sturm::build_model(p->value)));
  });
}

sturm_status sturm_window_report(const int* order, size_t length, int anchor_morse, int as_json, char** out) {
  return guarded([&] {
    STURM_REQUIRE(order);
    const sturm::MeanderWindow win =
        sturm::MeanderWindow::from_axis_sequence(std::vector<int>(order, order + length), anchor_morse);
    return emit_string(out, as_json ? sturm::window_json(win) : sturm::window_text(win));
  });
}

sturm_status sturm_enumerate(int n, sturm_engine engine, int bound, unsigned threads, sturm_visit_fn visit,
                             void* user, size_t* count) {
  return guarded([&] {
    sturm::EnumerateOptions options;
    if (bound > 0) options.bound = bound;
    options.threads = threads;
    switch (engine) {
      case STURM_ENGINE_FILTER: options.engine = sturm::Engine::filter; break;
      case STURM_ENGINE_BACKTRACK: options.engine = sturm::Engine::backtrack; break;
      default: options.engine = sturm::Engine::automatic; break;
    }
    const std::vector<sturm::Permutation> all = sturm::enumerate_sturm(n, options);
    size_t visited = 0;
    for (const sturm::Permutation& p : all) {
      ++visited;
      if (visit && visit(p.one_line().data(), p.one_line().size(), user) != 0) break;
    }
    if (count) *count = visit ? visited : all.size();
    return STURM_OK;
  });
}

sturm_status sturm_harness_json(int n_max, int bound, unsigned threads, char** out, int* passed) {
  return guarded([&] {
    sturm::EnumerateOptions options;
    if (bound > 0) options.bound = bound;
    options.threads = threads;
    const sturm::HarnessReport report = sturm::property_harness(n_max, options);
    if (passed) *passed = report.passed() ? 1 : 0;
    return emit_string(out, sturm::harness_json(report));
  });
}

}  // extern "C"
