/* C interface to the Sturm permutation library.
 *
 * Every function returns a sturm_status. On failure the thread-local message
 * from sturm_last_error() describes the cause; for parse failures
 * sturm_last_error_token() names the offending token (1-based, 0 when the
 * input as a whole is at fault).
 *
 * Labels and positions are 1-based. Strings returned through `char** out`
 * are owned by the caller and released with sturm_string_free().
 */
#ifndef STURM_STURM_H
#define STURM_STURM_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef STURM_BUILDING_LIBRARY
#    define STURM_API __declspec(dllexport)
#  else
#    define STURM_API __declspec(dllimport)
#  endif
#else
#  define STURM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sturm_status {
  STURM_OK = 0,
  STURM_E_PARSE = 1,
  STURM_E_INVALID_ARGUMENT = 2,
  STURM_E_OUT_OF_RANGE = 3,
  STURM_E_NOT_STURM = 4,
  STURM_E_NOT_MEANDER = 5,
  STURM_E_INCONSISTENT_WINDOW = 6,
  STURM_E_BOUND_EXCEEDED = 7,
  STURM_E_BUFFER_TOO_SMALL = 8,
  STURM_E_INTERNAL = 9
} sturm_status;

typedef enum sturm_engine {
  STURM_ENGINE_AUTOMATIC = 0,
  STURM_ENGINE_FILTER = 1,
  STURM_ENGINE_BACKTRACK = 2
} sturm_engine;

typedef enum sturm_sign { STURM_MINUS = -1, STURM_PLUS = 1 } sturm_sign;

typedef struct sturm_perm sturm_perm;
typedef struct sturm_model sturm_model;

STURM_API const char* sturm_status_name(sturm_status status);
STURM_API const char* sturm_last_error(void);
STURM_API int sturm_last_error_token(void);
STURM_API void sturm_string_free(char* s);

/* Permutations */
STURM_API sturm_status sturm_perm_parse(const char* text, int zero_based, sturm_perm** out);
STURM_API sturm_status sturm_perm_from_array(const int* one_line, size_t n, sturm_perm** out);
STURM_API void sturm_perm_free(sturm_perm* p);
STURM_API size_t sturm_perm_size(const sturm_perm* p);
/* Copies the one-line form; `capacity` must be at least the size. */
STURM_API sturm_status sturm_perm_get(const sturm_perm* p, int* out, size_t capacity);
STURM_API sturm_status sturm_perm_format(const sturm_perm* p, int zero_based, char** out);
STURM_API sturm_status sturm_perm_inverse(const sturm_perm* p, sturm_perm** out);
STURM_API sturm_status sturm_perm_tau(const sturm_perm* p, sturm_perm** out);
STURM_API sturm_status sturm_perm_kappa(const sturm_perm* p, sturm_perm** out);

STURM_API int sturm_is_dissipative(const sturm_perm* p);
STURM_API int sturm_is_morse(const sturm_perm* p);
STURM_API int sturm_is_meander(const sturm_perm* p);
STURM_API int sturm_is_sturm(const sturm_perm* p);

STURM_API sturm_status sturm_morse_indices(const sturm_perm* p, int* out, size_t capacity);
STURM_API sturm_status sturm_crossing_number(const sturm_perm* p, int j, int k, int l, int* out);
/* Row-major n*n matrix with Morse indices on the diagonal. */
STURM_API sturm_status sturm_z_matrix(const sturm_perm* p, int* out, size_t capacity);
STURM_API sturm_status sturm_z_pair_nsl(const sturm_perm* p, int j, int k, int* out);

STURM_API sturm_status sturm_suspend(const sturm_perm* p, int times, sturm_perm** out);

/* Attractor model */
STURM_API sturm_status sturm_model_build(const sturm_perm* p, sturm_model** out);
STURM_API void sturm_model_free(sturm_model* m);
STURM_API sturm_status sturm_model_connects(const sturm_model* m, int j, int k, int* out);
/* Writes up to `capacity` labels and stores the full count in *count. */
STURM_API sturm_status sturm_model_target_set(const sturm_model* m, int eq, int k, sturm_sign sign, int* out,
                                              size_t capacity, size_t* count);
STURM_API sturm_status sturm_model_theorem_holds(const sturm_model* m, int eq, int* out);

/* Documents */
STURM_API sturm_status sturm_validate_text(const sturm_perm* p, char** out);
STURM_API sturm_status sturm_analyze_json(const sturm_perm* p, char** out);
STURM_API sturm_status sturm_minimax_json(const sturm_perm* p, int eq, char** out);
STURM_API sturm_status sturm_suspension_json(const sturm_perm* p, char** out, int* passed);
STURM_API sturm_status sturm_render_svg(const sturm_perm* p, double scale, int annotate_morse, int zero_based,
                                        char** out);
STURM_API sturm_status sturm_render_dot(const sturm_perm* p, char** out);

/* `order` lists window offsets (1..length) by increasing axis position. */
STURM_API sturm_status sturm_window_report(const int* order, size_t length, int anchor_morse, int as_json,
                                           char** out);

/* Enumeration. The callback receives each permutation's one-line form in
 * lexicographic order; returning non-zero stops the stream early. */
typedef int (*sturm_visit_fn)(const int* one_line, size_t n, void* user);
STURM_API sturm_status sturm_enumerate(int n, sturm_engine engine, int bound, unsigned threads, sturm_visit_fn visit,
                                       void* user, size_t* count);
STURM_API sturm_status sturm_harness_json(int n_max, int bound, unsigned threads, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* STURM_STURM_H */
