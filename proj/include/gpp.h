/* C interface to the pattern-potential solver library.
 *
 * All objects are opaque handles created from JSON text and released with
 * their _free function. Functions return gpp_status; on failure
 * gpp_last_error() holds a one-line JSON diagnostic for the calling thread.
 * Strings returned through char** are heap-allocated; release them with
 * gpp_string_free.
 */

#ifndef GPP_H
#define GPP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpp_status {
    GPP_OK = 0,
    GPP_ERR_VALIDATION = 2,
    GPP_ERR_CAPACITY = 3,
    GPP_ERR_MODE = 4,
    GPP_ERR_INTERNAL = 5
} gpp_status;

typedef struct gpp_language gpp_language;
typedef struct gpp_instance gpp_instance;

const char* gpp_last_error(void);
void gpp_string_free(char* text);

gpp_status gpp_language_parse(const char* json_text, gpp_language** out);
gpp_status gpp_language_from_file(const char* path, gpp_language** out);
void gpp_language_free(gpp_language* language);

gpp_status gpp_instance_parse(const char* json_text, gpp_instance** out);
gpp_status gpp_instance_from_file(const char* path, gpp_instance** out);
void gpp_instance_free(gpp_instance* instance);

/* Closure report:
 * {"kind","size","reported_size","includes_epsilon","includes_bottom",
 *  "hasse_edges"?,"star_size"?,"bound","bound_satisfied"}.
 * with_star adds star_size, with_hasse adds hasse_edges. */
gpp_status gpp_closure_report(const gpp_language* language, int with_star, int with_hasse,
                              char** out_json);

/* Hasse diagram export {"nodes":[...],"edges":[[parent,child]...]} of the
 * prefix+join closure (star = 0) or the full closure (star = 1). */
gpp_status gpp_hasse_export(const gpp_language* language, int star, char** out_json);

/* mode: "min" or "partition". semiring: "" (defaulted by mode), "minplus",
 * "sumprod" or "logsumexp". algorithm: "" or "auto", "neg-dp", "semiring".
 * Result record: {"value","argmin"?,"stats":{...}}. */
gpp_status gpp_solve(const gpp_instance* instance, const char* mode, const char* semiring,
                     const char* algorithm, int want_argmin, int exact, char** out_json);

/* Reference computation; method "brute" or "windowed", max_words bounds the
 * enumeration (0 keeps the default cap). */
gpp_status gpp_oracle(const gpp_instance* instance, const char* mode, const char* semiring,
                      const char* method, long long max_words, char** out_json);

/* Operation-count scaling sweep over chain lengths. */
gpp_status gpp_bench(const gpp_language* language, const long long* n_values, int n_count,
                     const char* semiring, char** out_json);

/* Example/test languages. example: "ex1", "roots", "products", "multiscale"
 * or "waves"; params is a JSON object of per-example settings (see the CLI
 * for the accepted keys). Optionally emits a random instance. */
gpp_status gpp_generate(const char* example, const char* params_json, char** out_language_json,
                        char** out_instance_json);

/* Energy of a word under an instance (letters are 1-based, length n). */
gpp_status gpp_evaluate_energy(const gpp_instance* instance, const int* letters, size_t count,
                               double* out_energy);

#ifdef __cplusplus
}
#endif

#endif
