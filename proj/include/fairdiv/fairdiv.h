#ifndef FAIRDIV_H
#define FAIRDIV_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FD_API
#define FD_API __attribute__((visibility("default")))
#endif

/* Functions return FD_OK on success. On failure, *errmsg (when errmsg is
 * non-NULL) receives a malloc'd description; release it with fd_string_free.
 * Every char** output parameter follows the same ownership rule. All JSON
 * crosses the boundary as UTF-8 strings with rationals encoded "p" or "p/q". */
typedef enum fd_status {
    FD_OK = 0,
    FD_ERR_PARSE = 1,
    FD_ERR_VALIDATION = 2,
    FD_ERR_GEOMETRY = 3,
    FD_ERR_INVALID_ARGUMENT = 4,
    FD_ERR_INFEASIBLE = 5,
    FD_ERR_PRECONDITION = 6,
    FD_ERR_LIMIT = 7,
    FD_ERR_INTERNAL = 8
} fd_status;

/* A scenario owns a geometry ("cake" or "pie"), named players with
 * piecewise-constant density measures, and optional named divisions. */
typedef struct fd_scenario fd_scenario;
typedef struct fd_division fd_division;

FD_API const char* fd_version(void); /* static string, do not free */
FD_API void fd_string_free(char* s);

FD_API fd_status fd_scenario_parse(const char* json, fd_scenario** out, char** errmsg);
FD_API void fd_scenario_free(fd_scenario* s);
FD_API int fd_scenario_players(const fd_scenario* s);
FD_API fd_status fd_scenario_to_json(const fd_scenario* s, char** json, char** errmsg);
/* JSON array of the scenario's division names, in document order. */
FD_API fd_status fd_scenario_division_names(const fd_scenario* s, char** names_json,
                                            char** errmsg);

/* Parse a standalone division against the scenario's geometry and player
 * count, or look one up by name. */
FD_API fd_status fd_division_parse(const fd_scenario* s, const char* json, fd_division** out,
                                   char** errmsg);
FD_API fd_status fd_scenario_division(const fd_scenario* s, const char* name, fd_division** out,
                                      char** errmsg);
FD_API void fd_division_free(fd_division* d);
FD_API fd_status fd_division_to_json(const fd_division* d, char** json, char** errmsg);

/* Row i holds player i's value of every share, as exact rationals. */
FD_API fd_status fd_sharing_matrix(const fd_scenario* s, const fd_division* d,
                                   char** matrix_json, char** errmsg);

/* Full fairness report: classical notions with worst-case witnesses, the
 * k-proportionality profile for k = 2..n, and both hierarchy bounds. */
FD_API fd_status fd_check(const fd_scenario* s, const fd_division* d, char** report_json,
                          char** errmsg);

/* algorithm: "cut-and-choose", "last-diminisher", "even-paz", "equitable".
 * The result document is itself a valid scenario (players plus the solved
 * division) with a "result" block carrying query counts and the sharing
 * matrix, so it can be fed back to fd_scenario_parse and re-checked. */
FD_API fd_status fd_solve(const fd_scenario* s, const char* algorithm, char** result_json,
                          char** errmsg);

/* Partition of players into classes of pairwise-equal measures. */
FD_API fd_status fd_equality_classes(const fd_scenario* s, char** classes_json, char** errmsg);
FD_API fd_status fd_strong_k_exists(const fd_scenario* s, int k, int* exists, char** errmsg);
/* Constructs a strong k-proportional division; FD_ERR_PRECONDITION when none
 * exists for this k. */
FD_API fd_status fd_strong_k_division(const fd_scenario* s, int k, char** result_json,
                                      char** errmsg);

/* Exhaustive grid search certifying that no connected pie division for n
 * players is both equitable and k-proportional (k = 0 selects n-1). grid is
 * the number of grid cells on the circle, a positive multiple of 6; each of
 * refine_rounds halves the step around the best candidates. The certificate
 * reports the minimum violation found, exact at the final candidate. */
FD_API fd_status fd_certify_pie(int n, int grid, int refine_rounds, int k, int threads,
                                char** cert_json, char** errmsg);

/* Exhaustive grid search certifying that on a fixed cake instance every
 * connected (n-1)-proportional division on the grid is dominated by one
 * division that is not (n-1)-proportional. grid must be a positive multiple
 * of 2n. */
FD_API fd_status fd_certify_cake(int n, int grid, int threads, char** cert_json, char** errmsg);

FD_API fd_status fd_fixture_names(char** names_json, char** errmsg);
FD_API fd_status fd_fixture(const char* name, char** scenario_json, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif
