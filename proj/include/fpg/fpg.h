/* fpg — shuffle/composition algebra of two-letter formal power series, the
 * affine feedback post-group, its post-Lie algebra, the coordinate Hopf
 * algebra with cointeracting coproducts, and numerical Chen-Fliess
 * evaluation of feedback loops.
 *
 * All functions return fpg_status; on any failure fpg_last_error() gives a
 * thread-local message. Output objects are owned by the caller and released
 * with the matching *_free; strings returned through char** are released
 * with fpg_string_free.
 *
 * Wire formats (shared with the CLI):
 *   series      {"max_degree": D, "terms": {"<word>": "<rational>"}}
 *   series2     {"max_degree": D, "e1": {...}, "e2": {...}}
 *   signal      {"h": <float>, "values": [<float>...]}
 *   trajectory  {"t": [...], "y": [...]}
 * Words are strings over '0','1' ("" is the empty word; "x0x1" spelling is
 * accepted on input). Rationals are "p" or "p/q" in decimal. Hopf
 * generators are "<word>:<channel>" tokens, channel 1 or 2.
 */

#ifndef FPG_H
#define FPG_H

#ifndef FPG_API
#if defined(_WIN32)
#define FPG_API
#else
#define FPG_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpg_status {
  FPG_OK = 0,
  FPG_VERIFY_FAILED = 1,  /* a verification suite reported failures */
  FPG_INVALID_INPUT = 2,  /* parse error or violated precondition */
  FPG_INTERNAL_ERROR = 3, /* broken internal invariant */
  FPG_NO_CONVERGENCE = 4  /* iteration exceeded its budget */
} fpg_status;

typedef struct fpg_series fpg_series;   /* one-channel series, exact rationals */
typedef struct fpg_series2 fpg_series2; /* two-channel series [e1, e2] */

FPG_API const char* fpg_version(void);
FPG_API const char* fpg_last_error(void);
FPG_API void fpg_string_free(char* text);

/* -- construction / serialization ---------------------------------------- */

FPG_API fpg_status fpg_series_parse(const char* json, fpg_series** out);
FPG_API fpg_status fpg_series_format(const fpg_series* s, char** json_out);
FPG_API void fpg_series_free(fpg_series* s);
FPG_API int fpg_series_max_degree(const fpg_series* s);

FPG_API fpg_status fpg_series2_parse(const char* json, fpg_series2** out);
FPG_API fpg_status fpg_series2_format(const fpg_series2* s, char** json_out);
FPG_API void fpg_series2_free(fpg_series2* s);
FPG_API int fpg_series2_max_degree(const fpg_series2* s);

/* Weighted degree of a word (x0 counts 2, x1 counts 1); -1 on bad input. */
FPG_API int fpg_word_wdeg(const char* word);

/* -- shuffle algebra ------------------------------------------------------ */

FPG_API fpg_status fpg_shuffle(const fpg_series* a, const fpg_series* b,
                       fpg_series** out);
FPG_API fpg_status fpg_shuffle_inverse(const fpg_series* a, fpg_series** out);
/* Unshuffle coproduct of a word: JSON [[left, right, coeff]...]. */
FPG_API fpg_status fpg_unshuffle(const char* word, char** json_out);
FPG_API fpg_status fpg_series_add(const fpg_series* a, const fpg_series* b,
                          fpg_series** out);
FPG_API fpg_status fpg_series_scale(const fpg_series* a, const char* rational,
                            fpg_series** out);
FPG_API fpg_status fpg_series_truncate(const fpg_series* a, int degree,
                               fpg_series** out);
FPG_API fpg_status fpg_series_coefficient(const fpg_series* a, const char* word,
                                  char** rational_out);

/* -- composition products ------------------------------------------------- */

FPG_API fpg_status fpg_compose(const fpg_series* c, const fpg_series* d,
                       fpg_series** out);
FPG_API fpg_status fpg_mixed_compose(const fpg_series* c, const fpg_series2* d,
                             fpg_series** out);
FPG_API fpg_status fpg_triangle(const fpg_series2* c, const fpg_series2* d,
                        fpg_series2** out);

/* -- affine feedback post-group (arguments must have unit channel-1
 *    constant term) -------------------------------------------------------- */

FPG_API fpg_status fpg_dot_mul(const fpg_series2* c, const fpg_series2* d,
                       fpg_series2** out);
FPG_API fpg_status fpg_dot_inv(const fpg_series2* c, fpg_series2** out);
FPG_API fpg_status fpg_star_mul(const fpg_series2* c, const fpg_series2* d,
                        fpg_series2** out);
FPG_API fpg_status fpg_star_inv(const fpg_series2* c, fpg_series2** out);
/* Solves x <| d = y for x. */
FPG_API fpg_status fpg_r_tri_solve(const fpg_series2* y, const fpg_series2* d,
                           fpg_series2** out);
FPG_API fpg_status fpg_opposite_act(const fpg_series2* a, const fpg_series2* b,
                            fpg_series2** out);
FPG_API fpg_status fpg_pi1(const fpg_series2* c, fpg_series** out);
FPG_API fpg_status fpg_embed(const fpg_series* c, fpg_series2** out);

/* -- post-Lie algebra (arguments must have proper channel 1) -------------- */

FPG_API fpg_status fpg_lie_bracket(const fpg_series2* u, const fpg_series2* v,
                           fpg_series2** out);
FPG_API fpg_status fpg_post_lie_act(const fpg_series2* u, const fpg_series2* v,
                            fpg_series2** out);
FPG_API fpg_status fpg_derived_bracket(const fpg_series2* u, const fpg_series2* v,
                               fpg_series2** out);
FPG_API fpg_status fpg_lie_bullet(const fpg_series2* u, const fpg_series2* v,
                          fpg_series2** out);
/* Interpolation oracle for the post-Lie product (must agree with it). */
FPG_API fpg_status fpg_linearize_action(const fpg_series2* u, const fpg_series2* v,
                                fpg_series2** out);

/* -- coordinate Hopf algebra ----------------------------------------------
 * Tensors serialize as [[mon_left, mon_right, coeff]...], elements as
 * [[mon, coeff]...], monomials as sorted generator-token lists. */

FPG_API fpg_status fpg_hopf_delta(const char* generator, int max_degree,
                          char** json_out);
FPG_API fpg_status fpg_hopf_rho(const char* generator, int max_degree,
                        char** json_out);
FPG_API fpg_status fpg_hopf_coproduct(const char* generator, int max_degree,
                              char** json_out);
FPG_API fpg_status fpg_hopf_antipode(const char* generator, int max_degree,
                             char** json_out);
/* Coefficient the generator reads off a group element. */
FPG_API fpg_status fpg_hopf_evaluate(const char* generator, const fpg_series2* c,
                             char** rational_out);
/* delta/rho/coproduct/antipode rows for every generator of degree <= N. */
FPG_API fpg_status fpg_hopf_table(int max_degree, char** json_out);

/* -- numerical Chen-Fliess semantics -------------------------------------- */

FPG_API fpg_status fpg_evaluate_cf(const fpg_series* c, const char* signal_json,
                           char** trajectory_json);
FPG_API fpg_status fpg_evaluate_ff(const fpg_series2* c, const char* signal_json,
                           char** trajectory_json);
/* Picard simulation of y = F_c[u*F_{d1}[y] + F_{d2}[y]]. */
FPG_API fpg_status fpg_feedback_sim(const fpg_series* c, const fpg_series2* d,
                            const char* signal_json, double picard_tol,
                            int max_iter, char** trajectory_json);
/* Exact closed-loop generating series (d1 needs unit constant term). */
FPG_API fpg_status fpg_closed_loop_series(const fpg_series* c, const fpg_series2* d,
                                  fpg_series** out);

/* -- verification suites ---------------------------------------------------
 * Suites: shuffle, group, postgroup, postlie, hopf-duality, cointeraction,
 * numeric. max_degree/cases <= 0 pick the suite defaults. Returns
 * FPG_VERIFY_FAILED (with the full report still written) when any case
 * fails. Same seed, same report, byte for byte apart from wall_ms. */

FPG_API fpg_status fpg_run_suite(const char* suite, int max_degree, int cases,
                         unsigned long long seed, char** report_json);
FPG_API fpg_status fpg_suite_names(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FPG_H */
