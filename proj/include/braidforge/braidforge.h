#ifndef BRAIDFORGE_H
#define BRAIDFORGE_H

/* C interface to the braidforge library.
 *
 * Every call returns an owned bf_result; query its status and payload, then
 * release it with bf_result_free. Payloads are UTF-8 JSON documents except
 * bf_render (plain text) and bf_enumerate_specs (JSON lines).
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bf_result bf_result;

enum {
  BF_OK = 0,
  BF_PARSE_ERROR = 2,
  BF_VALIDATION_ERROR = 3,
  BF_INTERNAL_ERROR = 4
};

/* Status code of the result, one of the BF_* values. */
int bf_result_status(const bf_result* r);

/* Payload on success, NULL on failure. Owned by the result. */
const char* bf_result_json(const bf_result* r);

/* Error message on failure, NULL on success. Owned by the result. */
const char* bf_result_error(const bf_result* r);

void bf_result_free(bf_result* r);

const char* bf_version(void);

/* spec is the text form: T[(r,s),...] or V[(u,~v),...;(r,s),...;(p,q)].
 * jones_limit bounds the crossing count for the bracket-based polynomial;
 * pass a negative value for the default (16). */
bf_result* bf_convert(const char* spec, int jones_limit);
bf_result* bf_classify(const char* spec, int jones_limit);
bf_result* bf_verify(const char* spec, int jones_limit);
bf_result* bf_profile(const char* spec, int jones_limit);

/* ASCII diagram of the spec's minimal braid, one row per crossing. */
bf_result* bf_render(const char* spec);

/* One enumeration record (JSON) for a single T-spec. */
bf_result* bf_classify_line(const char* spec);

/* JSON lines for every normalized T-spec within the bounds, in deterministic
 * order, followed by a summary record; skip drops the first records (resume
 * by line count). workers > 1 computes records in parallel; output bytes are
 * identical for any worker count. Pass workers <= 0 for 1. */
bf_result* bf_enumerate_specs(int p_max, int q_max, int block_max, long long skip, int workers);

#ifdef __cplusplus
}
#endif

#endif
