/*
 * ytwist C API: exact verification and classification engine for Yangians
 * Y(gl_N) and twisted Yangians Y(o_2n), Y(sp_2n) over Q and F_p.
 *
 * All requests and responses are JSON strings. Responses are allocated by
 * the library and must be released with ytw_string_free. Errors leave a
 * diagnostic on the engine, readable via ytw_engine_last_error.
 */
#ifndef YTW_H
#define YTW_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ytw_engine ytw_engine;

/* Return codes (CLI exit codes mirror these). */
#define YTW_OK 0
#define YTW_ERR_CHECK_FAILED 1 /* checks ran and at least one failed        */
#define YTW_ERR_CONFIG 2       /* malformed configuration                   */
#define YTW_ERR_HYPOTHESIS 3   /* hypothesis ledger violated (skipped runs) */
#define YTW_ERR_INTERNAL 4

ytw_engine* ytw_engine_new(void);
void ytw_engine_free(ytw_engine* engine);

const char* ytw_version(void);

/* Last error message of a failed call; owned by the engine. */
const char* ytw_engine_last_error(const ytw_engine* engine);

/*
 * Generic entry point. request_json carries {"command": "...", ...} with
 * command one of: verify, drinfeld, stability, brauer, qdet, sdet.
 * On success (and on YTW_ERR_CHECK_FAILED / YTW_ERR_HYPOTHESIS, which still
 * produce a report) *response_json receives the report.
 */
int ytw_run(ytw_engine* engine, const char* request_json, char** response_json);

/* Convenience wrappers: the command field is injected. */
int ytw_verify(ytw_engine* engine, const char* config_json, char** response_json);
int ytw_drinfeld(ytw_engine* engine, const char* config_json, char** response_json);
int ytw_stability(ytw_engine* engine, const char* config_json, char** response_json);
int ytw_brauer(ytw_engine* engine, const char* config_json, char** response_json);
int ytw_qdet(ytw_engine* engine, const char* config_json, char** response_json);
int ytw_sdet(ytw_engine* engine, const char* config_json, char** response_json);

void ytw_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* YTW_H */
