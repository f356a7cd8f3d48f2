#ifndef NICHOLS_C_H
#define NICHOLS_C_H

/* C interface to the nichols library. Every function returns an nb_status;
 * on failure nb_last_error() describes the problem. Strings handed out
 * through `out` are owned by the caller and released with nb_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NB_API __declspec(dllexport)
#else
#define NB_API __attribute__((visibility("default")))
#endif

typedef struct nb_session nb_session;

typedef enum nb_status {
  NB_OK = 0,
  NB_ERR_ARGUMENT = 1,   /* bad index, unknown module or tuple, null pointer */
  NB_ERR_PARSE = 2,      /* malformed session file */
  NB_ERR_VALIDATION = 3, /* cocycle or Yetter-Drinfeld axioms fail */
  NB_ERR_UNDECIDED = 4,  /* an ad cutoff was reached before the answer was known */
  NB_ERR_RESOURCE = 5,   /* word or vertex bound exceeded */
  NB_ERR_INTERNAL = 7
} nb_status;

typedef enum nb_format { NB_FORMAT_TEXT = 0, NB_FORMAT_JSON = 1 } nb_format;

NB_API const char* nb_version(void);
/* Message of the last failing call on this thread ("" if none). */
NB_API const char* nb_last_error(void);
NB_API void nb_string_free(char* s);

NB_API nb_status nb_session_open_file(const char* path, nb_session** out);
NB_API nb_status nb_session_open_string(const char* json_text, nb_session** out);
NB_API void nb_session_close(nb_session* s);

/* *passed is set to 1 or 0; a failed validation is still NB_OK here. */
NB_API nb_status nb_validate(nb_session* s, nb_format f, int* passed, char** out);
/* target is a module, a tuple, or a comma-separated list of modules. */
NB_API nb_status nb_nichols(nb_session* s, const char* target, unsigned max_degree, nb_format f, char** out);
/* Indices are 1-based. */
NB_API nb_status nb_ad(nb_session* s, const char* tuple, unsigned i, unsigned j, nb_format f, char** out);
NB_API nb_status nb_cartan(nb_session* s, const char* tuple, nb_format f, char** out);
NB_API nb_status nb_reflect(nb_session* s, const char* tuple, unsigned i, nb_format f, char** out);
NB_API nb_status nb_graph(nb_session* s, const char* tuple, nb_format f, char** out);
NB_API nb_status nb_roots(nb_session* s, const char* tuple, int bound, nb_format f, char** out);
NB_API nb_status nb_certify(nb_session* s, const char* tuple, nb_format f, char** out);

/* Session defaults, for callers that want them as flag defaults. */
NB_API unsigned nb_session_truncation(const nb_session* s);
NB_API int nb_session_root_bound(const nb_session* s);

#ifdef __cplusplus
}
#endif

#endif
