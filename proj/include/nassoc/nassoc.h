#ifndef NASSOC_H
#define NASSOC_H

#include <stddef.h>
#include <stdint.h>

#if defined(NASSOC_BUILDING_LIBRARY)
#define NASSOC_API __attribute__((visibility("default")))
#else
#define NASSOC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nassoc_algebra nassoc_algebra;

typedef enum {
  NASSOC_OK = 0,
  NASSOC_ERR_USAGE = 1,       /* bad argument or precondition */
  NASSOC_ERR_DOMAIN = 2,      /* mathematically undefined */
  NASSOC_ERR_PARSE = 3,       /* malformed algebra file */
  NASSOC_ERR_UNSUPPORTED = 4, /* needs a finite field, or over budget */
  NASSOC_ERR_REFUSED = 5,     /* the input lacks the operation's hypothesis */
  NASSOC_ERR_VIOLATION = 6,   /* a guaranteed structure was not found */
  NASSOC_ERR_INTERNAL = 7
} nassoc_status;

typedef enum { NASSOC_FORMAT_JSON = 0, NASSOC_FORMAT_TEXT = 1 } nassoc_format;

typedef struct {
  uint64_t max_vectors;
  uint64_t max_subspaces;
} nassoc_budget;

typedef struct {
  int exhaustive;       /* nonzero: every table, else random draws */
  long max_nonzero;     /* exhaustive: bound on nonzero constants, negative for none */
  uint64_t max_tables;  /* exhaustive: candidate budget */
  size_t samples;       /* random */
  uint64_t seed;        /* random */
  double sparsity;      /* random: probability a constant is zero */
} nassoc_search_options;

NASSOC_API nassoc_budget nassoc_default_budget(void);
NASSOC_API nassoc_search_options nassoc_default_search_options(void);

/* Message for the last failed call on this thread; never NULL. */
NASSOC_API const char* nassoc_last_error(void);
NASSOC_API const char* nassoc_status_name(nassoc_status s);
NASSOC_API void nassoc_string_free(char* s);

NASSOC_API nassoc_status nassoc_algebra_parse(const char* json, nassoc_algebra** out);
NASSOC_API nassoc_status nassoc_algebra_load(const char* path, nassoc_algebra** out);
NASSOC_API nassoc_status nassoc_fixture(const char* name, nassoc_algebra** out);
NASSOC_API void nassoc_algebra_free(nassoc_algebra* a);
NASSOC_API size_t nassoc_algebra_dim(const nassoc_algebra* a);
NASSOC_API nassoc_status nassoc_algebra_serialize(const nassoc_algebra* a, char** out);
NASSOC_API nassoc_status nassoc_check_identity(const nassoc_algebra* a, const char* identity, int* holds);

/* Report commands. On success *out holds a string owned by the caller
   (release with nassoc_string_free). */
NASSOC_API nassoc_status nassoc_info(const nassoc_algebra* a, nassoc_format fmt, char** out);
NASSOC_API nassoc_status nassoc_check(const nassoc_algebra* a, const char* identity, nassoc_format fmt, char** out);
NASSOC_API nassoc_status nassoc_series(const nassoc_algebra* a, const char* kind, nassoc_format fmt, char** out);
NASSOC_API nassoc_status nassoc_radical(const nassoc_algebra* a, const char* which, nassoc_budget budget,
                                        nassoc_format fmt, char** out);
NASSOC_API nassoc_status nassoc_frattini(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt,
                                         char** out);
NASSOC_API nassoc_status nassoc_minimal_ideals(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt,
                                               char** out);
NASSOC_API nassoc_status nassoc_chief_series(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt,
                                             char** out);
NASSOC_API nassoc_status nassoc_decompose(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt,
                                          char** out);
NASSOC_API nassoc_status nassoc_split(const nassoc_algebra* a, nassoc_budget budget, nassoc_format fmt, char** out);
/* check == NULL runs the whole catalogue; *failed counts applicable checks
   that do not hold. */
NASSOC_API nassoc_status nassoc_verify(const nassoc_algebra* a, const char* check, nassoc_budget budget,
                                       nassoc_format fmt, size_t* failed, char** out);
/* As nassoc_verify, with hypotheses taken on trust from a JSON object
   {"identities": [...], "radical": rows or null, "nilpotent": bool}. Reports
   mark such results "hypotheses_assumed". */
NASSOC_API nassoc_status nassoc_verify_assuming(const nassoc_algebra* a, const char* check, const char* assumptions,
                                                nassoc_budget budget, nassoc_format fmt, size_t* failed, char** out);
/* field: "Q", "p" or "F_p"; identity NULL or "any" for every table. */
NASSOC_API nassoc_status nassoc_search(const char* field, size_t dim, const char* identity,
                                       const nassoc_search_options* options, nassoc_format fmt, char** out);
NASSOC_API nassoc_status nassoc_fixtures(nassoc_format fmt, char** out);
/* Newline-separated fixture names. */
NASSOC_API nassoc_status nassoc_fixture_names(char** out);
/* Names of the checks in catalogue order, newline-separated. */
NASSOC_API nassoc_status nassoc_check_names(char** out);

#ifdef __cplusplus
}
#endif

#endif
