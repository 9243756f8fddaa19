#ifndef GIESEKER_H
#define GIESEKER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define GK_API __attribute__((visibility("default")))
#else
#define GK_API
#endif

typedef struct gk_chain gk_chain;
typedef struct gk_datum gk_datum;
typedef struct gk_geniso gk_geniso;

typedef enum gk_status {
  GK_OK = 0,
  GK_ERR_ARGUMENT = 1,     /* null pointer or out-of-range parameter */
  GK_ERR_SCHEMA = 2,       /* malformed JSON or schema violation */
  GK_ERR_PRECONDITION = 3, /* input well-formed but outside the operation's domain */
  GK_ERR_PROPERTY = 4,     /* a checked property failed; the output string holds the report */
  GK_ERR_BUDGET = 5,       /* resampling budget exhausted */
  GK_ERR_INTERNAL = 6
} gk_status;

typedef enum gk_kind { GK_KIND_UNKNOWN = 0, GK_KIND_CHAIN = 1, GK_KIND_DATUM = 2, GK_KIND_GENISO = 3 } gk_kind;

typedef enum gk_method { GK_METHOD_DEFINITION = 0, GK_METHOD_DIMENSION = 1, GK_METHOD_VANISHING = 2 } gk_method;

/* Message for the last failing call on this thread; empty after success. */
GK_API const char* gk_last_error(void);
/* Frees any string returned through a char** out-parameter. */
GK_API void gk_string_free(char* s);

GK_API gk_status gk_json_kind(const char* json, gk_kind* out);

GK_API gk_status gk_chain_from_json(const char* json, gk_chain** out);
GK_API gk_status gk_chain_to_json(const gk_chain* c, char** out);
GK_API void gk_chain_destroy(gk_chain* c);
GK_API gk_status gk_chain_is_admissible(const gk_chain* c, gk_method method, int* out);

GK_API gk_status gk_datum_from_json(const char* json, gk_datum** out);
GK_API gk_status gk_datum_to_json(const gk_datum* d, char** out);
GK_API void gk_datum_destroy(gk_datum* d);
GK_API gk_status gk_datum_random(uint32_t n, uint32_t len1, uint32_t len2, uint64_t seed, gk_datum** out);
GK_API gk_status gk_datum_to_geniso(const gk_datum* d, gk_geniso** out);
/* Report JSON in *out; GK_ERR_PROPERTY when the round trip fails. */
GK_API gk_status gk_datum_roundtrip(const gk_datum* d, uint64_t seed, char** out);

GK_API gk_status gk_geniso_from_json(const char* json, gk_geniso** out);
GK_API gk_status gk_geniso_to_json(const gk_geniso* g, char** out);
GK_API void gk_geniso_destroy(gk_geniso* g);
/* Violations as a JSON list in *out; GK_ERR_PROPERTY when nonempty. */
GK_API gk_status gk_geniso_validate(const gk_geniso* g, char** out);
GK_API gk_status gk_geniso_to_datum(const gk_geniso* g, gk_datum** out);
GK_API gk_status gk_geniso_roundtrip(const gk_geniso* g, uint64_t seed, char** out);
/* {"q": matrix, "dimQ": int}; the input must validate. */
GK_API gk_status gk_geniso_grassmannian(const gk_geniso* g, char** out);

/* Runs the property suite; summary JSON in *out, GK_ERR_PROPERTY if any criterion fails. */
GK_API gk_status gk_selftest(uint32_t trials, uint32_t max_n, uint64_t seed, int parallel, char** out);

#ifdef __cplusplus
}
#endif

#endif
