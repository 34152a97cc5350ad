#ifndef FROBROOT_H
#define FROBROOT_H

/* C interface to the frobroot engine. Every call returns a frob_status;
 * on failure frob_last_error() describes the problem for the calling
 * thread. Strings returned through out-parameters are owned by the caller
 * and must be released with frob_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FROB_API __declspec(dllexport)
#else
#define FROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frob_status {
  FROB_OK = 0,
  FROB_INVALID_ARGUMENT = 1,
  FROB_DIVISION_BY_ZERO = 2,
  FROB_FIELD_MISMATCH = 3,
  FROB_RING_MISMATCH = 4,
  FROB_EXPONENT_OVERFLOW = 5,
  FROB_ARITY_MISMATCH = 6,
  FROB_ZERO_IDEAL = 7,
  FROB_ZERO_DIVISOR_IDEAL = 8,
  FROB_NOT_M_PRIMARY = 9,
  FROB_NO_JUMP_IN_WINDOW = 10,
  FROB_TRUNCATED = 11,
  FROB_SYNTAX_ERROR = 12,
  FROB_UNKNOWN_NAME = 13,
  FROB_DUPLICATE_RING = 14,
  FROB_INTERNAL = 99
} frob_status;

typedef enum frob_format { FROB_FORMAT_TEXT = 0, FROB_FORMAT_JSON = 1 } frob_format;

typedef struct frob_ring frob_ring;
typedef struct frob_ideal frob_ideal;
typedef struct frob_session frob_session;

FROB_API const char* frob_version(void);
/* Message for the last failed call on this thread; "" if none. */
FROB_API const char* frob_last_error(void);
FROB_API const char* frob_status_name(frob_status status);
FROB_API void frob_string_free(char* s);

/* order: "lex", "grlex" or "grevlex"; vars: comma-separated names. */
FROB_API frob_status frob_ring_create(uint64_t p, const char* vars, const char* order,
                                      frob_ring** out);
FROB_API void frob_ring_free(frob_ring* ring);

/* text: comma-separated generators, e.g. "x^2, y^3". */
FROB_API frob_status frob_ideal_parse(const frob_ring* ring, const char* text, frob_ideal** out);
FROB_API void frob_ideal_free(frob_ideal* ideal);
/* "(g1, g2, ...)" over the reduced Groebner basis. */
FROB_API frob_status frob_ideal_to_string(const frob_ideal* ideal, char** out);
FROB_API frob_status frob_ideal_equal(const frob_ideal* a, const frob_ideal* b, int* out);
FROB_API frob_status frob_frobenius_root(const frob_ideal* ideal, uint64_t e, frob_ideal** out);
FROB_API frob_status frob_frobenius_power(const frob_ideal* ideal, uint64_t e, frob_ideal** out);

/* tau(ideal^exponent); exponent is "a/b" or an integer. The result handle
 * is set even when truncated; *truncated reports it. */
FROB_API frob_status frob_tau(const frob_ideal* ideal, const char* exponent, uint64_t max_e,
                              frob_ideal** out, int* truncated);
/* Same computation serialized as the JSON tau report. */
FROB_API frob_status frob_tau_json(const frob_ideal* ideal, const char* exponent, uint64_t max_e,
                                   char** out);

FROB_API frob_status frob_session_parse(const char* text, frob_session** out);
FROB_API void frob_session_free(frob_session* session);
/* Runs every command. *exit_code follows the CLI convention: 0 ok,
 * 1 engine error, 2 truncation. */
FROB_API frob_status frob_session_run(const frob_session* session, frob_format format,
                                      uint64_t max_e, char** output, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
