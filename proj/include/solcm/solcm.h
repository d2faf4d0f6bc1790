/* C interface to the solcm library.
 *
 * Every call returns a status code; on failure the message is available from
 * solcm_last_error() on the same thread until the next call. Objects are
 * opaque handles owned by the caller and released with the matching _free.
 * Strings returned through char** are owned by the caller and released with
 * solcm_string_free.
 */
#ifndef SOLCM_H
#define SOLCM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SOLCM_BUILDING_LIBRARY)
#    define SOLCM_API __declspec(dllexport)
#  else
#    define SOLCM_API __declspec(dllimport)
#  endif
#else
#  define SOLCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum solcm_status {
  SOLCM_OK = 0,
  SOLCM_ERR_INVALID = 2,      /* bad input: malformed spec, out of range */
  SOLCM_ERR_INCONSISTENT = 3, /* contradictory facts or disagreeing routes */
  SOLCM_ERR_INTERNAL = 4
} solcm_status;

typedef enum solcm_tower_op {
  SOLCM_TOWER_LIM = 0,
  SOLCM_TOWER_LIM1 = 1,
  SOLCM_TOWER_COLIM = 2
} solcm_tower_op;

typedef struct solcm_prime_set solcm_prime_set;
typedef struct solcm_ring solcm_ring;
typedef struct solcm_report solcm_report;

SOLCM_API const char* solcm_version(void);
SOLCM_API const char* solcm_last_error(void);

/* "2,3,5" | "all" | "all-except:2,7" */
SOLCM_API solcm_status solcm_prime_set_parse(const char* spec, solcm_prime_set** out);
SOLCM_API void solcm_prime_set_free(solcm_prime_set* p);

/* "Z" | "Q" | "mod:<m>" */
SOLCM_API solcm_status solcm_ring_parse(const char* spec, solcm_ring** out);
SOLCM_API void solcm_ring_free(solcm_ring* r);

/* q is a decimal integer >= 1. */
SOLCM_API solcm_status solcm_lens(const char* q, const solcm_ring* ring, solcm_report** out);
SOLCM_API solcm_status solcm_suspend(const char* q, const solcm_ring* ring, solcm_report** out);

SOLCM_API solcm_status solcm_local(const solcm_prime_set* primes, const solcm_ring* ring,
                                   solcm_report** out);
SOLCM_API solcm_status solcm_complement(const solcm_prime_set* primes, const solcm_ring* ring,
                                        solcm_report** out);
SOLCM_API solcm_status solcm_pair(const solcm_prime_set* primes, const solcm_ring* ring,
                                  solcm_report** out);
SOLCM_API solcm_status solcm_clc(const solcm_prime_set* primes, const solcm_ring* ring,
                                 solcm_report** out);
SOLCM_API solcm_status solcm_classify(const solcm_prime_set* primes, const solcm_ring* ring,
                                      solcm_report** out);
SOLCM_API solcm_status solcm_tower(solcm_tower_op op, const solcm_ring* base,
                                   const solcm_prime_set* primes, size_t depth,
                                   solcm_report** out);

/* Replaces the command echo recorded in the report. */
SOLCM_API solcm_status solcm_report_set_command(solcm_report* r, const char* command);
SOLCM_API solcm_status solcm_report_json(const solcm_report* r, int include_trace, char** out);
SOLCM_API solcm_status solcm_report_text(const solcm_report* r, int include_trace, char** out);
SOLCM_API void solcm_report_free(solcm_report* r);

SOLCM_API void solcm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SOLCM_H */
