#ifndef NCGB_H
#define NCGB_H

#include <stddef.h>

#if defined(_WIN32)
#define NCGB_API __declspec(dllexport)
#else
#define NCGB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ncgb_ring ncgb_ring;
typedef struct ncgb_basis ncgb_basis;

typedef enum {
    NCGB_OK = 0,
    NCGB_E_ARG = 1,
    NCGB_E_PARSE = 2,
    NCGB_E_UNSUPPORTED = 3,
    NCGB_E_INTERNAL = 4
} ncgb_status;

typedef enum {
    NCGB_RUN_COMPLETE = 0,
    NCGB_RUN_DEGREE_CAP = 1,
    NCGB_RUN_ITERATION_CAP = 2
} ncgb_run_status;

typedef enum {
    NCGB_DEGLEX = 0,
    NCGB_DEGINVLEX = 1,
    NCGB_DEGREVLEX = 2
} ncgb_order;

typedef enum {
    NCGB_STRATEGY_NORMAL = 0,
    NCGB_STRATEGY_SUGAR = 1
} ncgb_strategy;

typedef struct {
    ncgb_strategy strategy;
    int criterion2;        /* nonzero: apply the second criterion */
    int division;          /* involutive division key, 1..12 */
    int thick;             /* nonzero: thick divisors */
    size_t max_degree;
    size_t max_iterations;
    int logging;           /* nonzero: keep each output element's expression over the inputs */
} ncgb_options;

typedef struct {
    size_t basis_size;
    size_t spolys;               /* S-polynomials considered (Groebner) */
    size_t criterion_skips;
    size_t prolongations;        /* involutive runs */
    size_t reductions;           /* conventional or involutive reduction steps */
    size_t iterations;
    double seconds;
} ncgb_stats;

/* Message for the last failing call on this thread, "" if none. */
NCGB_API const char* ncgb_last_error(void);
/* 1-based column of the last parse error, 0 if not a parse error. */
NCGB_API size_t ncgb_last_error_column(void);

NCGB_API void ncgb_options_default(ncgb_options* opts);
NCGB_API const char* ncgb_order_name(ncgb_order order);
NCGB_API ncgb_status ncgb_order_parse(const char* name, ncgb_order* out);

/* names: highest priority first */
NCGB_API ncgb_status ncgb_ring_new(const char* const* names, size_t n, ncgb_order order, ncgb_ring** out);
NCGB_API void ncgb_ring_free(ncgb_ring* ring);

NCGB_API ncgb_status ncgb_basis_new(const ncgb_ring* ring, ncgb_basis** out);
NCGB_API void ncgb_basis_free(ncgb_basis* basis);
/* Parses and appends a polynomial. Zero polynomials are rejected. */
NCGB_API ncgb_status ncgb_basis_add(ncgb_basis* basis, const char* text);
NCGB_API size_t ncgb_basis_size(const ncgb_basis* basis);
NCGB_API ncgb_order ncgb_basis_order(const ncgb_basis* basis);
/* Writes element i as text. Copies at most cap bytes including the
   terminator; *needed receives the full length plus one. */
NCGB_API ncgb_status ncgb_basis_get(const ncgb_basis* basis, size_t i, char* buf, size_t cap, size_t* needed);

/* Logged representation of element i over the inputs f1, f2, ...
   Fails with NCGB_E_ARG when the basis came from a run without logging. */
NCGB_API ncgb_status ncgb_basis_get_log(const ncgb_basis* basis, size_t i, char* buf, size_t cap, size_t* needed);

NCGB_API ncgb_status ncgb_groebner(const ncgb_basis* in, const ncgb_options* opts, ncgb_basis** out,
                                   ncgb_run_status* run, ncgb_stats* stats);
NCGB_API ncgb_status ncgb_involutive(const ncgb_basis* in, const ncgb_options* opts, ncgb_basis** out,
                                     ncgb_run_status* run, ncgb_stats* stats);
NCGB_API ncgb_status ncgb_reduce_basis(const ncgb_basis* in, ncgb_basis** out);

/* Remainder of text on division by basis; *is_member is set when it is zero. */
NCGB_API ncgb_status ncgb_reduce(const ncgb_basis* basis, const char* text, char* buf, size_t cap, size_t* needed,
                                 int* is_member);

/* Converts a basis under its own ordering to one under target. */
NCGB_API ncgb_status ncgb_groebner_walk(const ncgb_basis* in, ncgb_order target, const ncgb_options* opts,
                                        ncgb_basis** out, ncgb_run_status* run);
NCGB_API ncgb_status ncgb_involutive_walk(const ncgb_basis* in, ncgb_order target, const ncgb_options* opts,
                                          ncgb_basis** out, ncgb_run_status* run);

#ifdef __cplusplus
}
#endif

#endif
