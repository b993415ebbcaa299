/*
 * icg_energy — exact spectra and energies of integral circulant graphs
 * ICG(n, D), with the closed-form maximal-energy machinery for orders
 * n = p^2 q^3 and the exhaustive divisor-subset survey.
 *
 * C interface of the shared library. All functions return icg_status;
 * composite results live behind opaque handles with explicit free
 * functions. icg_last_error() describes the most recent failure on the
 * calling thread. Every numeric result is an exact integer.
 */

#ifndef ICG_ENERGY_H
#define ICG_ENERGY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum icg_status {
    ICG_OK = 0,
    ICG_ERR_INVALID = 1,     /* invalid argument or validation failure */
    ICG_ERR_OVERFLOW = 2,    /* result does not fit the 64-bit interface */
    ICG_ERR_CHECK = 3,       /* an internal mathematical check failed */
    ICG_ERR_UNSUPPORTED = 4, /* outside a documented operating limit */
    ICG_ERR_NOMEM = 5
} icg_status;

const char* icg_status_name(icg_status status);

/* Message for the most recent failure on this thread ("" if none). */
const char* icg_last_error(void);

/* ------------------------------------------------------------------ */
/* General orders: divisor-class spectrum and exact energy.            */
/* ------------------------------------------------------------------ */

typedef struct icg_spectrum icg_spectrum;

/* divisors: nonempty list of distinct proper divisors of n (any order). */
icg_status icg_spectrum_compute(int64_t n, const int64_t* divisors, size_t count,
                                icg_spectrum** out);
size_t icg_spectrum_size(const icg_spectrum* spectrum);
icg_status icg_spectrum_entry(const icg_spectrum* spectrum, size_t index,
                              int64_t* class_divisor, int64_t* eigenvalue,
                              int64_t* multiplicity);
void icg_spectrum_free(icg_spectrum* spectrum);

icg_status icg_energy_compute(int64_t n, const int64_t* divisors, size_t count,
                              int64_t* out_energy);

/* Eigenvalue of one divisor class e | n. */
icg_status icg_eigenvalue_at_class(int64_t n, const int64_t* divisors, size_t count,
                                   int64_t class_divisor, int64_t* out_eigenvalue);

/* Independent dense-eigensolver energy; requires n <= 3000. */
icg_status icg_oracle_energy(int64_t n, const int64_t* divisors, size_t count,
                             int64_t* out_energy);

/* ------------------------------------------------------------------ */
/* Orders n = p^2 q^3 (distinct odd primes, ordered pair).              */
/* ------------------------------------------------------------------ */

/* Validates the pair and returns n = p^2 q^3. */
icg_status icg_pair_order(int64_t p, int64_t q, int64_t* out_n);

/* Canonical 11-bit mask of D* = {1, p^2, pq, q^2, p^2 q^2, p q^3}. */
uint32_t icg_dstar_mask(void);

/* Divisor values selected by an 11-bit mask, ascending. out must hold 11. */
icg_status icg_mask_divisors(int64_t p, int64_t q, uint32_t mask, int64_t* out,
                             size_t* out_count);

/* The six divisors of D* for this pair, ascending. out must hold 6. */
icg_status icg_dstar_divisors(int64_t p, int64_t q, int64_t* out);

/* Closed-form value of E(p^2 q^3, D*). */
icg_status icg_closed_form_energy(int64_t p, int64_t q, int64_t* out_energy);

/* ------------------------------------------------------------------ */
/* Exhaustive maximiser search for one order.                           */
/* ------------------------------------------------------------------ */

typedef struct icg_maximiser icg_maximiser;

icg_status icg_find_maximiser(int64_t p, int64_t q, icg_maximiser** out);
int64_t icg_maximiser_energy(const icg_maximiser* m);
size_t icg_maximiser_count(const icg_maximiser* m); /* number of argmax masks */
uint32_t icg_maximiser_mask(const icg_maximiser* m, size_t index);
int icg_maximiser_is_unique(const icg_maximiser* m);
int icg_maximiser_matches_dstar(const icg_maximiser* m);
int icg_maximiser_kronecker_ok(const icg_maximiser* m);
int icg_maximiser_formula_ok(const icg_maximiser* m);
void icg_maximiser_free(icg_maximiser* m);

/* ------------------------------------------------------------------ */
/* Survey over every order p^2 q^3 <= bound.                            */
/* ------------------------------------------------------------------ */

typedef struct icg_survey icg_survey;

typedef struct icg_order_record {
    int64_t n;
    int64_t p;
    int64_t q;
    int64_t max_energy;
    uint32_t maximiser_mask; /* smallest argmax mask */
    int32_t maximiser_count;
    int32_t is_unique;
    int32_t matches_dstar;
    int32_t kronecker_ok;
    int32_t formula_ok;
} icg_order_record;

/*
 * bound >= 675. workers <= 0 uses the hardware thread count; the result is
 * identical for every worker count. prime_limit <= 0 selects the default
 * candidate pool: primes up to the smallest prime whose cube exceeds the
 * bound (467 at bound 1e8).
 */
icg_status icg_survey_run(int64_t bound, int workers, int64_t prime_limit,
                          icg_survey** out);

int64_t icg_survey_bound(const icg_survey* s);
int64_t icg_survey_orders_tested(const icg_survey* s);
int64_t icg_survey_distinct_unordered_pairs(const icg_survey* s);
int64_t icg_survey_largest_prime(const icg_survey* s);
int64_t icg_survey_comparisons_total(const icg_survey* s);
int64_t icg_survey_dstar_mismatches(const icg_survey* s);
int64_t icg_survey_formula_failures(const icg_survey* s);
int64_t icg_survey_kronecker_failures(const icg_survey* s);
double icg_survey_elapsed_seconds(const icg_survey* s);

size_t icg_survey_order_count(const icg_survey* s);
icg_status icg_survey_order(const icg_survey* s, size_t index,
                            icg_order_record* out);
void icg_survey_free(icg_survey* s);

#ifdef __cplusplus
}
#endif

#endif /* ICG_ENERGY_H */
