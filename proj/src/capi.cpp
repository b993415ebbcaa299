// C interface of the shared library: exception boundary, opaque handles.

#include "icg/icg_energy.h"

#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "icg/oracle.hpp"
#include "icg/search.hpp"
#include "icg/spectrum.hpp"
#include "icg/two_prime.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs fn, translating exceptions into status codes.
template <typename Fn>
icg_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return ICG_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ICG_ERR_INVALID;
    } catch (const std::overflow_error& e) {
        set_error(e.what());
        return ICG_ERR_OVERFLOW;
    } catch (const std::logic_error& e) {
        set_error(e.what());
        return ICG_ERR_CHECK;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return ICG_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ICG_ERR_CHECK;
    }
}

icg::DivisorSet make_set(int64_t n, const int64_t* divisors, size_t count) {
    if (divisors == nullptr && count > 0)
        throw std::invalid_argument("divisor list is null");
    return icg::DivisorSet(n, std::vector<int64_t>(divisors, divisors + count));
}

}  // namespace

extern "C" {

struct icg_spectrum {
    icg::ClassSpectrum data;
};

struct icg_maximiser {
    icg::search::MaximiserResult data;
};

struct icg_survey {
    icg::search::SurveyResult data;
};

const char* icg_status_name(icg_status status) {
    switch (status) {
        case ICG_OK: return "ok";
        case ICG_ERR_INVALID: return "invalid argument";
        case ICG_ERR_OVERFLOW: return "overflow";
        case ICG_ERR_CHECK: return "internal check failed";
        case ICG_ERR_UNSUPPORTED: return "unsupported";
        case ICG_ERR_NOMEM: return "out of memory";
    }
    return "unknown";
}

const char* icg_last_error(void) { return g_last_error.c_str(); }

icg_status icg_spectrum_compute(int64_t n, const int64_t* divisors, size_t count,
                                icg_spectrum** out) {
    if (out == nullptr) return ICG_ERR_INVALID;
    *out = nullptr;
    return guarded([&] {
        auto spectrum = icg::spectrum(make_set(n, divisors, count));
        *out = new icg_spectrum{std::move(spectrum)};
    });
}

size_t icg_spectrum_size(const icg_spectrum* spectrum) {
    return spectrum == nullptr ? 0 : spectrum->data.entries.size();
}

icg_status icg_spectrum_entry(const icg_spectrum* spectrum, size_t index,
                              int64_t* class_divisor, int64_t* eigenvalue,
                              int64_t* multiplicity) {
    if (spectrum == nullptr || index >= spectrum->data.entries.size()) {
        set_error("spectrum entry index out of range");
        return ICG_ERR_INVALID;
    }
    const auto& entry = spectrum->data.entries[index];
    if (class_divisor) *class_divisor = entry.class_divisor;
    if (eigenvalue) *eigenvalue = entry.eigenvalue;
    if (multiplicity) *multiplicity = entry.multiplicity;
    return ICG_OK;
}

void icg_spectrum_free(icg_spectrum* spectrum) { delete spectrum; }

icg_status icg_energy_compute(int64_t n, const int64_t* divisors, size_t count,
                              int64_t* out_energy) {
    if (out_energy == nullptr) return ICG_ERR_INVALID;
    return guarded([&] {
        *out_energy = icg::energy(make_set(n, divisors, count)).energy;
    });
}

icg_status icg_eigenvalue_at_class(int64_t n, const int64_t* divisors, size_t count,
                                   int64_t class_divisor, int64_t* out_eigenvalue) {
    if (out_eigenvalue == nullptr) return ICG_ERR_INVALID;
    return guarded([&] {
        *out_eigenvalue =
            icg::eigenvalue_at_class(make_set(n, divisors, count), class_divisor);
    });
}

icg_status icg_oracle_energy(int64_t n, const int64_t* divisors, size_t count,
                             int64_t* out_energy) {
    if (out_energy == nullptr) return ICG_ERR_INVALID;
    if (n > icg::kOracleMaxOrder) {
        set_error("oracle limited to n <= 3000");
        return ICG_ERR_UNSUPPORTED;
    }
    return guarded([&] {
        *out_energy = icg::oracle_energy(make_set(n, divisors, count));
    });
}

icg_status icg_pair_order(int64_t p, int64_t q, int64_t* out_n) {
    if (out_n == nullptr) return ICG_ERR_INVALID;
    return guarded([&] { *out_n = icg::two_prime::PrimePair(p, q).order(); });
}

uint32_t icg_dstar_mask(void) { return icg::two_prime::dstar_mask(); }

icg_status icg_mask_divisors(int64_t p, int64_t q, uint32_t mask, int64_t* out,
                             size_t* out_count) {
    if (out == nullptr || out_count == nullptr) return ICG_ERR_INVALID;
    return guarded([&] {
        const auto divs =
            icg::two_prime::mask_divisors(icg::two_prime::PrimePair(p, q), mask);
        for (size_t i = 0; i < divs.size(); ++i) out[i] = divs[i];
        *out_count = divs.size();
    });
}

icg_status icg_dstar_divisors(int64_t p, int64_t q, int64_t* out) {
    if (out == nullptr) return ICG_ERR_INVALID;
    size_t count = 0;
    return icg_mask_divisors(p, q, icg_dstar_mask(), out, &count);
}

icg_status icg_closed_form_energy(int64_t p, int64_t q, int64_t* out_energy) {
    if (out_energy == nullptr) return ICG_ERR_INVALID;
    return guarded([&] {
        *out_energy =
            icg::two_prime::closed_form_energy(icg::two_prime::PrimePair(p, q));
    });
}

icg_status icg_find_maximiser(int64_t p, int64_t q, icg_maximiser** out) {
    if (out == nullptr) return ICG_ERR_INVALID;
    *out = nullptr;
    return guarded([&] {
        auto result = icg::search::find_maximiser(icg::two_prime::PrimePair(p, q));
        *out = new icg_maximiser{std::move(result)};
    });
}

int64_t icg_maximiser_energy(const icg_maximiser* m) {
    return m == nullptr ? 0 : m->data.max_energy;
}

size_t icg_maximiser_count(const icg_maximiser* m) {
    return m == nullptr ? 0 : m->data.maximisers.size();
}

uint32_t icg_maximiser_mask(const icg_maximiser* m, size_t index) {
    if (m == nullptr || index >= m->data.maximisers.size()) return 0;
    return m->data.maximisers[index];
}

int icg_maximiser_is_unique(const icg_maximiser* m) {
    return m != nullptr && m->data.is_unique ? 1 : 0;
}

int icg_maximiser_matches_dstar(const icg_maximiser* m) {
    return m != nullptr && m->data.matches_dstar ? 1 : 0;
}

int icg_maximiser_kronecker_ok(const icg_maximiser* m) {
    return m != nullptr && m->data.kronecker_ok ? 1 : 0;
}

int icg_maximiser_formula_ok(const icg_maximiser* m) {
    return m != nullptr && m->data.formula_ok ? 1 : 0;
}

void icg_maximiser_free(icg_maximiser* m) { delete m; }

icg_status icg_survey_run(int64_t bound, int workers, int64_t prime_limit,
                          icg_survey** out) {
    if (out == nullptr) return ICG_ERR_INVALID;
    *out = nullptr;
    return guarded([&] {
        auto result = icg::search::survey(bound, workers, prime_limit);
        *out = new icg_survey{std::move(result)};
    });
}

int64_t icg_survey_bound(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.bound;
}
int64_t icg_survey_orders_tested(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.orders_tested;
}
int64_t icg_survey_distinct_unordered_pairs(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.distinct_unordered_pairs;
}
int64_t icg_survey_largest_prime(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.largest_prime;
}
int64_t icg_survey_comparisons_total(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.comparisons_total;
}
int64_t icg_survey_dstar_mismatches(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.dstar_mismatches;
}
int64_t icg_survey_formula_failures(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.formula_failures;
}
int64_t icg_survey_kronecker_failures(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.report.kronecker_failures;
}
double icg_survey_elapsed_seconds(const icg_survey* s) {
    return s == nullptr ? 0.0 : s->data.report.elapsed_seconds;
}

size_t icg_survey_order_count(const icg_survey* s) {
    return s == nullptr ? 0 : s->data.orders.size();
}

icg_status icg_survey_order(const icg_survey* s, size_t index,
                            icg_order_record* out) {
    if (s == nullptr || out == nullptr || index >= s->data.orders.size()) {
        set_error("survey order index out of range");
        return ICG_ERR_INVALID;
    }
    const auto& r = s->data.orders[index];
    out->n = r.pair.order();
    out->p = r.pair.p();
    out->q = r.pair.q();
    out->max_energy = r.max_energy;
    out->maximiser_mask = r.maximisers.empty() ? 0 : r.maximisers.front();
    out->maximiser_count = static_cast<int32_t>(r.maximisers.size());
    out->is_unique = r.is_unique ? 1 : 0;
    out->matches_dstar = r.matches_dstar ? 1 : 0;
    out->kronecker_ok = r.kronecker_ok ? 1 : 0;
    out->formula_ok = r.formula_ok ? 1 : 0;
    return ICG_OK;
}

void icg_survey_free(icg_survey* s) { delete s; }

}  // extern "C"
