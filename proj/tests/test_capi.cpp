#include <doctest.h>

#include <icg/icg_energy.h>

#include <cstring>
#include <string>
#include <vector>

TEST_CASE("c api: energy and spectrum") {
    const int64_t divisors[] = {1, 3, 5};
    int64_t energy = 0;
    REQUIRE(icg_energy_compute(15, divisors, 3, &energy) == ICG_OK);
    CHECK(energy == 28);

    icg_spectrum* spectrum = nullptr;
    REQUIRE(icg_spectrum_compute(9, divisors, 1, &spectrum) == ICG_OK);
    REQUIRE(spectrum != nullptr);
    CHECK(icg_spectrum_size(spectrum) == 3);
    int64_t cls = 0, lambda = 0, mult = 0;
    REQUIRE(icg_spectrum_entry(spectrum, 1, &cls, &lambda, &mult) == ICG_OK);
    CHECK(cls == 3);
    CHECK(lambda == -3);
    CHECK(mult == 2);
    CHECK(icg_spectrum_entry(spectrum, 3, &cls, &lambda, &mult) == ICG_ERR_INVALID);
    icg_spectrum_free(spectrum);

    int64_t eigenvalue = 0;
    const int64_t dstar[] = {1, 9, 15, 25, 225, 375};
    REQUIRE(icg_eigenvalue_at_class(1125, dstar, 6, 15, &eigenvalue) == ICG_OK);
    CHECK(eigenvalue == -16);
}

TEST_CASE("c api: validation errors carry messages") {
    int64_t energy = 0;
    const int64_t bad[] = {4};
    CHECK(icg_energy_compute(15, bad, 1, &energy) == ICG_ERR_INVALID);
    CHECK(std::strlen(icg_last_error()) > 0);
    CHECK(icg_energy_compute(15, nullptr, 2, &energy) == ICG_ERR_INVALID);
    CHECK(icg_energy_compute(15, bad, 0, &energy) == ICG_ERR_INVALID);  // empty

    int64_t n = 0;
    CHECK(icg_pair_order(4, 5, &n) == ICG_ERR_INVALID);
    CHECK(std::string(icg_last_error()) == "4 is not an odd prime");
    CHECK(icg_pair_order(7, 7, &n) == ICG_ERR_INVALID);

    CHECK(std::string(icg_status_name(ICG_OK)) == "ok");
    CHECK(std::string(icg_status_name(ICG_ERR_INVALID)) == "invalid argument");
}

TEST_CASE("c api: oracle") {
    const int64_t divisors[] = {1};
    int64_t energy = 0;
    REQUIRE(icg_oracle_energy(15, divisors, 1, &energy) == ICG_OK);
    CHECK(energy == 32);
    CHECK(icg_oracle_energy(3001, divisors, 1, &energy) == ICG_ERR_UNSUPPORTED);
}

TEST_CASE("c api: two-prime helpers") {
    int64_t n = 0;
    REQUIRE(icg_pair_order(3, 5, &n) == ICG_OK);
    CHECK(n == 1125);

    CHECK(icg_dstar_mask() == 1445);
    int64_t dstar[6] = {};
    REQUIRE(icg_dstar_divisors(3, 5, dstar) == ICG_OK);
    CHECK(std::vector<int64_t>(dstar, dstar + 6) ==
          std::vector<int64_t>{1, 9, 15, 25, 225, 375});

    int64_t all[11] = {};
    size_t count = 0;
    REQUIRE(icg_mask_divisors(3, 5, 2047, all, &count) == ICG_OK);
    CHECK(count == 11);
    CHECK(icg_mask_divisors(3, 5, 0, all, &count) == ICG_ERR_INVALID);

    int64_t energy = 0;
    REQUIRE(icg_closed_form_energy(13, 17, &energy) == ICG_OK);
    CHECK(energy == 11983136);
}

TEST_CASE("c api: maximiser handle") {
    icg_maximiser* m = nullptr;
    REQUIRE(icg_find_maximiser(3, 5, &m) == ICG_OK);
    REQUIRE(m != nullptr);
    CHECK(icg_maximiser_energy(m) == 8200);
    CHECK(icg_maximiser_count(m) == 1);
    CHECK(icg_maximiser_mask(m, 0) == 1445);
    CHECK(icg_maximiser_is_unique(m) == 1);
    CHECK(icg_maximiser_matches_dstar(m) == 1);
    CHECK(icg_maximiser_kronecker_ok(m) == 1);
    CHECK(icg_maximiser_formula_ok(m) == 1);
    icg_maximiser_free(m);

    icg_maximiser* bad = nullptr;
    CHECK(icg_find_maximiser(6, 5, &bad) == ICG_ERR_INVALID);
    CHECK(bad == nullptr);
}

TEST_CASE("c api: survey handle") {
    icg_survey* s = nullptr;
    REQUIRE(icg_survey_run(2000, 2, 0, &s) == ICG_OK);
    REQUIRE(s != nullptr);
    CHECK(icg_survey_bound(s) == 2000);
    CHECK(icg_survey_orders_tested(s) == 3);
    CHECK(icg_survey_distinct_unordered_pairs(s) == 2);
    CHECK(icg_survey_largest_prime(s) == 7);
    CHECK(icg_survey_comparisons_total(s) == 3 * 2047);
    CHECK(icg_survey_dstar_mismatches(s) == 0);
    CHECK(icg_survey_formula_failures(s) == 0);
    CHECK(icg_survey_kronecker_failures(s) == 0);
    CHECK(icg_survey_elapsed_seconds(s) >= 0.0);

    REQUIRE(icg_survey_order_count(s) == 3);
    icg_order_record record{};
    REQUIRE(icg_survey_order(s, 1, &record) == ICG_OK);
    CHECK(record.n == 1125);
    CHECK(record.p == 3);
    CHECK(record.q == 5);
    CHECK(record.max_energy == 8200);
    CHECK(record.maximiser_mask == 1445);
    CHECK(record.maximiser_count == 1);
    CHECK(record.is_unique == 1);
    CHECK(record.matches_dstar == 1);
    CHECK(record.kronecker_ok == 1);
    CHECK(record.formula_ok == 1);
    CHECK(icg_survey_order(s, 3, &record) == ICG_ERR_INVALID);
    icg_survey_free(s);

    icg_survey* bad = nullptr;
    CHECK(icg_survey_run(100, 1, 0, &bad) == ICG_ERR_INVALID);
    CHECK(bad == nullptr);
}
