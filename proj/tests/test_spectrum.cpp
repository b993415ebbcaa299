#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "icg/arith.hpp"
#include "icg/oracle.hpp"
#include "icg/spectrum.hpp"

using icg::DivisorSet;

namespace {

const std::vector<std::int64_t> kDstar1125{1, 9, 15, 25, 225, 375};

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
    auto divs = icg::arith::divisors(n);
    divs.pop_back();
    return divs;
}

DivisorSet random_set(std::int64_t n, std::mt19937& rng) {
    const auto pool = proper_divisors(n);
    std::vector<std::int64_t> members;
    std::bernoulli_distribution coin(0.4);
    for (std::int64_t d : pool)
        if (coin(rng)) members.push_back(d);
    if (members.empty())
        members.push_back(pool[std::uniform_int_distribution<std::size_t>(
            0, pool.size() - 1)(rng)]);
    return DivisorSet(n, members);
}

}  // namespace

TEST_CASE("divisor set validation") {
    CHECK_THROWS(DivisorSet(15, {}));
    CHECK_THROWS(DivisorSet(15, {4}));       // not a divisor
    CHECK_THROWS(DivisorSet(15, {15}));      // not proper
    CHECK_THROWS(DivisorSet(15, {1, 1}));    // duplicate
    CHECK_THROWS(DivisorSet(15, {0}));
    CHECK_THROWS(DivisorSet(1, {1}));        // no proper divisors exist

    const DivisorSet set(15, {5, 1, 3});     // input gets sorted
    CHECK(set.members() == std::vector<std::int64_t>{1, 3, 5});
}

TEST_CASE("eigenvalue at a class") {
    const DivisorSet dstar(1125, kDstar1125);
    CHECK(icg::eigenvalue_at_class(dstar, 1125) == 770);  // the degree
    CHECK(icg::eigenvalue_at_class(dstar, 15) == -16);
    CHECK(icg::eigenvalue_at_class(DivisorSet(15, {1}), 15) == 8);
    CHECK_THROWS(icg::eigenvalue_at_class(dstar, 7));     // 7 does not divide n
    CHECK_THROWS(icg::eigenvalue_at_class(dstar, 0));
}

TEST_CASE("spectrum of small graphs") {
    SUBCASE("complete graph K_15") {
        const auto spec = icg::spectrum(DivisorSet(15, {1, 3, 5}));
        CHECK(spec.entries.size() == 4);
        CHECK(spec.degree() == 14);
    }
    SUBCASE("ICG(9, {1})") {
        const auto spec = icg::spectrum(DivisorSet(9, {1}));
        REQUIRE(spec.entries.size() == 3);
        CHECK(spec.entries[0].class_divisor == 1);
        CHECK(spec.entries[0].eigenvalue == 0);
        CHECK(spec.entries[0].multiplicity == 6);
        CHECK(spec.entries[1].class_divisor == 3);
        CHECK(spec.entries[1].eigenvalue == -3);
        CHECK(spec.entries[1].multiplicity == 2);
        CHECK(spec.entries[2].class_divisor == 9);
        CHECK(spec.entries[2].eigenvalue == 6);
        CHECK(spec.entries[2].multiplicity == 1);
    }
    SUBCASE("n = 1125 at D*") {
        const auto spec = icg::spectrum(DivisorSet(1125, kDstar1125));
        CHECK(spec.entries.size() == 12);
        std::int64_t mult_sum = 0;
        for (const auto& e : spec.entries) mult_sum += e.multiplicity;
        CHECK(mult_sum == 1125);
        CHECK(spec.degree() == 770);
    }
}

TEST_CASE("energy examples") {
    CHECK(icg::energy(DivisorSet(1125, kDstar1125)).energy == 8200);
    CHECK(icg::energy(DivisorSet(3087, {1, 9, 21, 49, 441, 1029})).energy == 24856);
    CHECK(icg::energy(DivisorSet(15, {1, 3, 5})).energy == 28);
    CHECK(icg::energy(DivisorSet(15, {1})).energy == 32);
}

TEST_CASE("complete divisor set gives the complete graph") {
    for (std::int64_t n : {2, 3, 4, 6, 9, 12, 30, 60, 64, 81, 100, 120}) {
        const auto record = icg::energy(DivisorSet(n, proper_divisors(n)));
        CHECK(record.energy == 2 * (n - 1));
    }
}

TEST_CASE("spectrum invariants on random sets") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<std::int64_t> order(2, 2000);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t n = order(rng);
        const auto set = random_set(n, rng);
        const auto spec = icg::spectrum(set);

        std::int64_t mult_sum = 0;
        std::int64_t trace = 0;
        std::int64_t degree_from_set = 0;
        for (std::int64_t d : set.members())
            degree_from_set += icg::arith::totient(n / d);
        for (const auto& e : spec.entries) {
            mult_sum += e.multiplicity;
            trace += e.multiplicity * e.eigenvalue;
            CHECK(std::abs(e.eigenvalue) <= spec.degree());
        }
        CHECK(mult_sum == n);
        CHECK(trace == 0);
        CHECK(spec.degree() == degree_from_set);
        CHECK(icg::energy(set).energy % 2 == 0);
    }
}

TEST_CASE("dense eigensolver oracle") {
    CHECK(icg::oracle_energy(DivisorSet(15, {1})) == 32);
    CHECK(icg::oracle_energy(DivisorSet(9, {1, 3})) == 16);  // K_9
    CHECK_THROWS(icg::oracle_energy(DivisorSet(3001, {1})));

    std::mt19937 rng(7u);
    std::uniform_int_distribution<std::int64_t> order(2, 150);
    for (int trial = 0; trial < 12; ++trial) {
        const auto set = random_set(order(rng), rng);
        CHECK(icg::oracle_energy(set) == icg::energy(set).energy);
    }
}
