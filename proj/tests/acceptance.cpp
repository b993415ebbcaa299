// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. Every assertion is exact integer equality; the only
// floating point sits inside the dense-eigensolver oracle of criterion 4.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "icg/arith.hpp"
#include "icg/oracle.hpp"
#include "icg/search.hpp"
#include "icg/spectrum.hpp"
#include "icg/two_prime.hpp"

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::vector<std::int64_t> odd_primes_upto(std::int64_t limit) {
    auto primes = icg::arith::sieve_primes(limit);
    std::erase(primes, 2);
    return primes;
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
    auto divs = icg::arith::divisors(n);
    divs.pop_back();
    return divs;
}

// ------------------------------------------------------------------
// 1. Seven reference pairs: closed-form polynomial vs divisor-class sum.
// ------------------------------------------------------------------
void criterion_reference_table() {
    struct Row {
        std::int64_t p, q, energy;
    };
    const Row rows[] = {{3, 5, 8200},      {3, 7, 24856},     {5, 7, 87280},
                        {5, 11, 370368},   {7, 11, 799688},   {11, 13, 3636904},
                        {13, 17, 11983136}};
    for (const auto& row : rows) {
        const icg::two_prime::PrimePair pair(row.p, row.q);
        const std::int64_t formula = icg::two_prime::closed_form_energy(pair);
        const std::int64_t spectral =
            icg::energy(icg::DivisorSet(pair.order(),
                                        icg::two_prime::dstar_divisors(pair)))
                .energy;
        require(formula == row.energy,
                "closed form at (" + std::to_string(row.p) + "," +
                    std::to_string(row.q) + ") = " + std::to_string(formula) +
                    ", expected " + std::to_string(row.energy));
        require(spectral == row.energy,
                "divisor-class energy at (" + std::to_string(row.p) + "," +
                    std::to_string(row.q) + ") = " + std::to_string(spectral) +
                    ", expected " + std::to_string(row.energy));
    }
}

// ------------------------------------------------------------------
// 2. Survey at bound 1e8: 618 orders, largest prime 467, 1,265,046
//    comparisons, zero failures. The unordered-pair count is reported and
//    flagged against 437, not hard-asserted.
// ------------------------------------------------------------------
void criterion_survey() {
    const auto result = icg::search::survey(100000000, 0);
    const auto& r = result.report;
    require(r.orders_tested == 618,
            "orders tested = " + std::to_string(r.orders_tested) + ", expected 618");
    require(r.largest_prime == 467,
            "largest prime = " + std::to_string(r.largest_prime) + ", expected 467");
    require(r.comparisons_total == 1265046,
            "comparisons = " + std::to_string(r.comparisons_total) +
                ", expected 1265046");
    require(r.dstar_mismatches == 0,
            std::to_string(r.dstar_mismatches) + " dstar mismatches");
    require(r.formula_failures == 0,
            std::to_string(r.formula_failures) + " formula failures");
    require(r.kronecker_failures == 0,
            std::to_string(r.kronecker_failures) + " kronecker failures");
    std::printf("  note: distinct unordered pairs = %" PRId64
                " (437 expected under the unordered reading)%s\n",
                r.distinct_unordered_pairs,
                r.distinct_unordered_pairs == 437 ? "" : "  <-- DIVERGES");
    std::printf("  note: survey elapsed %.1f s over %" PRId64 " orders\n",
                r.elapsed_seconds, r.orders_tested);
}

// ------------------------------------------------------------------
// 3. Kronecker factorisation for all ordered odd-prime pairs p, q <= 100:
//    twelve class eigenvalues of D* via (a) the factorised closed forms,
//    (b) the A/B-table route, (c) direct divisor-class summation.
// ------------------------------------------------------------------
void criterion_kronecker() {
    const auto primes = odd_primes_upto(100);
    const auto classes = icg::two_prime::class_exponent_pairs();
    int pairs = 0;
    for (std::int64_t p : primes) {
        for (std::int64_t q : primes) {
            if (p == q) continue;
            ++pairs;
            const icg::two_prime::PrimePair pair(p, q);
            const auto kron = icg::two_prime::kronecker_eigenvalues(pair);
            const auto spec = icg::spectrum(icg::DivisorSet(
                pair.order(), icg::two_prime::dstar_divisors(pair)));
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const auto [a, b] = classes[i];
                const std::int64_t factorised =
                    b <= 2 ? kron.alpha[static_cast<std::size_t>(a)] *
                                 kron.s[static_cast<std::size_t>(b)]
                           : kron.b3[static_cast<std::size_t>(a)];
                const std::int64_t table = kron.class_eigenvalues[i];
                const std::int64_t divisor = pair.divisor(classes[i]);
                std::int64_t direct = 0;
                bool found = false;
                for (const auto& entry : spec.entries)
                    if (entry.class_divisor == divisor) {
                        direct = entry.eigenvalue;
                        found = true;
                    }
                const std::string where = "(" + std::to_string(p) + "," +
                                          std::to_string(q) + ") class (" +
                                          std::to_string(a) + "," +
                                          std::to_string(b) + ")";
                require(found, "missing class divisor at " + where);
                require(factorised == table,
                        "factorised form vs table mismatch at " + where);
                require(table == direct,
                        "table vs direct summation mismatch at " + where);
            }
        }
    }
    require(pairs == 552, "expected 552 ordered pairs, saw " + std::to_string(pairs));
}

// ------------------------------------------------------------------
// 4. Dense-eigensolver oracle equals the exact energy on 50 random
//    instances with n <= 600, plus the fixed instance (1125, D*).
// ------------------------------------------------------------------
void criterion_oracle() {
    std::mt19937 rng(123456789u);
    std::uniform_int_distribution<std::int64_t> order(2, 600);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t n = order(rng);
        const auto pool = proper_divisors(n);
        std::vector<std::int64_t> members;
        for (std::int64_t d : pool)
            if (coin(rng)) members.push_back(d);
        if (members.empty())
            members.push_back(pool[std::uniform_int_distribution<std::size_t>(
                0, pool.size() - 1)(rng)]);
        const icg::DivisorSet set(n, members);
        const std::int64_t exact = icg::energy(set).energy;
        const std::int64_t dense = icg::oracle_energy(set);
        require(exact == dense, "oracle mismatch at n = " + std::to_string(n) +
                                    ": exact " + std::to_string(exact) +
                                    " vs dense " + std::to_string(dense));
    }
    const icg::two_prime::PrimePair pair(3, 5);
    const icg::DivisorSet dstar(1125, icg::two_prime::dstar_divisors(pair));
    require(icg::oracle_energy(dstar) == 8200, "oracle at (1125, D*) is not 8200");
}

// ------------------------------------------------------------------
// 5. Arithmetic identities: Ramanujan multiplicativity, prime-power closed
//    form vs Hoelder formula, spectrum trace/degree invariants, totient
//    divisor sum.
// ------------------------------------------------------------------
void criterion_arithmetic() {
    // multiplicativity over coprime splittings of every m <= 1e4
    for (std::int64_t m = 1; m <= 10000; ++m) {
        const auto factors = icg::arith::factorize(m);
        const auto parts = static_cast<std::size_t>(1) << factors.size();
        for (std::size_t subset = 0; subset < parts; ++subset) {
            std::int64_t m1 = 1;
            for (std::size_t i = 0; i < factors.size(); ++i)
                if (subset >> i & 1u)
                    for (int t = 0; t < factors[i].exponent; ++t)
                        m1 *= factors[i].prime;
            const std::int64_t m2 = m / m1;
            if (m1 > m2) continue;
            for (std::int64_t j = 0; j <= 50; ++j)
                require(icg::arith::ramanujan_sum(j, m) ==
                            icg::arith::ramanujan_sum(j, m1) *
                                icg::arith::ramanujan_sum(j, m2),
                        "multiplicativity fails at j=" + std::to_string(j) +
                            ", m1=" + std::to_string(m1) +
                            ", m2=" + std::to_string(m2));
        }
    }

    // prime-power closed form vs the Hoelder evaluation
    for (std::int64_t p : icg::arith::sieve_primes(467))
        for (int i = 0; i <= 4; ++i)
            for (int k = 0; k <= 3; ++k) {
                std::int64_t pi = 1;
                for (int t = 0; t < i; ++t) pi *= p;
                std::int64_t pk = 1;
                for (int t = 0; t < k; ++t) pk *= p;
                require(icg::arith::ramanujan_sum_prime_power(p, i, k) ==
                            icg::arith::ramanujan_sum(pi, pk),
                        "prime-power form fails at p=" + std::to_string(p) +
                            ", i=" + std::to_string(i) + ", k=" + std::to_string(k));
            }
    for (std::int64_t p : {3, 5, 7, 11, 13})
        for (int i = 0; i <= 6; ++i)
            for (int k = 0; k <= 6; ++k) {
                std::int64_t pi = 1;
                for (int t = 0; t < i; ++t) pi *= p;
                std::int64_t pk = 1;
                for (int t = 0; t < k; ++t) pk *= p;
                require(icg::arith::ramanujan_sum_prime_power(p, i, k) ==
                            icg::arith::ramanujan_sum(pi, pk),
                        "deep prime-power form fails at p=" + std::to_string(p));
            }

    // trace zero and degree dominance on every computed spectrum
    std::mt19937 rng(24680u);
    std::bernoulli_distribution coin(0.5);
    auto check_spectrum = [](const icg::ClassSpectrum& spec, std::int64_t n) {
        std::int64_t trace = 0, mult_sum = 0;
        for (const auto& e : spec.entries) {
            trace += e.multiplicity * e.eigenvalue;
            mult_sum += e.multiplicity;
            require(std::abs(e.eigenvalue) <= spec.degree(),
                    "degree dominance fails at n = " + std::to_string(n));
        }
        require(trace == 0, "trace nonzero at n = " + std::to_string(n));
        require(mult_sum == n, "multiplicities at n = " + std::to_string(n));
    };
    for (std::int64_t n = 2; n <= 1200; ++n)
        check_spectrum(icg::spectrum(icg::DivisorSet(n, {1})), n);
    std::uniform_int_distribution<std::int64_t> order(2, 2000);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t n = order(rng);
        const auto pool = proper_divisors(n);
        std::vector<std::int64_t> members;
        for (std::int64_t d : pool)
            if (coin(rng)) members.push_back(d);
        if (members.empty()) members.push_back(1);
        check_spectrum(icg::spectrum(icg::DivisorSet(n, members)), n);
    }

    // totient divisor-sum identity
    for (std::int64_t n = 1; n <= 10000; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d : icg::arith::divisors(n)) sum += icg::arith::totient(d);
        require(sum == n, "totient divisor sum fails at n = " + std::to_string(n));
    }
}

// ------------------------------------------------------------------
// 6. The two intermediate energy identities hold for all ordered pairs of
//    odd primes p, q <= 200.
// ------------------------------------------------------------------
void criterion_derivation() {
    const auto primes = odd_primes_upto(200);
    for (std::int64_t p : primes)
        for (std::int64_t q : primes) {
            if (p == q) continue;
            const icg::two_prime::PrimePair pair(p, q);
            const auto check = icg::two_prime::derivation_check(pair);
            const std::string where =
                "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            require(check.q_sum == (q - 1) * (3 * q * q - 2 * q + 1),
                    "q-sum identity fails at " + where);
            require(check.p_sum == 5 * p * p - 8 * p + 4,
                    "p-sum identity fails at " + where);
            require(check.ok && check.total ==
                                    icg::two_prime::closed_form_energy(pair),
                    "recombination fails at " + where);
        }
}

// ------------------------------------------------------------------
// 7. Optimality certificate at (3,5): every one of the 2047 masks has
//    energy <= 8200, with equality exactly at D* (mask 1445). Energies come
//    from the general divisor-class path, independent of the search tables.
// ------------------------------------------------------------------
void criterion_certificate() {
    const icg::two_prime::PrimePair pair(3, 5);
    for (std::uint32_t mask = 1; mask <= icg::two_prime::kFullMask; ++mask) {
        const icg::DivisorSet set(pair.order(),
                                  icg::two_prime::mask_divisors(pair, mask));
        const std::int64_t e = icg::energy(set).energy;
        require(e <= 8200, "mask " + std::to_string(mask) + " exceeds 8200");
        require((e == 8200) == (mask == icg::two_prime::dstar_mask()),
                "mask " + std::to_string(mask) + " attains 8200");
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*fn)();
        double limit_seconds;
    };
    const Criterion criteria[] = {
        {"[1] seven reference energies via closed form and divisor-class sum",
         criterion_reference_table, 1.0},
        {"[2] survey at bound 1e8: 618 orders, largest prime 467, zero failures",
         criterion_survey, 900.0},
        {"[3] Kronecker factorisation of all D* eigenvalues, p, q <= 100",
         criterion_kronecker, 10.0},
        {"[4] dense-eigensolver oracle equals exact energy (50 random + fixed)",
         criterion_oracle, 60.0},
        {"[5] arithmetic identity suite (Ramanujan, totient, spectra)",
         criterion_arithmetic, 30.0},
        {"[6] energy derivation intermediate identities, p, q <= 200",
         criterion_derivation, 5.0},
        {"[7] optimality certificate at (3,5) over all 2047 masks",
         criterion_certificate, 1.0},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            criterion.fn();
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && seconds > criterion.limit_seconds) {
            ok = false;
            detail = "exceeded time limit of " +
                     std::to_string(criterion.limit_seconds) + " s";
        }
        std::printf("%s %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.name,
                    seconds, detail.empty() ? "" : ": ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
