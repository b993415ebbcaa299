#include "icg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "icg/arith.hpp"
#include "icg/checked.hpp"

namespace icg::search {

std::vector<std::uint32_t> enumerate_divisor_sets() {
    std::vector<std::uint32_t> masks(two_prime::kFullMask);
    for (std::uint32_t m = 1; m <= two_prime::kFullMask; ++m) masks[m - 1] = m;
    return masks;
}

MaximiserResult find_maximiser(const two_prime::PrimePair& pair) {
    const auto A = two_prime::a_table(pair.p());
    const auto B = two_prime::b_table(pair.q());
    const auto classes = two_prime::class_exponent_pairs();
    const auto divs = two_prime::proper_exponent_pairs();

    // weighted[cls][bit] = phi(n/e_cls) * A[a][c] * B[b][f]
    std::int64_t weighted[12][two_prime::kProperDivisorCount];
    std::int64_t unweighted[12][two_prime::kProperDivisorCount];
    for (std::size_t cl = 0; cl < classes.size(); ++cl) {
        const auto [a, b] = classes[cl];
        const std::int64_t w =
            checked_mul(arith::totient(checked_pow(pair.p(), 2 - a)),
                        arith::totient(checked_pow(pair.q(), 3 - b)));
        for (int i = 0; i < two_prime::kProperDivisorCount; ++i) {
            const auto [c, f] = divs[static_cast<std::size_t>(i)];
            const std::int64_t ab =
                checked_mul(A[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)],
                            B[static_cast<std::size_t>(b)][static_cast<std::size_t>(f)]);
            unweighted[cl][i] = ab;
            weighted[cl][i] = checked_mul(w, ab);
        }
    }

    MaximiserResult result(pair);
    std::int64_t dstar_energy = 0;
    for (std::uint32_t mask = 1; mask <= two_prime::kFullMask; ++mask) {
        int128 energy = 0;
        for (std::size_t cl = 0; cl < classes.size(); ++cl) {
            int128 lambda = 0;
            for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
                lambda += weighted[cl][std::countr_zero(bits)];
            energy += lambda < 0 ? -lambda : lambda;
        }
        const std::int64_t e = to_int64(energy);
        if (mask == two_prime::dstar_mask()) dstar_energy = e;
        if (e > result.max_energy) {
            result.max_energy = e;
            result.maximisers.assign(1, mask);
        } else if (e == result.max_energy) {
            result.maximisers.push_back(mask);
        }
    }

    result.is_unique = result.maximisers.size() == 1;
    result.matches_dstar =
        result.is_unique && result.maximisers.front() == two_prime::dstar_mask();

    // Factorised eigenvalue forms against the table route, all 12 classes.
    const auto kron = two_prime::kronecker_eigenvalues(pair);
    result.kronecker_ok = true;
    for (std::size_t cl = 0; cl < classes.size(); ++cl) {
        const auto [a, b] = classes[cl];
        int128 lambda = 0;
        for (std::uint32_t bits = two_prime::dstar_mask(); bits != 0; bits &= bits - 1)
            lambda += unweighted[cl][std::countr_zero(bits)];
        const std::int64_t expected =
            b <= 2 ? checked_mul(kron.alpha[static_cast<std::size_t>(a)],
                                 kron.s[static_cast<std::size_t>(b)])
                   : kron.b3[static_cast<std::size_t>(a)];
        if (lambda != expected || kron.class_eigenvalues[cl] != lambda)
            result.kronecker_ok = false;
    }

    result.formula_ok = two_prime::closed_form_energy(pair) == dstar_energy;
    return result;
}

std::int64_t default_prime_limit(std::int64_t bound) {
    std::int64_t r = 2;
    while (static_cast<int128>(r) * r * r <= bound) ++r;  // smallest r with r^3 > bound
    while (!arith::is_prime(r)) ++r;
    return r;
}

std::vector<two_prime::PrimePair> enumerate_pairs(std::int64_t bound,
                                                  std::int64_t prime_limit) {
    if (bound < kSmallestOrder)
        throw std::invalid_argument("bound " + std::to_string(bound) +
                                    " below smallest order 675");
    const std::int64_t limit = prime_limit > 0 ? prime_limit : default_prime_limit(bound);
    std::vector<std::int64_t> primes = arith::sieve_primes(limit);
    std::erase(primes, 2);

    std::vector<two_prime::PrimePair> pairs;
    for (std::int64_t q : primes) {
        const int128 q3 = static_cast<int128>(q) * q * q;
        if (q3 * 9 > bound) break;
        for (std::int64_t p : primes) {
            if (p == q) continue;
            if (static_cast<int128>(p) * p * q3 > bound) break;
            pairs.emplace_back(p, q);
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const two_prime::PrimePair& x, const two_prime::PrimePair& y) {
                  return x.order() != y.order() ? x.order() < y.order()
                                                : x.p() < y.p();
              });
    return pairs;
}

SurveyResult survey(std::int64_t bound, int workers, std::int64_t prime_limit) {
    const auto start = std::chrono::steady_clock::now();
    const auto pairs = enumerate_pairs(bound, prime_limit);

    unsigned worker_count = workers > 0
                                ? static_cast<unsigned>(workers)
                                : std::max(1u, std::thread::hardware_concurrency());
    worker_count = std::min<unsigned>(worker_count,
                                      std::max<std::size_t>(pairs.size(), 1));

    // Each pair writes its own slot; counters are derived afterwards in
    // enumeration order, so output is independent of scheduling.
    std::vector<MaximiserResult> results;
    results.reserve(pairs.size());
    for (const auto& pair : pairs) results.emplace_back(pair);

    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            results[i] = find_maximiser(pairs[i]);
        }
    };
    if (worker_count <= 1) {
        run();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) threads.emplace_back(run);
        for (auto& t : threads) t.join();
    }

    SurveyResult out;
    out.report.bound = bound;
    out.report.orders_tested = static_cast<std::int64_t>(results.size());
    out.report.comparisons_total =
        out.report.orders_tested * static_cast<std::int64_t>(two_prime::kFullMask);
    std::set<std::pair<std::int64_t, std::int64_t>> unordered;
    for (const auto& r : results) {
        unordered.insert(std::minmax(r.pair.p(), r.pair.q()));
        out.report.largest_prime =
            std::max({out.report.largest_prime, r.pair.p(), r.pair.q()});
        if (!r.matches_dstar) ++out.report.dstar_mismatches;
        if (!r.formula_ok) ++out.report.formula_failures;
        if (!r.kronecker_ok) ++out.report.kronecker_failures;
    }
    out.report.distinct_unordered_pairs = static_cast<std::int64_t>(unordered.size());
    out.orders = std::move(results);
    out.report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace icg::search
