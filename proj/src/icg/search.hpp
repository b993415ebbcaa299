#pragma once

// Exhaustive maximiser search over all 2047 nonempty divisor masks of one
// order n = p^2 q^3, and the survey over every such order up to a bound.
//
// Per pair, the 12 (class) x 11 (divisor) table of phi(n/e)-weighted
// Ramanujan products A[a][c] * B[b][f] is precomputed once; the energy of a
// mask is then twelve signed dot products over its set bits. All 2047 masks
// are always evaluated; there is no early exit, because the claim being
// verified is global maximality.

#include <cstdint>
#include <vector>

#include "icg/two_prime.hpp"

namespace icg::search {

// Masks 1..2047 in ascending order.
std::vector<std::uint32_t> enumerate_divisor_sets();

struct MaximiserResult {
    explicit MaximiserResult(two_prime::PrimePair pair) : pair(pair) {}

    two_prime::PrimePair pair;
    std::int64_t max_energy = 0;
    std::vector<std::uint32_t> maximisers;  // every argmax mask, ascending
    bool is_unique = false;
    bool matches_dstar = false;   // argmax set is exactly { D* }
    bool kronecker_ok = false;    // factorised forms match the A/B-table eigenvalues
    bool formula_ok = false;      // closed-form polynomial equals E(n, D*)
};

MaximiserResult find_maximiser(const two_prime::PrimePair& pair);

struct SurveyReport {
    std::int64_t bound = 0;
    std::int64_t orders_tested = 0;
    std::int64_t distinct_unordered_pairs = 0;
    std::int64_t largest_prime = 0;
    std::int64_t comparisons_total = 0;  // orders_tested * 2047
    std::int64_t dstar_mismatches = 0;
    std::int64_t formula_failures = 0;
    std::int64_t kronecker_failures = 0;
    double elapsed_seconds = 0.0;
};

struct SurveyResult {
    SurveyReport report;
    std::vector<MaximiserResult> orders;  // ascending by n
};

// Smallest prime whose cube exceeds the bound. Primes up to this limit are
// the candidate pool for both p and q; at bound 1e8 the limit is 467.
std::int64_t default_prime_limit(std::int64_t bound);

// All ordered pairs of distinct odd primes <= prime_limit with p^2 q^3 <=
// bound, sorted ascending by order n (ties by p; n is injective in (p, q)).
// prime_limit <= 0 selects default_prime_limit(bound).
std::vector<two_prime::PrimePair> enumerate_pairs(std::int64_t bound,
                                                  std::int64_t prime_limit = 0);

// Runs find_maximiser on every enumerated pair. workers <= 0 uses the
// hardware thread count. Output is deterministic: per-order results keep
// enumeration order and counters are merged after all workers join, so the
// result is identical for any worker count.
SurveyResult survey(std::int64_t bound, int workers = 0, std::int64_t prime_limit = 0);

inline constexpr std::int64_t kSmallestOrder = 675;  // 5^2 * 3^3

}  // namespace icg::search
