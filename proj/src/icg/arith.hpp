#pragma once

// Exact elementary number theory on 64-bit integers: prime sieve, trial
// division factorisation, Euler totient, Moebius function, Ramanujan sums
// (Hoelder form and prime-power closed form), divisor enumeration.
//
// Everything here is a pure function of its arguments; results are exact
// integers throughout. The intended operating range is n <= 1e12 (plus
// prime powers p^k with p <= 500, k <= 6, which trial division handles
// cheaply because the factor is small).

#include <cstdint>
#include <vector>

namespace icg::arith {

struct PrimePower {
    std::int64_t prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorisation, ascending by prime. factorize(1) is empty.
using Factorisation = std::vector<PrimePower>;

// All primes in [2, limit], ascending. limit < 2 yields an empty list.
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

// Deterministic primality by trial division.
bool is_prime(std::int64_t n);

// Trial division by sieved primes up to sqrt(n).
Factorisation factorize(std::int64_t n);

std::int64_t totient(std::int64_t n);

// 0 unless n is squarefree, otherwise (-1)^(number of prime factors).
int mobius(std::int64_t n);

// Ramanujan sum c(j, m) via the Hoelder formula
//     c(j, m) = mu(m/g) * phi(m) / phi(m/g),   g = gcd(j, m),
// with the convention gcd(0, m) = m, so c(0, m) = phi(m).
std::int64_t ramanujan_sum(std::int64_t j, std::int64_t m);

// c(p^i, p^k) in closed form:
//     p^{k-1}(p-1)  if i >= k,
//     -p^i          if i == k-1,
//     0             if i <  k-1.
std::int64_t ramanujan_sum_prime_power(std::int64_t p, int i, int k);

// All divisors of n including n itself, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Largest integer r with r*r <= n.
std::int64_t isqrt(std::int64_t n);

}  // namespace icg::arith
