#include "icg/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "icg/checked.hpp"

namespace icg::arith {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

Factorisation factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorisation factors;
    std::int64_t rest = n;
    for (std::int64_t p : sieve_primes(isqrt(n))) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        factors.push_back({p, e});
    }
    if (rest > 1) factors.push_back({rest, 1});  // remaining cofactor is prime
    return factors;
}

namespace {

std::int64_t totient_of(const Factorisation& f) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : f)
        phi = checked_mul(phi, checked_mul(checked_pow(p, e - 1), p - 1));
    return phi;
}

int mobius_of(const Factorisation& f) {
    for (const auto& [p, e] : f)
        if (e >= 2) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    return totient_of(factorize(n));
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    return mobius_of(factorize(n));
}

std::int64_t ramanujan_sum(std::int64_t j, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("ramanujan_sum: m must be positive");
    if (j < 0) throw std::invalid_argument("ramanujan_sum: j must be nonnegative");
    const std::int64_t g = std::gcd(j, m);  // gcd(0, m) = m, so c(0, m) = phi(m)
    const auto reduced = factorize(m / g);
    const int mu = mobius_of(reduced);
    if (mu == 0) return 0;
    // phi(m/g) divides phi(m), so the division is exact.
    return mu * (totient_of(factorize(m)) / totient_of(reduced));
}

std::int64_t ramanujan_sum_prime_power(std::int64_t p, int i, int k) {
    if (!is_prime(p))
        throw std::invalid_argument("ramanujan_sum_prime_power: p must be prime");
    if (i < 0 || k < 0)
        throw std::invalid_argument("ramanujan_sum_prime_power: negative exponent");
    if (i >= k)
        return k == 0 ? 1 : checked_mul(checked_pow(p, k - 1), p - 1);
    if (i == k - 1) return -checked_pow(p, i);
    return 0;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk = checked_mul(pk, p);
            for (std::size_t d = 0; d < base; ++d)
                divs.push_back(checked_mul(divs[d], pk));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace icg::arith
