#include "icg/two_prime.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "icg/arith.hpp"
#include "icg/checked.hpp"

namespace icg::two_prime {

PrimePair::PrimePair(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    for (std::int64_t x : {p, q})
        if (x < 3 || x % 2 == 0 || !arith::is_prime(x))
            throw std::invalid_argument(std::to_string(x) + " is not an odd prime");
    if (p == q)
        throw std::invalid_argument("primes must be distinct, got p = q = " +
                                    std::to_string(p));
    n_ = checked_mul(checked_pow(p, 2), checked_pow(q, 3));
}

std::int64_t PrimePair::divisor(ExponentPair e) const {
    if (e.a < 0 || e.a > 2 || e.b < 0 || e.b > 3)
        throw std::invalid_argument("exponent pair out of range");
    return checked_mul(checked_pow(p_, e.a), checked_pow(q_, e.b));
}

ATable a_table(std::int64_t p) {
    ATable table{};
    for (int a = 0; a <= 2; ++a)
        for (int c = 0; c <= 2; ++c)
            table[a][c] = arith::ramanujan_sum_prime_power(p, a, 2 - c);
    return table;
}

BTable b_table(std::int64_t q) {
    BTable table{};
    for (int b = 0; b <= 3; ++b)
        for (int f = 0; f <= 3; ++f)
            table[b][f] = arith::ramanujan_sum_prime_power(q, b, 3 - f);
    return table;
}

std::vector<std::int64_t> mask_divisors(const PrimePair& pair, std::uint32_t mask) {
    if (mask < 1 || mask > kFullMask)
        throw std::invalid_argument("divisor mask must lie in [1, 2047]");
    std::vector<std::int64_t> divs;
    const auto pairs = proper_exponent_pairs();
    for (int i = 0; i < kProperDivisorCount; ++i)
        if (mask >> i & 1u) divs.push_back(pair.divisor(pairs[static_cast<std::size_t>(i)]));
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint32_t mask_from_divisors(const PrimePair& pair,
                                 const std::vector<std::int64_t>& divisors) {
    std::uint32_t mask = 0;
    const auto pairs = proper_exponent_pairs();
    for (std::int64_t d : divisors) {
        bool found = false;
        for (int i = 0; i < kProperDivisorCount; ++i) {
            if (pair.divisor(pairs[static_cast<std::size_t>(i)]) == d) {
                mask |= 1u << i;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument(std::to_string(d) +
                                        " is not a proper divisor of " +
                                        std::to_string(pair.order()));
    }
    if (mask == 0) throw std::invalid_argument("empty divisor set");
    return mask;
}

std::vector<std::int64_t> dstar_divisors(const PrimePair& pair) {
    return mask_divisors(pair, dstar_mask());
}

std::int64_t eigenvalue(const PrimePair& pair, std::uint32_t mask, ExponentPair cls) {
    if (mask < 1 || mask > kFullMask)
        throw std::invalid_argument("divisor mask must lie in [1, 2047]");
    if (cls.a < 0 || cls.a > 2 || cls.b < 0 || cls.b > 3)
        throw std::invalid_argument("class exponent pair out of range");
    const ATable A = a_table(pair.p());
    const BTable B = b_table(pair.q());
    const auto pairs = proper_exponent_pairs();
    int128 lambda = 0;
    for (int i = 0; i < kProperDivisorCount; ++i) {
        if (!(mask >> i & 1u)) continue;
        const auto [c, f] = pairs[static_cast<std::size_t>(i)];
        lambda += static_cast<int128>(A[static_cast<std::size_t>(cls.a)][static_cast<std::size_t>(c)]) *
                  B[static_cast<std::size_t>(cls.b)][static_cast<std::size_t>(f)];
    }
    return to_int64(lambda);
}

KroneckerComponents kronecker_eigenvalues(const PrimePair& pair) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();

    KroneckerComponents k;
    k.alpha = {-2, 2 * (p - 1), -(p * p - 2 * p + 2)};
    k.s = {1, 1 - q, 1 - q + q * q};
    k.b3 = {q * q * q - 2 * q * q + 2 * q - 2,
            (p - 1) * (2 - 2 * q + 2 * q * q - q * q * q),
            (p * p - 2 * p + 2) * (q - 1) * (q * q + 1) + (p - 1) * q * q * q};

    const auto classes = class_exponent_pairs();
    for (std::size_t i = 0; i < classes.size(); ++i)
        k.class_eigenvalues[i] = eigenvalue(pair, dstar_mask(), classes[i]);
    return k;
}

std::int64_t closed_form_energy(const PrimePair& pair) {
    const int128 p = pair.p();
    const int128 q = pair.q();
    const int128 value =
        (5 * p * p - 8 * p + 4) * (q - 1) * (3 * q * q - 2 * q + 1) +
        (p - 1) * (2 * p - 1) * (q * q * q - 2 * q * q + 2 * q - 2) +
        (p * p - 2 * p + 2) * (q - 1) * (q * q + 1) + (p - 1) * q * q * q;
    return to_int64(value);
}

DerivationCheck derivation_check(const PrimePair& pair) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    const KroneckerComponents k = kronecker_eigenvalues(pair);

    // Sign pattern used before taking absolute values; holds for all odd
    // primes q >= 3.
    if (!(k.s[0] > 0 && k.s[1] < 0 && k.s[2] > 0))
        throw std::logic_error("derivation_check: unexpected sign of S_b");
    if (!(k.b3[0] > 0 && k.b3[1] < 0 && k.b3[2] > 0))
        throw std::logic_error("derivation_check: unexpected sign of a b=3 eigenvalue");
    if (!(k.alpha[0] < 0 && k.alpha[1] > 0 && k.alpha[2] < 0))
        throw std::logic_error("derivation_check: unexpected sign of alpha_a");

    DerivationCheck out;
    const std::int64_t phi_q3 = arith::totient(checked_pow(q, 3));
    const std::int64_t phi_q2 = arith::totient(checked_pow(q, 2));
    const std::int64_t phi_q1 = q - 1;
    out.q_sum = to_int64(static_cast<int128>(phi_q3) * k.s[0] +
                         static_cast<int128>(phi_q2) * -k.s[1] +
                         static_cast<int128>(phi_q1) * k.s[2]);

    const std::int64_t phi_p2 = arith::totient(checked_pow(p, 2));
    const std::int64_t phi_p1 = p - 1;
    out.p_sum = to_int64(static_cast<int128>(phi_p2) * -k.alpha[0] +
                         static_cast<int128>(phi_p1) * k.alpha[1] +
                         -k.alpha[2]);

    out.b3_contribution = to_int64(static_cast<int128>(phi_p2) * k.b3[0] +
                                   static_cast<int128>(phi_p1) * -k.b3[1] + k.b3[2]);
    out.total = to_int64(static_cast<int128>(out.p_sum) * out.q_sum +
                         out.b3_contribution);

    const bool q_identity = out.q_sum == (q - 1) * (3 * q * q - 2 * q + 1);
    const bool p_identity = out.p_sum == 5 * p * p - 8 * p + 4;
    out.ok = q_identity && p_identity && out.total == closed_form_energy(pair);
    return out;
}

}  // namespace icg::two_prime
