#pragma once

// Orders n = p^2 q^3 for distinct odd primes p, q. The eleven proper
// divisors p^a q^b live on the exponent lattice {0,1,2} x {0,1,2,3} minus
// (2,3); divisor sets are 11-bit masks over a fixed bit order. Eigenvalues
// factor through the per-prime Ramanujan tables
//     A[a][c] = c(p^a, p^{2-c})          (3 x 3)
//     B[b][f] = c(q^b, q^{3-f})          (4 x 4)
// as lambda_{(a,b)}(D) = sum_{(c,f) in D} A[a][c] * B[b][f].
//
// For the distinguished set D* = {1, p^2, pq, q^2, p^2q^2, pq^3} the class
// eigenvalues separate into a pure p-factor times a pure q-factor for
// b <= 2 (Kronecker factorisation), which yields a closed-form polynomial
// for the energy E(p^2 q^3, D*).

#include <array>
#include <cstdint>
#include <vector>

namespace icg::two_prime {

// Exponent coordinates (a, b) of the divisor p^a q^b.
struct ExponentPair {
    int a = 0;
    int b = 0;
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

inline constexpr int kProperDivisorCount = 11;
inline constexpr std::uint32_t kFullMask = (1u << kProperDivisorCount) - 1;  // 2047

// Canonical bit order: index 4a + b for a <= 1, 8 + b for a = 2. Bit i of a
// mask selects proper_exponent_pairs()[i].
constexpr std::array<ExponentPair, kProperDivisorCount> proper_exponent_pairs() {
    return {{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
             {2, 0}, {2, 1}, {2, 2}}};
}

// All twelve divisor classes: the eleven proper pairs plus (2,3) (= n, the
// degree class) last.
constexpr std::array<ExponentPair, 12> class_exponent_pairs() {
    return {{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
             {2, 0}, {2, 1}, {2, 2}, {2, 3}}};
}

constexpr int bit_index(ExponentPair e) {
    return e.a <= 1 ? 4 * e.a + e.b : 8 + e.b;
}

// Mask of D* = {(0,0), (2,0), (1,1), (0,2), (2,2), (1,3)} = 1445.
constexpr std::uint32_t dstar_mask() {
    return (1u << bit_index({0, 0})) | (1u << bit_index({2, 0})) |
           (1u << bit_index({1, 1})) | (1u << bit_index({0, 2})) |
           (1u << bit_index({2, 2})) | (1u << bit_index({1, 3}));
}

// A validated pair of distinct odd primes and its order n = p^2 q^3. The
// pair is ordered: (3,5) and (5,3) are different orders (1125 vs 675).
class PrimePair {
  public:
    PrimePair(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    std::int64_t order() const { return n_; }

    std::int64_t divisor(ExponentPair e) const;  // p^a q^b

  private:
    std::int64_t p_, q_, n_;
};

using ATable = std::array<std::array<std::int64_t, 3>, 3>;  // A[a][c]
using BTable = std::array<std::array<std::int64_t, 4>, 4>;  // B[b][f]

ATable a_table(std::int64_t p);
BTable b_table(std::int64_t q);

// Divisor values selected by a mask, ascending. Bijective with the general
// divisor-set representation for this pair.
std::vector<std::int64_t> mask_divisors(const PrimePair& pair, std::uint32_t mask);
std::uint32_t mask_from_divisors(const PrimePair& pair,
                                 const std::vector<std::int64_t>& divisors);
std::vector<std::int64_t> dstar_divisors(const PrimePair& pair);

// Eigenvalue of the class cls (which may be (2,3), the degree class) for the
// divisor set given by mask.
std::int64_t eigenvalue(const PrimePair& pair, std::uint32_t mask, ExponentPair cls);

// The factorised form of the D* eigenvalues:
//   alpha = (-2, 2(p-1), -(p^2-2p+2))
//   s[b]  = sum_{k=0}^{b} (-q)^k  (partial alternating geometric sums)
//   lambda_{(a,b)}(D*) = alpha[a] * s[b]           for b <= 2
//   b3[a] closed forms for the b = 3 row.
struct KroneckerComponents {
    std::array<std::int64_t, 3> alpha;
    std::array<std::int64_t, 3> s;
    std::array<std::int64_t, 3> b3;
    // D* eigenvalue per class, in class_exponent_pairs() order, computed
    // through the A/B tables (not through the closed forms above).
    std::array<std::int64_t, 12> class_eigenvalues;
};

KroneckerComponents kronecker_eigenvalues(const PrimePair& pair);

// Closed-form value of E(p^2 q^3, D*):
//   (5p^2-8p+4)(q-1)(3q^2-2q+1)
//   + (p-1)(2p-1)(q^3-2q^2+2q-2)
//   + (p^2-2p+2)(q-1)(q^2+1) + (p-1)q^3.
std::int64_t closed_form_energy(const PrimePair& pair);

// The two intermediate identities behind the closed form, made executable:
//   q_sum = sum_b phi(q^{3-b}) |s[b]|      must equal (q-1)(3q^2-2q+1)
//   p_sum = sum_a phi(p^{2-a}) |alpha[a]|  must equal 5p^2-8p+4
//   p_sum * q_sum + b3_contribution        must equal closed_form_energy.
// Absolute values are taken via the asserted sign pattern (s[0] > 0,
// s[1] < 0, s[2] > 0, b3[0] > 0, b3[1] < 0, b3[2] > 0), not generic |.|.
struct DerivationCheck {
    std::int64_t q_sum = 0;
    std::int64_t p_sum = 0;
    std::int64_t b3_contribution = 0;
    std::int64_t total = 0;
    bool ok = false;
};

DerivationCheck derivation_check(const PrimePair& pair);

}  // namespace icg::two_prime
