#pragma once

// Divisor-class spectrum and exact integer energy of the integral circulant
// graph ICG(n, D): vertex set Z_n, with a ~ b whenever gcd(a - b, n) lies in
// D, a nonempty set of proper divisors of n.
//
// The eigenvalue indexed by j in [0, n) is sum_{d in D} c(j, n/d) and depends
// on j only through e = gcd(j, n), so the n eigenvalues collapse to one
// integer per divisor class e | n with multiplicity phi(n/e). The class e = n
// (j = 0) carries the vertex degree. The energy is
//     E(n, D) = sum_{e | n} phi(n/e) * | sum_{d in D} c(e, n/d) |,
// an exact (and always even) integer. No floating point anywhere on this
// path.

#include <cstdint>
#include <vector>

namespace icg {

// A validated divisor set: nonempty, ascending, distinct proper divisors of
// the order n. Construction sorts its input and rejects anything else.
class DivisorSet {
  public:
    DivisorSet(std::int64_t order, std::vector<std::int64_t> members);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& members() const { return members_; }

  private:
    std::int64_t order_;
    std::vector<std::int64_t> members_;
};

struct SpectrumEntry {
    std::int64_t class_divisor;  // e | n, including e = n (the j = 0 class)
    std::int64_t eigenvalue;
    std::int64_t multiplicity;   // phi(n/e)
};

// One entry per divisor class, ascending by class divisor. Invariants
// (checked on construction): multiplicities sum to n, the weighted trace is
// zero, and the degree class e = n dominates every |eigenvalue|.
struct ClassSpectrum {
    std::int64_t order = 0;
    std::vector<SpectrumEntry> entries;

    std::int64_t degree() const { return entries.back().eigenvalue; }
};

struct EnergyRecord {
    std::int64_t order = 0;
    std::vector<std::int64_t> divisor_set;
    std::int64_t energy = 0;  // exact, even
};

// Eigenvalue of the class e = gcd(j, n); rejects e that does not divide n.
std::int64_t eigenvalue_at_class(const DivisorSet& set, std::int64_t class_divisor);

ClassSpectrum spectrum(const DivisorSet& set);

EnergyRecord energy(const DivisorSet& set);

}  // namespace icg
