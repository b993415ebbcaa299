#include "icg/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "icg/arith.hpp"
#include "icg/checked.hpp"

namespace icg {

namespace {

// Divisor lattice of n: every divisor with its exponent vector and totient.
// Factorises n once; all Ramanujan sums below are pure table work on it.
struct Lattice {
    std::int64_t n;
    std::vector<std::int64_t> primes;            // distinct primes of n
    std::vector<std::vector<std::int64_t>> phi_pp;  // phi_pp[i][e] = phi(p_i^e)
    std::vector<std::int64_t> divs;              // ascending divisor values
    std::vector<std::vector<int>> exps;          // exponent vectors, aligned

    explicit Lattice(std::int64_t order) : n(order) {
        const auto f = arith::factorize(n);
        std::vector<int> max_exp;
        for (const auto& [p, e] : f) {
            primes.push_back(p);
            max_exp.push_back(e);
            std::vector<std::int64_t> phis{1};
            std::int64_t pk = 1;
            for (int i = 1; i <= e; ++i) {
                phis.push_back(checked_mul(pk, p - 1));
                pk = checked_mul(pk, p);
            }
            phi_pp.push_back(std::move(phis));
        }
        std::vector<int> cur(primes.size(), 0);
        enumerate(0, 1, cur, max_exp);
        std::vector<std::size_t> perm(divs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return divs[a] < divs[b]; });
        std::vector<std::int64_t> sdivs(divs.size());
        std::vector<std::vector<int>> sexps(divs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            sdivs[i] = divs[perm[i]];
            sexps[i] = std::move(exps[perm[i]]);
        }
        divs = std::move(sdivs);
        exps = std::move(sexps);
    }

    void enumerate(std::size_t i, std::int64_t value, std::vector<int>& cur,
                   const std::vector<int>& max_exp) {
        if (i == primes.size()) {
            divs.push_back(value);
            exps.push_back(cur);
            return;
        }
        std::int64_t v = value;
        for (int e = 0; e <= max_exp[i]; ++e) {
            cur[i] = e;
            enumerate(i + 1, v, cur, max_exp);
            if (e < max_exp[i]) v = checked_mul(v, primes[i]);
        }
        cur[i] = 0;
    }

    // index of divisor d, or -1
    int index_of(std::int64_t d) const {
        auto it = std::lower_bound(divs.begin(), divs.end(), d);
        if (it == divs.end() || *it != d) return -1;
        return static_cast<int>(it - divs.begin());
    }

    std::int64_t phi_of(const std::vector<int>& e) const {
        std::int64_t phi = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            phi = checked_mul(phi, phi_pp[i][static_cast<std::size_t>(e[i])]);
        return phi;
    }

    // c(e, m) for divisors e, m of n, given by exponent vectors. Hoelder:
    // mu(m/g) * phi(m) / phi(m/g) with g = gcd(e, m), evaluated per prime.
    std::int64_t ramanujan(const std::vector<int>& ve, const std::vector<int>& vm) const {
        std::int64_t value = 1;
        int ones = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const int m = vm[i];
            if (m == 0) continue;
            const int g = std::min(ve[i], m);
            const int h = m - g;  // exponent of p_i in m/g
            if (h >= 2) return 0;
            if (h == 1) {
                ++ones;
                // phi(p^m)/phi(p) = p^{m-1}
                value = checked_mul(value, phi_pp[i][static_cast<std::size_t>(m)] /
                                               phi_pp[i][1]);
            } else {
                value = checked_mul(value, phi_pp[i][static_cast<std::size_t>(m)]);
            }
        }
        return ones % 2 == 0 ? value : -value;
    }
};

std::vector<std::vector<int>> complement_exponents(const Lattice& lat,
                                                   const std::vector<std::int64_t>& members) {
    // exponent vector of n/d per member d
    std::vector<std::vector<int>> out;
    out.reserve(members.size());
    const auto& vn = lat.exps.back();  // exponents of n itself
    for (std::int64_t d : members) {
        const int idx = lat.index_of(d);
        std::vector<int> vm(vn.size());
        for (std::size_t i = 0; i < vn.size(); ++i) vm[i] = vn[i] - lat.exps[static_cast<std::size_t>(idx)][i];
        out.push_back(std::move(vm));
    }
    return out;
}

}  // namespace

DivisorSet::DivisorSet(std::int64_t order, std::vector<std::int64_t> members)
    : order_(order), members_(std::move(members)) {
    if (order_ < 2)
        throw std::invalid_argument("divisor set: order must be at least 2");
    if (members_.empty())
        throw std::invalid_argument("divisor set: empty set");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const std::int64_t d = members_[i];
        if (d < 1 || d >= order_ || order_ % d != 0)
            throw std::invalid_argument(std::to_string(d) +
                                        " is not a proper divisor of " +
                                        std::to_string(order_));
        if (i > 0 && members_[i - 1] == d)
            throw std::invalid_argument("divisor set: duplicate member " +
                                        std::to_string(d));
    }
}

std::int64_t eigenvalue_at_class(const DivisorSet& set, std::int64_t class_divisor) {
    const Lattice lat(set.order());
    if (class_divisor < 1 || lat.index_of(class_divisor) < 0)
        throw std::invalid_argument(std::to_string(class_divisor) +
                                    " does not divide " + std::to_string(set.order()));
    const auto ve = lat.exps[static_cast<std::size_t>(lat.index_of(class_divisor))];
    int128 lambda = 0;
    for (const auto& vm : complement_exponents(lat, set.members()))
        lambda += lat.ramanujan(ve, vm);
    return to_int64(lambda);
}

ClassSpectrum spectrum(const DivisorSet& set) {
    const Lattice lat(set.order());
    const auto comp = complement_exponents(lat, set.members());

    ClassSpectrum result;
    result.order = set.order();
    result.entries.reserve(lat.divs.size());

    const auto& vn = lat.exps.back();
    int128 trace = 0;
    int128 mult_sum = 0;
    for (std::size_t c = 0; c < lat.divs.size(); ++c) {
        int128 lambda = 0;
        for (const auto& vm : comp) lambda += lat.ramanujan(lat.exps[c], vm);
        std::vector<int> co(vn.size());
        for (std::size_t i = 0; i < vn.size(); ++i) co[i] = vn[i] - lat.exps[c][i];
        const std::int64_t mult = lat.phi_of(co);
        trace += static_cast<int128>(mult) * lambda;
        mult_sum += mult;
        result.entries.push_back({lat.divs[c], to_int64(lambda), mult});
    }

    // Invariants of the divisor-class decomposition.
    if (mult_sum != set.order())
        throw std::logic_error("spectrum: multiplicities do not sum to n");
    if (trace != 0)
        throw std::logic_error("spectrum: nonzero trace");
    int128 degree = 0;
    for (const auto& vm : comp) degree += lat.phi_of(vm);
    if (degree != result.entries.back().eigenvalue)
        throw std::logic_error("spectrum: degree class mismatch");
    for (const auto& entry : result.entries)
        if (std::abs(entry.eigenvalue) > result.degree())
            throw std::logic_error("spectrum: eigenvalue exceeds the degree");

    return result;
}

EnergyRecord energy(const DivisorSet& set) {
    const ClassSpectrum spec = spectrum(set);
    int128 total = 0;
    for (const auto& entry : spec.entries)
        total += static_cast<int128>(entry.multiplicity) *
                 (entry.eigenvalue < 0 ? -static_cast<int128>(entry.eigenvalue)
                                       : static_cast<int128>(entry.eigenvalue));
    const std::int64_t e = to_int64(total);
    if (e % 2 != 0)
        throw std::logic_error("energy: odd energy contradicts the zero-trace identity");
    return {set.order(), set.members(), e};
}

}  // namespace icg
