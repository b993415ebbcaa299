#include "icg/oracle.hpp"

#include <lapacke.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace icg {

std::int64_t oracle_energy(const DivisorSet& set) {
    const std::int64_t n = set.order();
    if (n > kOracleMaxOrder)
        throw std::invalid_argument("oracle_energy: order exceeds dense limit 3000");

    const std::unordered_set<std::int64_t> members(set.members().begin(),
                                                   set.members().end());
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t k = 1; k < n; ++k)
        if (members.count(std::gcd(k, n))) row[static_cast<std::size_t>(k)] = 1.0;

    const auto dim = static_cast<std::size_t>(n);
    std::vector<double> adjacency(dim * dim);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            adjacency[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>((i - j + n) % n)];

    std::vector<double> eigenvalues(dim);
    const lapack_int info = LAPACKE_dsyevd(
        LAPACK_ROW_MAJOR, 'N', 'L', static_cast<lapack_int>(n), adjacency.data(),
        static_cast<lapack_int>(n), eigenvalues.data());
    if (info != 0)
        throw std::runtime_error("oracle_energy: eigensolver failed (info " +
                                 std::to_string(info) + ")");

    double sum = 0.0;
    for (double lambda : eigenvalues) sum += std::abs(lambda);
    const double rounded = std::round(sum);
    if (std::abs(sum - rounded) >= 1e-4)
        throw std::runtime_error("oracle_energy: rounding residual too large");
    return static_cast<std::int64_t>(std::llround(sum));
}

}  // namespace icg
