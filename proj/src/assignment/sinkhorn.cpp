#include "hpit/assignment.hpp"

#include "hpit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace hpit {

void SinkhornConfig::validate() const {
    if (iterations < 1) throw Error(ErrorKind::InvalidInput, "sinkhorn iterations must be >= 1");
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw Error(ErrorKind::InvalidInput, "sinkhorn temperature must be a positive finite number");
    }
}

namespace {

// log(sum(exp(x))) over a strided view, shifted by the max so nothing overflows.
double log_sum_exp(const double* x, std::size_t count, std::size_t stride) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < count; ++k) top = std::max(top, x[k * stride]);
    double sum = 0.0;
    for (std::size_t k = 0; k < count; ++k) sum += std::exp(x[k * stride] - top);
    return top + std::log(sum);
}

}  // namespace

AssignmentResult solve_sinkhorn(const CostMatrix& matrix, const SinkhornConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    matrix.validate();
    config.validate();
    const std::size_t n = matrix.size();

    // Balancing runs on log K = -M / tau; row then column normalisation per round.
    std::vector<double> log_k(n * n);
    for (std::size_t i = 0; i < n * n; ++i) log_k[i] = -matrix.entries()[i] / config.temperature;

    for (int round = 0; round < config.iterations; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            double* row = log_k.data() + i * n;
            const double lse = log_sum_exp(row, n, 1);
            for (std::size_t j = 0; j < n; ++j) row[j] -= lse;
        }
        for (std::size_t j = 0; j < n; ++j) {
            double* col = log_k.data() + j;
            const double lse = log_sum_exp(col, n, n);
            for (std::size_t i = 0; i < n; ++i) col[i * n] -= lse;
        }
    }

    // Greedy rounding. log is monotone, so comparing log_k is comparing P.
    std::vector<double> row_max(n);
    for (std::size_t i = 0; i < n; ++i) {
        row_max[i] = *std::max_element(log_k.begin() + static_cast<std::ptrdiff_t>(i * n),
                                       log_k.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return row_max[a] > row_max[b]; });

    std::vector<std::size_t> mapping(n);
    std::vector<char> used(n, 0);
    for (std::size_t row : order) {
        std::size_t pick = n;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            if (pick == n || log_k[row * n + j] > best) {
                best = log_k[row * n + j];
                pick = j;
            }
        }
        used[pick] = 1;
        mapping[row] = pick;
    }

    AssignmentResult result;
    result.permutation = Permutation(std::move(mapping));
    result.total_cost = assignment_cost(matrix, result.permutation);
    result.iterations = static_cast<std::uint64_t>(config.iterations);
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace hpit
