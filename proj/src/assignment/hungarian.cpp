#include "hpit/assignment.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace hpit {

double assignment_cost(const CostMatrix& matrix, const Permutation& permutation) {
    double total = 0.0;
    for (std::size_t i = 0; i < permutation.size(); ++i) total += matrix(i, permutation[i]);
    return total;
}

AssignmentResult solve_hungarian(const CostMatrix& matrix) {
    const auto start = std::chrono::steady_clock::now();
    matrix.validate();

    const std::size_t n = matrix.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    // Column index n is a virtual root that holds the row being inserted.
    std::vector<double> row_pot(n, 0.0);
    std::vector<double> col_pot(n + 1, 0.0);
    std::vector<std::size_t> row_of_col(n + 1, none);
    std::vector<std::size_t> prev_col(n + 1, none);
    std::vector<double> slack(n + 1, inf);
    std::vector<char> visited(n + 1, 0);

    for (std::size_t i = 0; i < n; ++i) {
        const auto r = matrix.row(i);
        row_pot[i] = *std::min_element(r.begin(), r.end());
    }

    std::uint64_t adjustments = 0;

    for (std::size_t i = 0; i < n; ++i) {
        std::fill(slack.begin(), slack.end(), inf);
        std::fill(visited.begin(), visited.end(), 0);
        row_of_col[n] = i;
        std::size_t cur = n;

        do {
            visited[cur] = 1;
            const std::size_t row = row_of_col[cur];
            double delta = inf;
            std::size_t next = none;
            for (std::size_t j = 0; j < n; ++j) {
                if (visited[j]) continue;
                const double reduced = matrix(row, j) - row_pot[row] - col_pot[j];
                if (reduced < slack[j]) {
                    slack[j] = reduced;
                    prev_col[j] = cur;
                }
                if (slack[j] < delta) {
                    delta = slack[j];
                    next = j;
                }
            }
            if (delta > 0.0) ++adjustments;
            for (std::size_t j = 0; j <= n; ++j) {
                if (visited[j]) {
                    row_pot[row_of_col[j]] += delta;
                    col_pot[j] -= delta;
                } else {
                    slack[j] -= delta;
                }
            }
            cur = next;
        } while (row_of_col[cur] != none);

        // Flip the alternating path back to the root.
        while (cur != n) {
            const std::size_t p = prev_col[cur];
            row_of_col[cur] = row_of_col[p];
            cur = p;
        }
    }

    std::vector<std::size_t> mapping(n);
    for (std::size_t j = 0; j < n; ++j) mapping[row_of_col[j]] = j;

    AssignmentResult result;
    result.permutation = Permutation(std::move(mapping));
    result.total_cost = assignment_cost(matrix, result.permutation);
    result.iterations = adjustments;
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

}  // namespace hpit
