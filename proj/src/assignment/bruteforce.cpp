#include "hpit/assignment.hpp"

#include "hpit/error.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <numeric>
#include <vector>

namespace hpit {

AssignmentResult solve_bruteforce(const CostMatrix& matrix, std::size_t guard) {
    const auto start = std::chrono::steady_clock::now();
    matrix.validate();
    const std::size_t n = matrix.size();
    if (n > guard) {
        throw Error(ErrorKind::TooLarge, "C = " + std::to_string(n) + " exceeds the brute-force guard of " +
                                             std::to_string(guard));
    }

    std::vector<std::size_t> mapping(n);
    std::iota(mapping.begin(), mapping.end(), std::size_t{0});
    std::vector<std::size_t> best = mapping;
    double best_cost = std::numeric_limits<double>::infinity();
    std::uint64_t evaluated = 0;

    // Lexicographic order; strict '<' keeps the smallest optimal mapping.
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) cost += matrix(i, mapping[i]);
        ++evaluated;
        if (cost < best_cost) {
            best_cost = cost;
            best = mapping;
        }
    } while (std::next_permutation(mapping.begin(), mapping.end()));

    AssignmentResult result;
    result.permutation = Permutation(std::move(best));
    result.total_cost = assignment_cost(matrix, result.permutation);
    result.iterations = evaluated;
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

unsigned __int128 permutation_count(unsigned c) {
    if (c > kMaxPermutationCount) {
        throw Error(ErrorKind::TooLarge, "permutation_count supports c <= " + std::to_string(kMaxPermutationCount) +
                                             ", got " + std::to_string(c));
    }
    unsigned __int128 value = 1;
    for (unsigned k = 2; k <= c; ++k) value *= k;
    return value;
}

std::string to_string(unsigned __int128 value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace hpit
