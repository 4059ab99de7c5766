#pragma once

#include "hpit/cost_matrix.hpp"
#include "hpit/permutation.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>

namespace hpit {

struct AssignmentResult {
    Permutation permutation;
    double total_cost = 0.0;
    /// Hungarian: dual adjustment rounds. Brute force: permutations evaluated.
    /// Sinkhorn: balancing rounds.
    std::uint64_t iterations = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct SinkhornConfig {
    int iterations = 200;
    double temperature = 1.0;

    void validate() const;
};

inline constexpr std::size_t kDefaultBruteForceGuard = 11;
inline constexpr unsigned kMaxPermutationCount = 25;

/// Sum of matrix(i, permutation[i]) in row order. Every solver reports its
/// total_cost through this so that equal permutations give bit-equal costs.
[[nodiscard]] double assignment_cost(const CostMatrix& matrix, const Permutation& permutation);

/// Exact O(C^3) Kuhn-Munkres (row potentials + shortest augmenting paths).
///
/// Rows are reduced by their minimum first, then each row is inserted by a
/// Dijkstra-style search over reduced costs. `iterations` counts the dual
/// adjustment steps that moved the potentials by a strictly positive amount
/// (the Munkres "subtract the minimal uncovered value" step). A matrix whose
/// row minima fall in distinct columns therefore solves with 0.
///
/// Ties are broken toward the lowest column index during the search, which
/// makes the result deterministic. Only total_cost is contract-stable across
/// versions when several optima exist.
[[nodiscard]] AssignmentResult solve_hungarian(const CostMatrix& matrix);

/// Exhaustive enumeration of all C! permutations in lexicographic order,
/// keeping the first (lexicographically smallest) optimum.
/// Throws Error(TooLarge) when C exceeds `guard`.
[[nodiscard]] AssignmentResult solve_bruteforce(const CostMatrix& matrix,
                                                std::size_t guard = kDefaultBruteForceGuard);

/// Approximate assignment: log-domain Sinkhorn balancing of exp(-M / temperature)
/// followed by greedy rounding (rows by descending max, used columns excluded).
[[nodiscard]] AssignmentResult solve_sinkhorn(const CostMatrix& matrix, const SinkhornConfig& config = {});

/// c! exactly, for 0 <= c <= 25.
[[nodiscard]] unsigned __int128 permutation_count(unsigned c);

[[nodiscard]] std::string to_string(unsigned __int128 value);

}  // namespace hpit
