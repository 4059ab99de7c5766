#pragma once

#include "hpit/assignment.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace hpit {

enum class Solver { Hungarian, BruteForce, Sinkhorn };

[[nodiscard]] Solver parse_solver(std::string_view name);
[[nodiscard]] std::string_view solver_name(Solver solver) noexcept;

struct SolveOptions {
    Solver solver = Solver::Hungarian;
    std::size_t guard = kDefaultBruteForceGuard;
    SinkhornConfig sinkhorn{};
};

[[nodiscard]] AssignmentResult solve(const CostMatrix& matrix, const SolveOptions& options);

// Results are ordered by input index. The first failing matrix (lowest index)
// is rethrown after the parallel region.
[[nodiscard]] std::vector<AssignmentResult> solve_batch(std::span<const CostMatrix> matrices,
                                                        const SolveOptions& options = {});
[[nodiscard]] std::vector<AssignmentResult> solve_batch_serial(std::span<const CostMatrix> matrices,
                                                               const SolveOptions& options = {});

}  // namespace hpit
