#include "hpit/batch.hpp"

#include "hpit/error.hpp"

#include <exception>
#include <string>

namespace hpit {

Solver parse_solver(std::string_view name) {
    if (name == "hungarian") return Solver::Hungarian;
    if (name == "bruteforce") return Solver::BruteForce;
    if (name == "sinkhorn") return Solver::Sinkhorn;
    throw Error(ErrorKind::InvalidInput, "unknown solver '" + std::string(name) + "'");
}

std::string_view solver_name(Solver solver) noexcept {
    switch (solver) {
    case Solver::Hungarian:
        return "hungarian";
    case Solver::BruteForce:
        return "bruteforce";
    case Solver::Sinkhorn:
        return "sinkhorn";
    }
    return "unknown";
}

AssignmentResult solve(const CostMatrix& matrix, const SolveOptions& options) {
    switch (options.solver) {
    case Solver::Hungarian:
        return solve_hungarian(matrix);
    case Solver::BruteForce:
        return solve_bruteforce(matrix, options.guard);
    case Solver::Sinkhorn:
        return solve_sinkhorn(matrix, options.sinkhorn);
    }
    throw Error(ErrorKind::InvalidInput, "unknown solver");
}

std::vector<AssignmentResult> solve_batch_serial(std::span<const CostMatrix> matrices, const SolveOptions& options) {
    std::vector<AssignmentResult> results;
    results.reserve(matrices.size());
    for (const auto& m : matrices) results.push_back(solve(m, options));
    return results;
}

std::vector<AssignmentResult> solve_batch(std::span<const CostMatrix> matrices, const SolveOptions& options) {
    const auto count = static_cast<std::ptrdiff_t>(matrices.size());
    std::vector<AssignmentResult> results(matrices.size());
    std::vector<std::exception_ptr> errors(matrices.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        try {
            results[k] = solve(matrices[k], options);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

}  // namespace hpit
