#pragma once

#include "hpit/assignment.hpp"
#include "hpit/batch.hpp"
#include "hpit/cost_matrix.hpp"
#include "hpit/matrix_io.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hpit {

struct BenchReport {
    std::string solver;
    std::size_t c = 0;
    std::size_t trials = 0;
    std::int64_t median_ns = 0;
    std::int64_t p95_ns = 0;
    double mean_iterations = 0.0;
    /// Empty for c beyond the exact reporting range.
    std::optional<unsigned __int128> permutation_count;
    /// Set when the solver was not run (brute force above its guard).
    std::optional<std::string> skipped;
};

struct SweepOptions {
    std::vector<std::size_t> c_values;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::vector<Solver> solvers{Solver::Hungarian, Solver::Sinkhorn, Solver::BruteForce};
    std::size_t guard = kDefaultBruteForceGuard;
    SinkhornConfig sinkhorn{};
    bool parallel = true;
};

inline constexpr double kBenchEntryLow = -30.0;
inline constexpr double kBenchEntryHigh = 30.0;

/// C x C matrix with entries uniform in [low, high).
[[nodiscard]] CostMatrix random_cost_matrix(std::size_t c, std::uint64_t seed, double low = kBenchEntryLow,
                                            double high = kBenchEntryHigh);

/// One report per (C, solver) in c_values order, solvers in option order.
[[nodiscard]] std::vector<BenchReport> sweep_solvers(const SweepOptions& options);

struct IterationPoint {
    double difficulty = 0.0;
    double mean_iterations = 0.0;
};

/// Planted optimum on the diagonal: -30 there, +30 everywhere else.
[[nodiscard]] CostMatrix planted_cost_matrix(std::size_t c);

/// Mean Hungarian iterations on (1-d)*planted + d*uniform matrices. Every
/// difficulty reuses the same per-trial random matrix, so the sweep over d is
/// a uniform matrix with a diagonal bonus of 60*(1-d) fading out.
[[nodiscard]] std::vector<IterationPoint> iteration_profile(const std::vector<double>& difficulties, std::size_t c,
                                                            std::size_t trials, std::uint64_t seed,
                                                            bool parallel = true);

struct ConfusionExport {
    CostMatrix matrix;
    std::vector<std::size_t> row_order;
    std::vector<std::size_t> col_order;
    AssignmentResult assignment;
};

/// Rows reordered by matched-pair cost (descending), columns by their matched
/// estimate, so matched pairs land on the diagonal.
[[nodiscard]] ConfusionExport export_confusion(const CostMatrix& matrix);

[[nodiscard]] nlohmann::json to_json(const BenchReport& report);
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string to_csv_row(const BenchReport& report);
[[nodiscard]] nlohmann::json to_json(const ConfusionExport& confusion);

/// Binary PGM (P5). Lowest cost is black. Each cell is `cell` x `cell` pixels.
[[nodiscard]] std::string to_pgm(const CostMatrix& matrix, std::size_t cell = 16);
void write_pgm(const std::filesystem::path& path, const CostMatrix& matrix, std::size_t cell = 16);

}  // namespace hpit
