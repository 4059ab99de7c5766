#include "hpit/bench.hpp"

#include "hpit/error.hpp"
#include "hpit/random.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>

namespace hpit {

CostMatrix random_cost_matrix(std::size_t c, std::uint64_t seed, double low, double high) {
    CostMatrix m(c);
    Rng rng(seed);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(low, high);
    }
    return m;
}

CostMatrix planted_cost_matrix(std::size_t c) {
    CostMatrix m(c, kBenchEntryHigh);
    for (std::size_t i = 0; i < c; ++i) m(i, i) = kBenchEntryLow;
    return m;
}

namespace {

struct TrialOutcome {
    std::int64_t ns = 0;
    std::uint64_t iterations = 0;
};

// Runs fn(t) for t in [0, trials), optionally across OpenMP threads. Output
// slots are indexed by trial; the lowest failing trial is rethrown.
template <class Fn>
void for_each_trial(std::size_t trials, bool parallel, Fn&& fn) {
    std::vector<std::exception_ptr> errors(trials);
    const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        try {
            fn(static_cast<std::size_t>(t));
        } catch (...) {
            errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
    }
    for (std::size_t t = 0; t < trials; ++t) {
        if (!errors[t]) continue;
        try {
            std::rethrow_exception(errors[t]);
        } catch (const Error& e) {
            throw Error(e.kind(), "trial " + std::to_string(t) + ": " + e.what());
        }
    }
}

std::int64_t median_of(std::vector<std::int64_t> sorted) {
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return sorted[n / 2 - 1] + (sorted[n / 2] - sorted[n / 2 - 1]) / 2;
}

// Nearest-rank percentile.
std::int64_t percentile_of(const std::vector<std::int64_t>& sorted, double q) {
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

}  // namespace

std::vector<BenchReport> sweep_solvers(const SweepOptions& options) {
    if (options.trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be >= 1");
    if (options.c_values.empty()) throw Error(ErrorKind::InvalidInput, "c_values must not be empty");
    if (options.solvers.empty()) throw Error(ErrorKind::InvalidInput, "no solvers selected");
    for (std::size_t c : options.c_values) {
        if (c < 1) throw Error(ErrorKind::InvalidInput, "c values must be >= 1");
    }
    options.sinkhorn.validate();

    std::vector<BenchReport> reports;
    for (std::size_t c : options.c_values) {
        std::vector<CostMatrix> matrices(options.trials);
        for (std::size_t t = 0; t < options.trials; ++t) {
            matrices[t] = random_cost_matrix(c, mix_seed(mix_seed(options.seed, c), t));
        }

        for (Solver solver : options.solvers) {
            BenchReport report;
            report.solver = std::string(solver_name(solver));
            report.c = c;
            report.trials = options.trials;
            if (c <= kMaxPermutationCount) report.permutation_count = permutation_count(static_cast<unsigned>(c));

            if (solver == Solver::BruteForce && c > options.guard) {
                report.skipped = "C exceeds brute-force guard " + std::to_string(options.guard);
                reports.push_back(std::move(report));
                continue;
            }

            const SolveOptions solve_options{solver, options.guard, options.sinkhorn};
            std::vector<TrialOutcome> outcomes(options.trials);
            try {
                for_each_trial(options.trials, options.parallel, [&](std::size_t t) {
                    const auto r = solve(matrices[t], solve_options);
                    outcomes[t] = {r.elapsed.count(), r.iterations};
                });
            } catch (const Error& e) {
                throw Error(e.kind(), "sweep " + report.solver + " C=" + std::to_string(c) + ", " + e.what());
            }

            std::vector<std::int64_t> ns(outcomes.size());
            double iterations = 0.0;
            for (std::size_t t = 0; t < outcomes.size(); ++t) {
                ns[t] = outcomes[t].ns;
                iterations += static_cast<double>(outcomes[t].iterations);
            }
            std::sort(ns.begin(), ns.end());
            report.median_ns = median_of(ns);
            report.p95_ns = percentile_of(ns, 0.95);
            report.mean_iterations = iterations / static_cast<double>(outcomes.size());
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

std::vector<IterationPoint> iteration_profile(const std::vector<double>& difficulties, std::size_t c,
                                              std::size_t trials, std::uint64_t seed, bool parallel) {
    if (c < 2) throw Error(ErrorKind::InvalidInput, "iteration profile needs c >= 2");
    if (trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be >= 1");
    if (difficulties.empty()) throw Error(ErrorKind::InvalidInput, "no difficulty values given");
    for (double d : difficulties) {
        if (!(d >= 0.0 && d <= 1.0)) throw Error(ErrorKind::InvalidInput, "difficulty values must lie in [0, 1]");
    }

    // iterations[t * D + k] for trial t at difficulty k.
    std::vector<std::uint64_t> iterations(trials * difficulties.size(), 0);
    for_each_trial(trials, parallel, [&](std::size_t t) {
        const CostMatrix planted = planted_cost_matrix(c);
        const CostMatrix noise = random_cost_matrix(c, mix_seed(seed, t));
        CostMatrix blend(c);
        for (std::size_t k = 0; k < difficulties.size(); ++k) {
            const double d = difficulties[k];
            for (std::size_t i = 0; i < c; ++i) {
                for (std::size_t j = 0; j < c; ++j) blend(i, j) = (1.0 - d) * planted(i, j) + d * noise(i, j);
            }
            iterations[t * difficulties.size() + k] = solve_hungarian(blend).iterations;
        }
    });

    std::vector<IterationPoint> points;
    for (std::size_t k = 0; k < difficulties.size(); ++k) {
        double sum = 0.0;
        for (std::size_t t = 0; t < trials; ++t) sum += static_cast<double>(iterations[t * difficulties.size() + k]);
        points.push_back({difficulties[k], sum / static_cast<double>(trials)});
    }
    return points;
}

}  // namespace hpit
