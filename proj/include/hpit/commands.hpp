#pragma once

#include "hpit/assignment.hpp"
#include "hpit/mixture.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hpit::cli {

struct SolveCommand {
    std::string matrix_path;
    std::string solver = "hungarian";
    std::string format = "json";
    std::size_t guard = kDefaultBruteForceGuard;
    SinkhornConfig sinkhorn{};
};

struct EvaluateCommand {
    std::vector<std::string> targets;
    std::vector<std::string> estimates;
    std::string mixture;
    std::string format = "json";
};

struct MixCommand {
    MixSpec spec{.num_sources = 2, .sample_rate = 8000, .duration = 4.0, .snr_range = {0.0, 5.0}, .seed = 0};
    /// Comma list cycled over the sources: sine, chirp, noise, file:<path>.
    std::string kinds = "sine";
    std::string out_dir = ".";
    std::string format = "json";
};

struct BenchCommand {
    std::string mode = "sweep";  // sweep | iterations
    std::vector<std::size_t> c_values{5, 10, 15, 20};
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    std::vector<std::string> solvers{"hungarian", "sinkhorn", "bruteforce"};
    std::size_t guard = kDefaultBruteForceGuard;
    SinkhornConfig sinkhorn{};
    std::vector<double> difficulties{0.0, 0.25, 0.5, 0.75, 1.0};
    std::string format = "json";  // json lines | csv
};

struct ConfusionCommand {
    std::string matrix_path;
    std::optional<std::string> pgm_path;
    std::size_t cell = 16;
    std::string format = "json";
};

// Each command writes machine-readable output to `out`, diagnostics to `err`,
// and returns the process exit code (0 ok, 2 input, 3 guard/limit, 4 I/O).
int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_evaluate(const EvaluateCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_mix(const MixCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_confusion(const ConfusionCommand& cmd, std::ostream& out, std::ostream& err);

/// Full argument parsing and dispatch; `hpit` main is a one-line wrapper.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpit::cli
