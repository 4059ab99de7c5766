#include "hpit/commands.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace hpit::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal permutation matching for multi-source separation", "hpit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    std::size_t guard = kDefaultBruteForceGuard;
    std::size_t trials = 20;
    int sinkhorn_iterations = 200;
    double temperature = 1.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format (json, csv, text)")->capture_default_str();
    };
    auto add_sinkhorn = [&](CLI::App* sub) {
        sub->add_option("--sinkhorn-iterations", sinkhorn_iterations, "Sinkhorn balancing rounds")->capture_default_str();
        sub->add_option("--temperature", temperature, "Sinkhorn temperature")->capture_default_str();
    };

    SolveCommand solve;
    auto* solve_app = app.add_subcommand("solve", "Solve an assignment problem from a matrix file");
    solve_app->add_option("matrix", solve.matrix_path, "Cost matrix (text or JSON)")->required();
    solve_app->add_option("--solver", solve.solver, "hungarian, bruteforce or sinkhorn")->capture_default_str();
    solve_app->add_option("--guard", guard, "Brute-force size guard")->capture_default_str();
    add_sinkhorn(solve_app);
    add_common(solve_app);

    EvaluateCommand evaluate;
    auto* eval_app = app.add_subcommand("evaluate", "Match estimates to targets and report SI-SNR / SI-SDRi");
    eval_app->add_option("--targets", evaluate.targets, "Target WAV files")->required();
    eval_app->add_option("--estimates", evaluate.estimates, "Estimate WAV files")->required();
    eval_app->add_option("--mixture", evaluate.mixture, "Mixture WAV file")->required();
    add_common(eval_app);

    MixCommand mix;
    auto* mix_app = app.add_subcommand("mix", "Generate synthetic sources and their mixture");
    mix_app->add_option("--num-sources,-c", mix.spec.num_sources, "Number of sources")->capture_default_str();
    mix_app->add_option("--seed", seed, "Random seed")->capture_default_str();
    mix_app->add_option("--duration", mix.spec.duration, "Seconds")->capture_default_str();
    mix_app->add_option("--sample-rate", mix.spec.sample_rate, "Hz")->capture_default_str();
    mix_app->add_option("--snr-low", mix.spec.snr_range.low, "dB")->capture_default_str();
    mix_app->add_option("--snr-high", mix.spec.snr_range.high, "dB")->capture_default_str();
    mix_app->add_option("--kinds", mix.kinds, "Comma list: sine, chirp, noise, file:<path>")->capture_default_str();
    mix_app->add_option("--out-dir", mix.out_dir, "Output directory")->capture_default_str();
    add_common(mix_app);

    BenchCommand bench;
    auto* bench_app = app.add_subcommand("bench", "Solver timing sweep or iteration profile");
    bench_app->add_option("--mode", bench.mode, "sweep or iterations")->capture_default_str();
    bench_app->add_option("--c-values", bench.c_values, "Comma list of sizes")->delimiter(',')->capture_default_str();
    bench_app->add_option("--trials", trials, "Trials per point")->capture_default_str();
    bench_app->add_option("--seed", seed, "Random seed")->capture_default_str();
    bench_app->add_option("--solvers", bench.solvers, "Comma list of solvers")->delimiter(',')->capture_default_str();
    bench_app->add_option("--difficulties", bench.difficulties, "Comma list in [0,1]")->delimiter(',')->capture_default_str();
    bench_app->add_option("--guard", guard, "Brute-force size guard")->capture_default_str();
    add_sinkhorn(bench_app);
    add_common(bench_app);

    ConfusionCommand confusion;
    std::string pgm;
    auto* conf_app = app.add_subcommand("confusion", "Sorted matched-cost matrix export");
    conf_app->add_option("matrix", confusion.matrix_path, "Cost matrix (text or JSON)")->required();
    conf_app->add_option("--pgm", pgm, "Also write a binary PGM image");
    conf_app->add_option("--cell", confusion.cell, "Pixels per matrix cell")->capture_default_str();
    add_common(conf_app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const SinkhornConfig sinkhorn{sinkhorn_iterations, temperature};
    if (solve_app->parsed()) {
        solve.format = format;
        solve.guard = guard;
        solve.sinkhorn = sinkhorn;
        return cmd_solve(solve, out, err);
    }
    if (eval_app->parsed()) {
        evaluate.format = format;
        return cmd_evaluate(evaluate, out, err);
    }
    if (mix_app->parsed()) {
        mix.format = format;
        mix.spec.seed = seed;
        return cmd_mix(mix, out, err);
    }
    if (bench_app->parsed()) {
        bench.format = format;
        bench.seed = seed;
        bench.trials = trials;
        bench.guard = guard;
        bench.sinkhorn = sinkhorn;
        return cmd_bench(bench, out, err);
    }
    if (conf_app->parsed()) {
        confusion.format = format;
        if (!pgm.empty()) confusion.pgm_path = pgm;
        return cmd_confusion(confusion, out, err);
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hpit");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hpit::cli
