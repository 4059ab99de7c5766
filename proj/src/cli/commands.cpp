#include "hpit/commands.hpp"

#include "hpit/batch.hpp"
#include "hpit/bench.hpp"
#include "hpit/error.hpp"
#include "hpit/matrix_io.hpp"
#include "hpit/metrics.hpp"
#include "hpit/wav.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hpit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        fn();
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(ErrorKind::Io);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(ErrorKind::InvalidInput);
    }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw Error(ErrorKind::InvalidInput, "format '" + format + "' is not supported by this command");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(cmd.format, {"json", "text"});
        const SolveOptions options{parse_solver(cmd.solver), cmd.guard, cmd.sinkhorn};
        const CostMatrix matrix = load_cost_matrix(cmd.matrix_path);
        const AssignmentResult result = solve(matrix, options);
        if (cmd.format == "text") {
            out << "permutation:";
            for (std::size_t v : result.permutation.mapping()) out << ' ' << v;
            out.precision(17);
            out << "\ntotal_cost: " << result.total_cost << "\niterations: " << result.iterations
                << "\nelapsed_ns: " << result.elapsed.count() << '\n';
        } else {
            out << assignment_to_json(result).dump() << '\n';
        }
    });
}

int cmd_evaluate(const EvaluateCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(cmd.format, {"json"});
        if (cmd.targets.size() != cmd.estimates.size()) {
            throw Error(ErrorKind::InvalidInput, "got " + std::to_string(cmd.targets.size()) + " targets and " +
                                                     std::to_string(cmd.estimates.size()) + " estimates");
        }
        if (cmd.targets.size() < 2) throw Error(ErrorKind::InvalidInput, "evaluate needs at least 2 targets");
        if (cmd.mixture.empty()) throw Error(ErrorKind::InvalidInput, "no mixture file given");

        std::vector<std::string> paths = cmd.targets;
        paths.insert(paths.end(), cmd.estimates.begin(), cmd.estimates.end());
        paths.push_back(cmd.mixture);

        std::vector<AudioSignal> signals;
        for (const auto& p : paths) signals.push_back(read_wav(p));
        for (std::size_t k = 1; k < signals.size(); ++k) {
            if (signals[k].sample_rate != signals[0].sample_rate) {
                throw Error(ErrorKind::InvalidInput, "sample rate mismatch: '" + paths[k] + "' is " +
                                                         std::to_string(signals[k].sample_rate) + " Hz, '" + paths[0] +
                                                         "' is " + std::to_string(signals[0].sample_rate) + " Hz");
            }
        }
        signals = truncate_to_min(signals);

        const std::size_t c = cmd.targets.size();
        SeparationInstance instance;
        instance.targets.assign(signals.begin(), signals.begin() + static_cast<std::ptrdiff_t>(c));
        instance.estimates.assign(signals.begin() + static_cast<std::ptrdiff_t>(c),
                                  signals.begin() + static_cast<std::ptrdiff_t>(2 * c));
        instance.mixture = signals.back();

        const MatchedLoss loss = hungarian_loss(instance);
        const std::vector<double> improvement = si_sdr_improvement(instance, loss.permutation);

        json per_source = json::array();
        double mean_improvement = 0.0;
        for (std::size_t i = 0; i < c; ++i) {
            const std::size_t j = loss.permutation[i];
            per_source.push_back({{"target", i},
                                  {"estimate", j},
                                  {"target_path", cmd.targets[i]},
                                  {"estimate_path", cmd.estimates[j]},
                                  {"si_snr", -loss.per_pair[i]},
                                  {"si_sdri", improvement[i]}});
            mean_improvement += improvement[i];
        }
        mean_improvement /= static_cast<double>(c);

        const auto mapping = loss.permutation.mapping();
        json report = {{"num_sources", c},
                       {"sample_rate", instance.mixture.sample_rate},
                       {"length", instance.mixture.size()},
                       {"permutation", std::vector<std::size_t>(mapping.begin(), mapping.end())},
                       {"mean_loss", loss.mean_loss},
                       {"mean_si_snr", -loss.mean_loss},
                       {"mean_si_sdri", mean_improvement},
                       {"per_source", per_source}};
        out << report.dump() << '\n';
    });
}

int cmd_mix(const MixCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(cmd.format, {"json"});
        cmd.spec.validate();
        const auto names = split(cmd.kinds, ',');
        if (names.empty()) throw Error(ErrorKind::InvalidInput, "no source kinds given");
        std::vector<SourceKind> kinds;
        for (int i = 0; i < cmd.spec.num_sources; ++i) {
            kinds.push_back(parse_source_kind(names[static_cast<std::size_t>(i) % names.size()]));
        }

        const fs::path dir(cmd.out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec || !fs::is_directory(dir)) {
            throw Error(ErrorKind::Io, "cannot create output directory '" + dir.string() + "'");
        }

        // Sources are snapped to the PCM grid first so the written files are
        // exactly what was mixed.
        std::vector<AudioSignal> sources = generate_sources(cmd.spec, kinds);
        for (auto& s : sources) s = quantize_pcm16(s);
        const MixResult mixed = mix(sources, cmd.spec.snr_range, cmd.spec.seed);

        json manifest;
        manifest["seed"] = cmd.spec.seed;
        manifest["num_sources"] = cmd.spec.num_sources;
        manifest["sample_rate"] = cmd.spec.sample_rate;
        manifest["duration"] = cmd.spec.duration;
        manifest["num_samples"] = cmd.spec.num_samples();
        manifest["snr_low"] = cmd.spec.snr_range.low;
        manifest["snr_high"] = cmd.spec.snr_range.high;
        manifest["kinds"] = json::array();
        manifest["sources"] = json::array();
        for (std::size_t i = 0; i < sources.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "source_%02zu.wav", i);
            write_wav(dir / name, sources[i]);
            manifest["kinds"].push_back(source_kind_name(kinds[i]));
            manifest["sources"].push_back(name);
        }
        write_wav(dir / "mixture.wav", mixed.mixture);
        manifest["mixture"] = "mixture.wav";
        manifest["gains"] = mixed.gains;
        manifest["rescale"] = mixed.rescale;
        manifest["snr_db"] = mixed.snr_db;

        const std::string text = manifest.dump(2) + "\n";
        write_text_file(dir / "manifest.json", text);
        out << manifest.dump() << '\n';
    });
}

int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(cmd.format, {"json", "csv"});
        if (cmd.mode == "sweep") {
            SweepOptions options;
            options.c_values = cmd.c_values;
            options.trials = cmd.trials;
            options.seed = cmd.seed;
            options.guard = cmd.guard;
            options.sinkhorn = cmd.sinkhorn;
            options.solvers.clear();
            for (const auto& s : cmd.solvers) options.solvers.push_back(parse_solver(s));
            const auto reports = sweep_solvers(options);
            if (cmd.format == "csv") out << csv_header() << '\n';
            for (const auto& r : reports) {
                if (cmd.format == "csv") out << to_csv_row(r) << '\n';
                else out << to_json(r).dump() << '\n';
            }
        } else if (cmd.mode == "iterations") {
            if (cmd.format == "csv") out << "c,difficulty,mean_iterations\n";
            for (std::size_t c : cmd.c_values) {
                const auto points = iteration_profile(cmd.difficulties, c, cmd.trials, cmd.seed);
                for (const auto& p : points) {
                    if (cmd.format == "csv") {
                        out << c << ',' << p.difficulty << ',' << p.mean_iterations << '\n';
                    } else {
                        out << json{{"c", c}, {"difficulty", p.difficulty}, {"mean_iterations", p.mean_iterations}}.dump()
                            << '\n';
                    }
                }
            }
        } else {
            throw Error(ErrorKind::InvalidInput, "unknown bench mode '" + cmd.mode + "' (sweep or iterations)");
        }
    });
}

int cmd_confusion(const ConfusionCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(cmd.format, {"json"});
        const CostMatrix matrix = load_cost_matrix(cmd.matrix_path);
        const ConfusionExport confusion = export_confusion(matrix);
        if (cmd.pgm_path) write_pgm(*cmd.pgm_path, confusion.matrix, cmd.cell);
        out << to_json(confusion).dump() << '\n';
    });
}

}  // namespace hpit::cli
