#include "hpit/bench.hpp"

#include "hpit/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hpit {

ConfusionExport export_confusion(const CostMatrix& matrix) {
    ConfusionExport out;
    out.assignment = solve_hungarian(matrix);
    const auto& perm = out.assignment.permutation;
    const std::size_t c = matrix.size();

    out.row_order.resize(c);
    std::iota(out.row_order.begin(), out.row_order.end(), std::size_t{0});
    std::stable_sort(out.row_order.begin(), out.row_order.end(),
                     [&](std::size_t a, std::size_t b) { return matrix(a, perm[a]) > matrix(b, perm[b]); });
    out.col_order.resize(c);
    for (std::size_t k = 0; k < c; ++k) out.col_order[k] = perm[out.row_order[k]];

    out.matrix = CostMatrix(c);
    for (std::size_t k = 0; k < c; ++k) {
        for (std::size_t l = 0; l < c; ++l) out.matrix(k, l) = matrix(out.row_order[k], out.col_order[l]);
    }
    return out;
}

nlohmann::json to_json(const BenchReport& report) {
    nlohmann::json j;
    j["solver"] = report.solver;
    j["c"] = report.c;
    j["trials"] = report.trials;
    if (report.skipped) {
        j["median_ns"] = nullptr;
        j["p95_ns"] = nullptr;
        j["mean_iterations"] = nullptr;
    } else {
        j["median_ns"] = report.median_ns;
        j["p95_ns"] = report.p95_ns;
        j["mean_iterations"] = report.mean_iterations;
    }
    j["permutation_count"] = report.permutation_count ? nlohmann::json(to_string(*report.permutation_count)) : nullptr;
    j["skipped"] = report.skipped ? nlohmann::json(*report.skipped) : nullptr;
    return j;
}

std::string csv_header() { return "solver,c,trials,median_ns,p95_ns,mean_iterations,permutations,skipped"; }

std::string to_csv_row(const BenchReport& report) {
    std::ostringstream out;
    out << report.solver << ',' << report.c << ',' << report.trials << ',';
    if (!report.skipped) out << report.median_ns << ',' << report.p95_ns << ',' << report.mean_iterations;
    else out << ",,";
    out << ',';
    if (report.permutation_count) out << to_string(*report.permutation_count);
    out << ',';
    if (report.skipped) out << '"' << *report.skipped << '"';
    return out.str();
}

nlohmann::json to_json(const ConfusionExport& confusion) {
    return {{"matrix", cost_matrix_to_json(confusion.matrix)},
            {"row_order", confusion.row_order},
            {"col_order", confusion.col_order},
            {"assignment", assignment_to_json(confusion.assignment)}};
}

std::string to_pgm(const CostMatrix& matrix, std::size_t cell) {
    if (cell < 1) throw Error(ErrorKind::InvalidInput, "PGM cell size must be >= 1");
    const std::size_t c = matrix.size();
    const auto entries = matrix.entries();
    const auto [lo_it, hi_it] = std::minmax_element(entries.begin(), entries.end());
    const double lo = c ? *lo_it : 0.0;
    const double hi = c ? *hi_it : 0.0;

    const std::size_t side = c * cell;
    std::string out = "P5\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    out.reserve(out.size() + side * side);
    for (std::size_t y = 0; y < side; ++y) {
        for (std::size_t x = 0; x < side; ++x) {
            const double v = matrix(y / cell, x / cell);
            const double level = hi > lo ? std::round(255.0 * (v - lo) / (hi - lo)) : 128.0;
            out.push_back(static_cast<char>(static_cast<unsigned char>(level)));
        }
    }
    return out;
}

void write_pgm(const std::filesystem::path& path, const CostMatrix& matrix, std::size_t cell) {
    const auto bytes = to_pgm(matrix, cell);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace hpit
