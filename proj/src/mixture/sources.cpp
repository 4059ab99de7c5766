#include "hpit/mixture.hpp"

#include "hpit/error.hpp"
#include "hpit/random.hpp"
#include "hpit/wav.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hpit {

std::size_t MixSpec::num_samples() const {
    return static_cast<std::size_t>(std::llround(duration * static_cast<double>(sample_rate)));
}

void MixSpec::validate() const {
    if (num_sources < 2) throw Error(ErrorKind::InvalidInput, "num_sources must be >= 2");
    if (sample_rate == 0) throw Error(ErrorKind::InvalidInput, "sample_rate must be positive");
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw Error(ErrorKind::InvalidInput, "duration must be a positive number of seconds");
    }
    if (!std::isfinite(snr_range.low) || !std::isfinite(snr_range.high) || snr_range.low > snr_range.high) {
        throw Error(ErrorKind::InvalidInput, "snr range must satisfy low <= high");
    }
    if (num_samples() < 1) throw Error(ErrorKind::EmptyInput, "duration * sample_rate rounds to zero samples");
}

SourceKind parse_source_kind(std::string_view name) {
    if (name == "sine" || name == "sine_bundle") return SourceKind::sine_bundle();
    if (name == "chirp") return SourceKind::chirp();
    if (name == "noise" || name == "band_noise") return SourceKind::band_noise();
    if (name.starts_with("file:")) return SourceKind::file(std::string(name.substr(5)));
    throw Error(ErrorKind::InvalidInput, "unknown source kind '" + std::string(name) + "'");
}

std::string source_kind_name(const SourceKind& kind) {
    switch (kind.variant) {
    case SourceKind::Variant::SineBundle:
        return "sine_bundle";
    case SourceKind::Variant::Chirp:
        return "chirp";
    case SourceKind::Variant::BandNoise:
        return "band_noise";
    case SourceKind::Variant::File:
        return "file:" + kind.path.string();
    }
    return "unknown";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fundamentals on a 7 Hz grid so that any two bundles are nearly orthogonal
// over a second or more. The grid order is shuffled by the mix seed.
std::vector<double> fundamental_grid(const MixSpec& spec) {
    const double top = 0.45 * static_cast<double>(spec.sample_rate) / 3.0;
    std::vector<double> grid;
    for (double f = 110.0; f <= top; f += 7.0) grid.push_back(f);
    if (grid.empty()) grid.push_back(static_cast<double>(spec.sample_rate) / 20.0);
    Rng rng(mix_seed(spec.seed, 0xF0F0));
    for (std::size_t k = grid.size(); k > 1; --k) std::swap(grid[k - 1], grid[rng.below(k)]);
    return grid;
}

std::vector<double> sine_bundle(std::size_t n, double rate, double fundamental, Rng& rng) {
    constexpr double amplitude[3] = {1.0, 0.5, 0.33};
    double phase[3];
    for (double& p : phase) p = rng.uniform(0.0, kTwoPi);
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / rate;
        double v = 0.0;
        for (int h = 0; h < 3; ++h) v += amplitude[h] * std::sin(kTwoPi * fundamental * (h + 1) * t + phase[h]);
        x[k] = v;
    }
    return x;
}

std::vector<double> chirp(std::size_t n, double rate, Rng& rng) {
    const double f0 = rng.uniform(80.0, 0.1 * rate);
    const double f1 = rng.uniform(0.2 * rate, 0.4 * rate);
    const double phase = rng.uniform(0.0, kTwoPi);
    const double length = static_cast<double>(n) / rate;
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / rate;
        x[k] = std::sin(kTwoPi * (f0 * t + 0.5 * (f1 - f0) * t * t / length) + phase);
    }
    return x;
}

// White noise through a constant-peak-gain band-pass biquad.
std::vector<double> band_noise(std::size_t n, double rate, Rng& rng) {
    const double centre = rng.uniform(200.0, 0.35 * rate);
    const double q = 2.0;
    const double w0 = kTwoPi * centre / rate;
    const double alpha = std::sin(w0) / (2.0 * q);
    const double a0 = 1.0 + alpha;
    const double b0 = alpha / a0;
    const double b2 = -alpha / a0;
    const double a1 = -2.0 * std::cos(w0) / a0;
    const double a2 = (1.0 - alpha) / a0;

    std::vector<double> x(n);
    double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double in = rng.normal();
        const double out = b0 * in + b2 * x2 - a1 * y1 - a2 * y2;
        x2 = x1;
        x1 = in;
        y2 = y1;
        y1 = out;
        x[k] = out;
    }
    return x;
}

std::vector<double> from_file(const SourceKind& kind, const MixSpec& spec) {
    const AudioSignal s = read_wav(kind.path);
    if (s.sample_rate != spec.sample_rate) {
        throw Error(ErrorKind::InvalidInput, kind.path.string() + ": sample rate " + std::to_string(s.sample_rate) +
                                                 " does not match " + std::to_string(spec.sample_rate));
    }
    std::vector<double> x(spec.num_samples(), 0.0);
    std::copy_n(s.samples.begin(), std::min(x.size(), s.samples.size()), x.begin());
    return x;
}

}  // namespace

std::vector<AudioSignal> generate_sources(const MixSpec& spec, const std::vector<SourceKind>& kinds) {
    spec.validate();
    if (kinds.size() != static_cast<std::size_t>(spec.num_sources)) {
        throw Error(ErrorKind::InvalidInput, "got " + std::to_string(kinds.size()) + " source kinds for " +
                                                 std::to_string(spec.num_sources) + " sources");
    }
    const std::size_t n = spec.num_samples();
    const double rate = static_cast<double>(spec.sample_rate);
    const auto grid = fundamental_grid(spec);

    std::vector<AudioSignal> out;
    out.reserve(kinds.size());
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        Rng rng(mix_seed(spec.seed, i + 1));
        std::vector<double> x;
        switch (kinds[i].variant) {
        case SourceKind::Variant::SineBundle:
            x = sine_bundle(n, rate, grid[i % grid.size()], rng);
            break;
        case SourceKind::Variant::Chirp:
            x = chirp(n, rate, rng);
            break;
        case SourceKind::Variant::BandNoise:
            x = band_noise(n, rate, rng);
            break;
        case SourceKind::Variant::File:
            x = from_file(kinds[i], spec);
            break;
        }
        double peak = 0.0;
        for (double v : x) peak = std::max(peak, std::abs(v));
        if (!(peak > 0.0)) {
            throw Error(ErrorKind::InvalidInput, "source " + std::to_string(i) + " (" + source_kind_name(kinds[i]) +
                                                     ") is silent");
        }
        const double scale = kSourcePeak / peak;
        for (double& v : x) v *= scale;
        out.push_back({std::move(x), spec.sample_rate});
    }
    return out;
}

}  // namespace hpit
