#include "hpit/error.hpp"
#include "hpit/mixture.hpp"
#include "hpit/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hpit {

namespace {

double energy(const AudioSignal& s) {
    double e = 0.0;
    for (double v : s.samples) e += v * v;
    return e;
}

std::vector<double> weighted_sum(const std::vector<AudioSignal>& sources, const std::vector<double>& gains) {
    std::vector<double> out(sources.front().size(), 0.0);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const auto& x = sources[i].samples;
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += gains[i] * x[k];
    }
    return out;
}

}  // namespace

MixResult mix(const std::vector<AudioSignal>& sources, SnrRange snr_range, std::uint64_t seed) {
    if (sources.empty()) throw Error(ErrorKind::EmptyInput, "mix needs at least one source");
    if (!std::isfinite(snr_range.low) || !std::isfinite(snr_range.high) || snr_range.low > snr_range.high) {
        throw Error(ErrorKind::InvalidInput, "snr range must satisfy low <= high");
    }
    for (std::size_t i = 0; i < sources.size(); ++i) {
        sources[i].validate();
        if (sources[i].size() != sources[0].size() || sources[i].sample_rate != sources[0].sample_rate) {
            throw Error(ErrorKind::InvalidInput,
                        "source " + std::to_string(i) + " differs from source 0 in length or sample rate");
        }
    }
    std::vector<double> energies(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        energies[i] = energy(sources[i]);
        if (!(energies[i] > 0.0)) throw Error(ErrorKind::InvalidInput, "source " + std::to_string(i) + " has zero energy");
    }

    MixResult result;
    result.gains.assign(sources.size(), 1.0);
    result.snr_db.assign(sources.size(), 0.0);
    Rng rng(mix_seed(seed, 0x6D6978));
    for (std::size_t i = 1; i < sources.size(); ++i) {
        const double magnitude = rng.uniform(snr_range.low, snr_range.high);
        const double ratio_db = rng.coin() ? magnitude : -magnitude;
        result.snr_db[i] = ratio_db;
        result.gains[i] = std::sqrt(energies[0] / energies[i] * std::pow(10.0, ratio_db / 10.0));
    }

    auto mixed = weighted_sum(sources, result.gains);
    double peak = 0.0;
    for (double v : mixed) peak = std::max(peak, std::abs(v));
    if (peak > 1.0) {
        result.rescale = 1.0 / peak;
        for (double& g : result.gains) g *= result.rescale;
        mixed = weighted_sum(sources, result.gains);
    }
    result.mixture = {std::move(mixed), sources[0].sample_rate};
    return result;
}

std::vector<AudioSignal> truncate_to_min(const std::vector<AudioSignal>& signals) {
    if (signals.empty()) throw Error(ErrorKind::EmptyInput, "truncate_to_min needs at least one signal");
    std::size_t shortest = signals.front().size();
    for (const auto& s : signals) {
        if (s.sample_rate != signals.front().sample_rate) {
            throw Error(ErrorKind::InvalidInput, "signals do not share a sample rate");
        }
        shortest = std::min(shortest, s.size());
    }
    std::vector<AudioSignal> out;
    out.reserve(signals.size());
    for (const auto& s : signals) {
        out.push_back({std::vector<double>(s.samples.begin(), s.samples.begin() + static_cast<std::ptrdiff_t>(shortest)),
                       s.sample_rate});
    }
    return out;
}

AudioSignal quantize_pcm16(const AudioSignal& signal) {
    AudioSignal out{signal.samples, signal.sample_rate};
    for (double& v : out.samples) v = std::clamp(std::round(v * 32768.0), -32768.0, 32767.0) / 32768.0;
    return out;
}

}  // namespace hpit
