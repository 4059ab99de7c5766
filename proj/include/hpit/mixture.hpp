#pragma once

#include "hpit/audio.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hpit {

struct SnrRange {
    double low = 0.0;
    double high = 5.0;
};

struct MixSpec {
    int num_sources = 2;
    std::uint32_t sample_rate = 8000;
    double duration = 4.0;  // seconds
    SnrRange snr_range{};
    std::uint64_t seed = 0;

    /// round(duration * sample_rate)
    [[nodiscard]] std::size_t num_samples() const;
    void validate() const;
};

struct SourceKind {
    enum class Variant { SineBundle, Chirp, BandNoise, File };

    Variant variant = Variant::SineBundle;
    std::filesystem::path path;  // File only

    static SourceKind sine_bundle() { return {Variant::SineBundle, {}}; }
    static SourceKind chirp() { return {Variant::Chirp, {}}; }
    static SourceKind band_noise() { return {Variant::BandNoise, {}}; }
    static SourceKind file(std::filesystem::path p) { return {Variant::File, std::move(p)}; }
};

[[nodiscard]] SourceKind parse_source_kind(std::string_view name);
[[nodiscard]] std::string source_kind_name(const SourceKind& kind);

inline constexpr double kSourcePeak = 0.9;

/// C signals of spec.num_samples() samples, each peak-normalised to 0.9 and
/// fully determined by (spec.seed, index). Sine bundles draw distinct
/// fundamentals so sources stay decorrelated.
[[nodiscard]] std::vector<AudioSignal> generate_sources(const MixSpec& spec, const std::vector<SourceKind>& kinds);

struct MixResult {
    AudioSignal mixture;
    /// Final per-source gains; mixture == sum(gains[i] * sources[i]).
    /// Already include `rescale`.
    std::vector<double> gains;
    /// Global anti-clipping factor (1.0 when no sample exceeded 1.0).
    double rescale = 1.0;
    /// Signed energy ratio of each source to source 0 before rescaling, dB.
    std::vector<double> snr_db;
};

/// Source 0 keeps unit gain; source i >= 1 is scaled to sit +/-snr dB (random
/// sign, snr uniform in range) relative to source 0's energy.
[[nodiscard]] MixResult mix(const std::vector<AudioSignal>& sources, SnrRange snr_range, std::uint64_t seed);

/// Cuts every signal to the shortest length, keeping the start.
[[nodiscard]] std::vector<AudioSignal> truncate_to_min(const std::vector<AudioSignal>& signals);

/// Snap samples to the 16-bit PCM grid used by write_wav.
[[nodiscard]] AudioSignal quantize_pcm16(const AudioSignal& signal);

}  // namespace hpit
