#pragma once

#include "hpit/audio.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace hpit {

/// Reads the first channel of a 16-bit PCM or 32-bit float WAV
/// (WAVE_FORMAT_EXTENSIBLE included). 16-bit samples are scaled by 1/32768.
[[nodiscard]] AudioSignal read_wav(const std::filesystem::path& path);
[[nodiscard]] AudioSignal decode_wav(std::span<const std::uint8_t> bytes);

/// Mono 16-bit PCM, round(x * 32768) clamped to the int16 range, no dither.
void write_wav(const std::filesystem::path& path, const AudioSignal& signal);
[[nodiscard]] std::vector<std::uint8_t> encode_wav(const AudioSignal& signal);

}  // namespace hpit
