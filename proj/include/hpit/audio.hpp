#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hpit {

struct AudioSignal {
    std::vector<double> samples;
    std::uint32_t sample_rate = 8000;

    [[nodiscard]] std::size_t size() const noexcept { return samples.size(); }

    /// Throws Error(EmptyInput) for zero samples, Error(InvalidInput) for a
    /// zero sample rate or non-finite samples.
    void validate() const;
};

/// Targets s_1..s_C, estimates and the mixture they were separated from.
struct SeparationInstance {
    std::vector<AudioSignal> targets;
    std::vector<AudioSignal> estimates;
    AudioSignal mixture;

    [[nodiscard]] std::size_t num_sources() const noexcept { return targets.size(); }

    /// C >= 2, equal target/estimate counts, one shared rate and length.
    void validate() const;
};

}  // namespace hpit
