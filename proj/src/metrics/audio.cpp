#include "hpit/audio.hpp"

#include "hpit/error.hpp"

#include <cmath>
#include <string>

namespace hpit {

void AudioSignal::validate() const {
    if (samples.empty()) throw Error(ErrorKind::EmptyInput, "audio signal has no samples");
    if (sample_rate == 0) throw Error(ErrorKind::InvalidInput, "audio signal has a zero sample rate");
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (!std::isfinite(samples[k])) {
            throw Error(ErrorKind::InvalidInput, "sample " + std::to_string(k) + " is not finite");
        }
    }
}

void SeparationInstance::validate() const {
    if (targets.size() < 2) throw Error(ErrorKind::InvalidInput, "a separation instance needs at least 2 sources");
    if (estimates.size() != targets.size()) {
        throw Error(ErrorKind::InvalidInput, "got " + std::to_string(targets.size()) + " targets but " +
                                                 std::to_string(estimates.size()) + " estimates");
    }
    mixture.validate();
    auto check = [&](const AudioSignal& s, const std::string& name) {
        s.validate();
        if (s.sample_rate != mixture.sample_rate) {
            throw Error(ErrorKind::InvalidInput, name + " sample rate " + std::to_string(s.sample_rate) +
                                                     " differs from mixture rate " +
                                                     std::to_string(mixture.sample_rate));
        }
        if (s.size() != mixture.size()) {
            throw Error(ErrorKind::InvalidInput, name + " has " + std::to_string(s.size()) +
                                                     " samples, mixture has " + std::to_string(mixture.size()));
        }
    };
    for (std::size_t i = 0; i < targets.size(); ++i) check(targets[i], "target " + std::to_string(i));
    for (std::size_t i = 0; i < estimates.size(); ++i) check(estimates[i], "estimate " + std::to_string(i));
}

}  // namespace hpit
