#include "hpit/metrics.hpp"

#include "hpit/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hpit {

namespace {

std::vector<double> centered(std::span<const double> x) {
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    std::vector<double> out(x.size());
    std::transform(x.begin(), x.end(), out.begin(), [mean](double v) { return v - mean; });
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
    return sum;
}

// Both inputs already zero-mean; target_energy = <t, t> > 0.
double si_snr_centered(std::span<const double> target, double target_energy, std::span<const double> estimate) {
    const double scale = dot(estimate, target) / target_energy;
    double projected = 0.0;
    double residual = 0.0;
    for (std::size_t k = 0; k < target.size(); ++k) {
        const double p = scale * target[k];
        const double e = estimate[k] - p;
        projected += p * p;
        residual += e * e;
    }
    if (!(projected > 0.0)) return -kSiSnrClampDb;
    const double db = 10.0 * std::log10(projected / (residual + kSiSnrEpsilon * projected));
    if (std::isnan(db)) return -kSiSnrClampDb;
    return std::clamp(db, -kSiSnrClampDb, kSiSnrClampDb);
}

struct CenteredSet {
    std::vector<std::vector<double>> signals;
    std::vector<double> energy;
};

CenteredSet center_all(const std::vector<AudioSignal>& signals) {
    CenteredSet set;
    for (const auto& s : signals) {
        set.signals.push_back(centered(s.samples));
        set.energy.push_back(dot(set.signals.back(), set.signals.back()));
    }
    return set;
}

void require_target_energy(const CenteredSet& targets) {
    for (std::size_t i = 0; i < targets.energy.size(); ++i) {
        if (!(targets.energy[i] > 0.0)) {
            throw Error(ErrorKind::InvalidInput,
                        "target " + std::to_string(i) + " has zero energy after mean removal");
        }
    }
}

}  // namespace

double si_snr(std::span<const double> target, std::span<const double> estimate) {
    if (target.size() != estimate.size()) {
        throw Error(ErrorKind::InvalidInput, "si_snr length mismatch: target has " + std::to_string(target.size()) +
                                                 " samples, estimate has " + std::to_string(estimate.size()));
    }
    if (target.empty()) throw Error(ErrorKind::EmptyInput, "si_snr of empty signals");
    const auto t = centered(target);
    const double energy = dot(t, t);
    if (!(energy > 0.0)) throw Error(ErrorKind::InvalidInput, "target has zero energy after mean removal");
    const auto e = centered(estimate);
    return si_snr_centered(t, energy, e);
}

double si_snr(const AudioSignal& target, const AudioSignal& estimate) {
    return si_snr(std::span<const double>(target.samples), std::span<const double>(estimate.samples));
}

std::vector<double> si_sdr_improvement(const SeparationInstance& instance, const Permutation& permutation) {
    instance.validate();
    if (permutation.size() != instance.num_sources()) {
        throw Error(ErrorKind::InvalidInput, "permutation size does not match source count");
    }
    std::vector<double> out(instance.num_sources());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = si_snr(instance.targets[i], instance.estimates[permutation[i]]) -
                 si_snr(instance.targets[i], instance.mixture);
    }
    return out;
}

CostMatrix pairwise_cost_matrix_serial(const SeparationInstance& instance) {
    instance.validate();
    const auto targets = center_all(instance.targets);
    const auto estimates = center_all(instance.estimates);
    require_target_energy(targets);
    const std::size_t c = instance.num_sources();
    CostMatrix m(c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = -si_snr_centered(targets.signals[i], targets.energy[i], estimates.signals[j]);
        }
    }
    return m;
}

CostMatrix pairwise_cost_matrix(const SeparationInstance& instance) {
    instance.validate();
    const auto targets = center_all(instance.targets);
    const auto estimates = center_all(instance.estimates);
    require_target_energy(targets);
    const auto c = static_cast<std::ptrdiff_t>(instance.num_sources());
    CostMatrix m(static_cast<std::size_t>(c));

#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t i = 0; i < c; ++i) {
        for (std::ptrdiff_t j = 0; j < c; ++j) {
            m(i, j) = -si_snr_centered(targets.signals[i], targets.energy[i], estimates.signals[j]);
        }
    }
    return m;
}

}  // namespace hpit
