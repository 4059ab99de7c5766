#pragma once

#include "hpit/assignment.hpp"
#include "hpit/audio.hpp"
#include "hpit/cost_matrix.hpp"
#include "hpit/permutation.hpp"

#include <span>
#include <vector>

namespace hpit {

inline constexpr double kSiSnrClampDb = 60.0;
inline constexpr double kSiSnrEpsilon = 1e-8;

/// Scale-invariant SNR in dB, clamped to [-60, 60].
///
/// Both signals are mean-subtracted. The estimate is projected onto the target
/// and the ratio of projection energy to residual energy is returned. The
/// residual is floored at 1e-8 of the projection energy, so the value is
/// exactly invariant to the estimate's gain and a perfect match saturates the
/// +60 ceiling.
[[nodiscard]] double si_snr(const AudioSignal& target, const AudioSignal& estimate);
[[nodiscard]] double si_snr(std::span<const double> target, std::span<const double> estimate);

/// si_snr(targets[i], estimates[pi(i)]) - si_snr(targets[i], mixture) for each i.
[[nodiscard]] std::vector<double> si_sdr_improvement(const SeparationInstance& instance,
                                                     const Permutation& permutation);

/// M(i, j) = -si_snr(targets[i], estimates[j]). Rows parallelised with OpenMP.
[[nodiscard]] CostMatrix pairwise_cost_matrix(const SeparationInstance& instance);
[[nodiscard]] CostMatrix pairwise_cost_matrix_serial(const SeparationInstance& instance);

struct MatchedLoss {
    Permutation permutation;
    double mean_loss = 0.0;
    std::vector<double> per_pair;
    AssignmentResult assignment;
};

/// Pairwise matrix + Hungarian solve. Mean of the matched negative SI-SNR.
[[nodiscard]] MatchedLoss hungarian_loss(const SeparationInstance& instance);

/// Same contract via exhaustive permutation search. Test oracle.
[[nodiscard]] MatchedLoss pit_loss(const SeparationInstance& instance,
                                   std::size_t guard = kDefaultBruteForceGuard);

}  // namespace hpit
