#include "hpit/metrics.hpp"

#include "hpit/error.hpp"

#include <string>

namespace hpit {

namespace {

MatchedLoss matched(const CostMatrix& m, AssignmentResult assignment) {
    MatchedLoss loss;
    loss.permutation = assignment.permutation;
    loss.per_pair.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) loss.per_pair[i] = m(i, loss.permutation[i]);
    loss.mean_loss = assignment.total_cost / static_cast<double>(m.size());
    loss.assignment = std::move(assignment);
    return loss;
}

}  // namespace

MatchedLoss hungarian_loss(const SeparationInstance& instance) {
    const auto m = pairwise_cost_matrix(instance);
    return matched(m, solve_hungarian(m));
}

MatchedLoss pit_loss(const SeparationInstance& instance, std::size_t guard) {
    if (instance.num_sources() > guard) {
        throw Error(ErrorKind::TooLarge, "C = " + std::to_string(instance.num_sources()) +
                                             " exceeds the brute-force guard of " + std::to_string(guard));
    }
    const auto m = pairwise_cost_matrix(instance);
    return matched(m, solve_bruteforce(m, guard));
}

}  // namespace hpit
