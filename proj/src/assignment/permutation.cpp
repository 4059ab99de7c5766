#include "hpit/permutation.hpp"

#include "hpit/error.hpp"

#include <numeric>

namespace hpit {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    if (!is_bijection(mapping_)) throw Error(ErrorKind::InvalidInput, "mapping is not a permutation");
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<std::size_t> m(size);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_bijection(std::span<const std::size_t> mapping) {
    std::vector<bool> seen(mapping.size(), false);
    for (std::size_t v : mapping) {
        if (v >= mapping.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace hpit
