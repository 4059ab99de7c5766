#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hpit {

/// Bijection on {0..C-1}; mapping[i] is the column (estimate) assigned to row (target) i.
class Permutation {
public:
    Permutation() = default;
    /// Throws Error(InvalidInput) if `mapping` is not a bijection.
    explicit Permutation(std::vector<std::size_t> mapping);

    static Permutation identity(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
    std::size_t operator[](std::size_t i) const noexcept { return mapping_[i]; }
    [[nodiscard]] std::span<const std::size_t> mapping() const noexcept { return mapping_; }

    [[nodiscard]] Permutation inverse() const;

    [[nodiscard]] static bool is_bijection(std::span<const std::size_t> mapping);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> mapping_;
};

}  // namespace hpit
