#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hpit {

/// Square matrix of pairwise losses. Rows are targets, columns are estimates.
///
/// Storage is row-major. The container does not reject non-finite values on
/// write; solvers call validate() and refuse such matrices.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(std::size_t size, double fill = 0.0)
        : size_(size), entries_(size * size, fill) {}

    static CostMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    double& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * size_ + col]; }
    double operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * size_ + col]; }

    [[nodiscard]] std::span<const double> row(std::size_t r) const noexcept {
        return {entries_.data() + r * size_, size_};
    }
    [[nodiscard]] std::span<double> row(std::size_t r) noexcept { return {entries_.data() + r * size_, size_}; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return entries_; }

    /// Throws Error(EmptyInput) for size 0 and Error(InvalidInput) naming the
    /// first non-finite entry.
    void validate() const;

    [[nodiscard]] std::vector<std::vector<double>> to_rows() const;

    friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<double> entries_;
};

}  // namespace hpit
