#include "hpit/cost_matrix.hpp"

#include "hpit/error.hpp"

#include <cmath>
#include <string>

namespace hpit {

CostMatrix CostMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    CostMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw Error(ErrorKind::InvalidInput, "cost matrix is not square: row " + std::to_string(i) + " has " +
                                                     std::to_string(rows[i].size()) + " entries, expected " +
                                                     std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

void CostMatrix::validate() const {
    if (size_ == 0) throw Error(ErrorKind::EmptyInput, "cost matrix is empty");
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            if (!std::isfinite((*this)(i, j))) {
                throw Error(ErrorKind::InvalidInput,
                            "cost matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not finite");
            }
        }
    }
}

std::vector<std::vector<double>> CostMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(size_);
    for (std::size_t i = 0; i < size_; ++i) rows[i].assign(row(i).begin(), row(i).end());
    return rows;
}

}  // namespace hpit
