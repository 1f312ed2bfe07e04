#include "svt/shape.hpp"

#include <numeric>
#include <stdexcept>

namespace svt {

Shape::Shape(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw std::invalid_argument("shape rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("shape rows must be non-increasing");
    }
}

int Shape::num_cells() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

bool Shape::contains(int i, int j) const {
    return i >= 0 && i < num_rows() && j >= 0 && j < row_length(i);
}

bool Shape::is_rectangular() const {
    for (int len : rows_)
        if (len != rows_.front()) return false;
    return true;
}

Density::Density(Shape shape, std::vector<std::vector<int>> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
    if (static_cast<int>(cells_.size()) != shape_.num_rows())
        throw std::invalid_argument("density grid does not match shape");
    for (int i = 0; i < shape_.num_rows(); ++i) {
        if (static_cast<int>(cells_[static_cast<std::size_t>(i)].size()) != shape_.row_length(i))
            throw std::invalid_argument("density grid does not match shape");
        for (int v : cells_[static_cast<std::size_t>(i)]) {
            if (v < 0) throw std::invalid_argument("density entries must be non-negative");
            mass_ += v;
        }
    }
}

Density reverse_density(const Density& rho) {
    if (!rho.shape().is_rectangular())
        throw std::invalid_argument("involution requires rectangular shape");
    const int m = rho.shape().num_rows();
    if (m == 0) return rho;
    const int n = rho.shape().row_length(0);
    std::vector<std::vector<int>> rotated(static_cast<std::size_t>(m),
                                          std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            rotated[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rho.at(m - 1 - i, n - 1 - j);
    return Density(rho.shape(), std::move(rotated));
}

}  // namespace svt
