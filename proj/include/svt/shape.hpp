#ifndef SVT_SHAPE_HPP
#define SVT_SHAPE_HPP

#include <vector>

namespace svt {

/// Young diagram outline: a non-increasing list of positive row lengths.
/// The empty shape (no rows) is legal.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> row_lengths);  // throws std::invalid_argument

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    int num_cells() const;
    bool empty() const { return rows_.empty(); }
    bool contains(int i, int j) const;
    bool is_rectangular() const;
    const std::vector<int>& rows() const { return rows_; }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<int> rows_;
};

/// Per-cell non-negative set cardinalities aligned with a Shape.
class Density {
public:
    Density() = default;
    Density(Shape shape, std::vector<std::vector<int>> cells);  // throws on mismatch

    const Shape& shape() const { return shape_; }
    int at(int i, int j) const { return cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& cells() const { return cells_; }
    int total_mass() const { return mass_; }

    friend bool operator==(const Density&, const Density&) = default;

private:
    Shape shape_;
    std::vector<std::vector<int>> cells_;
    int mass_ = 0;
};

/// 180-degree rotation of a density grid.  Requires a rectangular shape;
/// throws std::invalid_argument("involution requires rectangular shape") otherwise.
Density reverse_density(const Density& rho);

}  // namespace svt

#endif
