#ifndef SVT_TABLEAU_HPP
#define SVT_TABLEAU_HPP

#include <string>
#include <vector>

#include "svt/shape.hpp"

namespace svt {

using CellGrid = std::vector<std::vector<std::vector<int>>>;

/// A filling of a Young diagram where each cell holds a set of integers.
/// Cells are stored sorted ascending (canonical form).  Construction enforces
/// structural well-formedness only (grid matches shape, cells are genuine
/// sets of positive integers); the standardness and partition rules are
/// checked by validate().
class SetValuedTableau {
public:
    SetValuedTableau() = default;
    SetValuedTableau(Shape shape, CellGrid cells);  // throws std::invalid_argument

    /// Shape derived from the grid's row sizes.
    static SetValuedTableau from_cells(CellGrid cells);

    const Shape& shape() const { return shape_; }
    const CellGrid& cells() const { return cells_; }
    const std::vector<int>& cell(int i, int j) const {
        return cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    int num_rows() const { return shape_.num_rows(); }
    int total_entries() const;

    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
    bool operator<(const SetValuedTableau& other) const { return cells_ < other.cells_; }

private:
    Shape shape_;
    CellGrid cells_;
};

struct Violation {
    std::string rule;   // "structure" | "density" | "partition" |
                        // "row-standardness" | "column-standardness" | "standardness"
    int row_a = -1, col_a = -1;  // offending cells, 1-based; -1 when not applicable
    int row_b = -1, col_b = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the tableau invariants: the entries partition [m], and every
/// integer at (i,j) is smaller than every integer at any nonempty cell
/// weakly south-east of it.  For densities without empty cells the latter
/// reduces to the usual adjacent row/column comparisons.
ValidationReport validate(const SetValuedTableau& t);

/// As above, but additionally checks the tableau against an expected density
/// (cell cardinalities and total mass).
ValidationReport validate(const SetValuedTableau& t, const Density& expected);

/// True iff validate(t).ok(); cheaper (stops at the first violation).
bool is_standard(const SetValuedTableau& t);

/// Grid of cell cardinalities.
Density density_of(const SetValuedTableau& t);

/// Alphabet reversal x -> m+1-x followed by a 180-degree rotation of the grid.
/// An involution on rectangular tableaux; the image has density
/// reverse_density(density_of(t)).  Throws on non-rectangular shapes.
SetValuedTableau schutzenberger(const SetValuedTableau& t);

}  // namespace svt

#endif
