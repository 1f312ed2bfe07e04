#ifndef SVT_ENUMERATE_HPP
#define SVT_ENUMERATE_HPP

#include <functional>
#include <span>
#include <vector>

#include "svt/count.hpp"
#include "svt/shape.hpp"

namespace svt {

/// Cell densities of a two-row shape (n1, n2).  Both vectors have length n1;
/// bottom[j] = 0 for j >= n2 (cells that do not exist count as density zero).
struct TwoRowDensity {
    std::vector<int> top;
    std::vector<int> bottom;
    int n2 = 0;  // number of real second-row cells

    TwoRowDensity() = default;
    TwoRowDensity(std::vector<int> a, std::vector<int> b);  // pads b, n2 = b.size()

    int columns() const { return static_cast<int>(top.size()); }
    int total_mass() const;

    /// From a one- or two-row density grid; throws for three or more rows.
    static TwoRowDensity from_density(const Density& rho);
};

/// Number of two-row tableaux via the column-peeling recursion
///   |SVT(a1,a2,... / b1,b2,...)| = sum_{i=0}^{b1} C(a2+i-1, i) * |SVT(a2,... / b1+b2-i, b3,...)|
/// with a single column admitting exactly one filling.
Count count_shift_recursion(const TwoRowDensity& d);

/// Number of two-row tableaux via the dominated-tuple closed form
///   sum over (i_1..i_{n1-1}) dominated by (b_1..b_{n1-1}) of
///   prod_j C(a_{j+1}+i_j-1, i_j),
/// evaluated by a prefix-sum dynamic program over (column, accumulated mass)
/// in O(n1 * (sum b)^2) arithmetic operations; no tuples are materialized.
Count count_closed_form(const TwoRowDensity& d);

/// All tuples (i_1..i_L) of non-negative integers whose prefix sums are
/// bounded by those of b_prefix, emitted exactly once in lexicographic order.
/// Return false from the callback to stop early.
bool enumerate_dominated_tuples(std::span<const int> b_prefix,
                                const std::function<bool(const std::vector<int>&)>& visit);

std::vector<std::vector<int>> dominated_tuples(std::span<const int> b_prefix);

}  // namespace svt

#endif
