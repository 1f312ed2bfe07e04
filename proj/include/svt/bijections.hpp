#ifndef SVT_BIJECTIONS_HPP
#define SVT_BIJECTIONS_HPP

#include <vector>

#include "svt/lattice_path.hpp"
#include "svt/tableau.hpp"

namespace svt {

// Structural maps between two-row tableaux and lattice paths, between
// tableaux of adjacent sizes (density shifting), between tableau tuples and
// single tableaux (horizontal concatenation), and between tableaux and
// tennis-ball arrangements.

/// Step x of the image is East when integer x sits in row 1 of t, North when
/// it sits in row 2.  Requires a valid tableau with at most two rows whose
/// density has no j with rho(2,j) = rho(1,j+1) = 0.
LatticePath tableau_to_path(const SetValuedTableau& t);

/// Inverse filling: row-1 cells receive the indices of East steps (a_j per
/// cell, left to right), row-2 cells the indices of North steps.  Throws
/// std::invalid_argument("path not weakly below P_max") when the filling is
/// not column-standard.
SetValuedTableau path_to_tableau(const LatticePath& path, const Density& rho);

struct DensityShiftResult {
    SetValuedTableau tableau;
    int shifted = 0;  // how many entries of (2,1) moved up to row 1
};

/// One column-peeling step: the entries of (2,1) smaller than the largest
/// entry of (1,2) move to (1,2), the rest to (2,2); the first column is then
/// deleted and entries reindexed by x -> x - a1.  Requires at least two
/// columns.  The result has rho'(1,1) = a2 + shifted, rho'(2,1) = b1+b2-shifted.
DensityShiftResult density_shift(const SetValuedTableau& t);

/// Inverse of density_shift for a chosen class: u is a set of `shifted`
/// values from {1..rho'(1,1)-1} (it may not contain the largest entry of
/// (1,1)).  Removes the u-entries of (1,1) and the b1-shifted smallest
/// entries of (2,1), prepends a column whose bottom cell holds the removed
/// integers, reindexes by x -> x + a1 and fills the new top-left cell with
/// {1..a1}.  density_shift of the result returns (t_shifted, shifted).
SetValuedTableau density_shift_inverse(const SetValuedTableau& t_shifted, int shifted,
                                       const std::vector<int>& u, int a1, int b1);

/// An ordered tuple of square two-row blocks with row densities 1 / (k-1);
/// empty blocks are allowed.
struct RaneyTuple {
    int k = 1;
    int r = 1;
    std::vector<SetValuedTableau> blocks;  // blocks.size() == r

    int total_columns() const;  // sum of block widths
};

/// Checks block count, per-block validity and the 1/(k-1) row densities.
void check_raney_tuple(const RaneyTuple& tuple);

/// Horizontal concatenation: prepend a marker column before each block, mark
/// the top of the first and the bottoms of the rest, relabel everything left
/// to right with the smallest available elements of [kn+r], then collapse the
/// second row leftward so cell (2,1) holds r-1 entries and every later
/// second-row cell holds k-1.  The result lives in the (n+1)-column density
/// rows 1 / (r-1, k-1, ..., k-1).
SetValuedTableau raney_concat(const RaneyTuple& tuple);

/// Inverse of raney_concat.  Throws if t does not carry the density
/// rows 1 / (r-1, k-1, ..., k-1).
RaneyTuple raney_split(const SetValuedTableau& t, int k, int r);

/// State of the tennis ball process after n turns: s_vec[i] balls are added
/// and t_vec[i] thrown onto the lawn during turn i.
struct TennisArrangement {
    int n = 0;
    std::vector<int> s_vec;
    std::vector<int> t_vec;
    std::vector<int> lawn;  // sorted ball labels on the lawn

    bool constant() const;  // all s_i equal and all t_i equal
};

/// A lawn set is reachable iff |lawn ∩ [S_i]| >= T_i for every turn i, where
/// S_i and T_i are the cumulative added/thrown counts.
bool is_valid_arrangement(const TennisArrangement& arr);

/// Every distinct lawn set reachable by the throwing process, found by brute
/// force over all throw choices.  Independent of is_valid_arrangement; the
/// two are cross-checked in the tests.
std::vector<std::vector<int>> enumerate_lawn_sets(const std::vector<int>& s_vec,
                                                  const std::vector<int>& t_vec);

/// Constant-parameter arrangement -> tableau of the row-constant density
/// t / (s-t) on (n+1) columns: lawn labels fill row 1 from (1,2) onward (t per
/// cell), the remaining labels fill row-2 cells 1..n, everything is reindexed
/// by x -> x+t, {1..t} enters (1,1) and the s-t largest labels of the full
/// alphabet enter (2,n+1).
SetValuedTableau tennis_to_tableau(const TennisArrangement& arr);

/// Inverse: strips the padding cells and reindexes by x -> x-t.
TennisArrangement tableau_to_tennis(const SetValuedTableau& t, int s, int t_throw, int n);

}  // namespace svt

#endif
