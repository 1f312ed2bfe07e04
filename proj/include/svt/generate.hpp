#ifndef SVT_GENERATE_HPP
#define SVT_GENERATE_HPP

#include <functional>
#include <vector>

#include "svt/count.hpp"
#include "svt/tableau.hpp"

namespace svt {

// Exhaustive generation of standard set-valued tableaux of a given density.
//
// Integers 1..m are placed one at a time; integer t may enter cell (i,j) iff
// the cell is below its capacity rho(i,j) and every cell weakly above-left of
// (i,j) is already completely full.  Placing entries in increasing order this
// way yields exactly the standard tableaux, each once, in lexicographic order
// of the sequence (cell of 1, cell of 2, ..., cell of m) with cells ordered
// row-major.

/// Visit every tableau in generation order.  Return false from the callback
/// to stop early.  Returns false iff the stream was cut short.
bool generate_all(const Density& rho,
                  const std::function<bool(const SetValuedTableau&)>& visit);

/// Lightweight variant handing out the raw cell grid (no tableau object).
bool for_each_filling(const Density& rho,
                      const std::function<bool(const CellGrid&)>& visit);

std::vector<SetValuedTableau> all_tableaux(const Density& rho);

Count count_by_generation(const Density& rho);

}  // namespace svt

#endif
