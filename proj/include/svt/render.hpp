#ifndef SVT_RENDER_HPP
#define SVT_RENDER_HPP

#include <string>

#include "svt/bijections.hpp"
#include "svt/tableau.hpp"

namespace svt {

/// Boxed ASCII rendering, one row of boxes per tableau row:
///
///   +-----+-----+
///   | 1 2 | 3 4 |
///   +-----+-----+
///   | 5 6 | 7 8 |
///   +-----+-----+
std::string render_tableau(const SetValuedTableau& t);

std::string render_arrangement(const TennisArrangement& a);
std::string render_raney_tuple(const RaneyTuple& t);

}  // namespace svt

#endif
