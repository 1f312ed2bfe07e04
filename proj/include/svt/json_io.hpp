#ifndef SVT_JSON_IO_HPP
#define SVT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "svt/bijections.hpp"
#include "svt/count.hpp"
#include "svt/lattice_path.hpp"
#include "svt/tableau.hpp"

namespace svt {

// Canonical JSON forms.  nlohmann::json keeps keys sorted, so re-parsing any
// emitted object and re-emitting it is byte-identical.
//
//   tableau      {"cells":[[[1,2],[3,4]],[[5,6],[7,8]]],"shape":[2,2]}
//   density      {"cells":[[2,2],[2,2]],"shape":[2,2]}
//   path         {"steps":"ENEN"}
//   count        {"value":"6"}              (decimal string; counts exceed 64 bits)
//   raney tuple  {"blocks":[...],"k":3,"r":4}
//   arrangement  {"lawn":[1,3],"n":2,"s":2,"t":1}

nlohmann::json to_json(const Shape& s);
nlohmann::json to_json(const Density& d);
nlohmann::json to_json(const SetValuedTableau& t);
nlohmann::json to_json(const LatticePath& p);
nlohmann::json to_json(const Count& c);
nlohmann::json to_json(const RaneyTuple& t);
nlohmann::json to_json(const TennisArrangement& a);

Shape shape_from_json(const nlohmann::json& j);
Density density_from_json(const nlohmann::json& j);
SetValuedTableau tableau_from_json(const nlohmann::json& j);
LatticePath path_from_json(const nlohmann::json& j);
Count count_from_json(const nlohmann::json& j);
RaneyTuple raney_tuple_from_json(const nlohmann::json& j);
TennisArrangement arrangement_from_json(const nlohmann::json& j);

/// Command-line density grammar: rows separated by ';', cells by ','.
/// "1,1,1;2,2,2" is a (3,3) grid; the empty string is the empty grid.
Density parse_density(const std::string& text);

/// "2,2" -> Shape{2,2}; "" -> empty shape.
Shape parse_shape(const std::string& text);

}  // namespace svt

#endif
