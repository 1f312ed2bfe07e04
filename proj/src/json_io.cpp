#include "svt/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace svt {

using nlohmann::json;

json to_json(const Shape& s) { return json(s.rows()); }

json to_json(const Density& d) {
    return json{{"cells", d.cells()}, {"shape", d.shape().rows()}};
}

json to_json(const SetValuedTableau& t) {
    return json{{"cells", t.cells()}, {"shape", t.shape().rows()}};
}

json to_json(const LatticePath& p) { return json{{"steps", p.steps()}}; }

json to_json(const Count& c) { return json{{"value", c.str()}}; }

json to_json(const RaneyTuple& t) {
    json blocks = json::array();
    for (const auto& block : t.blocks) blocks.push_back(to_json(block));
    return json{{"blocks", blocks}, {"k", t.k}, {"r", t.r}};
}

json to_json(const TennisArrangement& a) {
    if (a.n > 0 && a.constant())
        return json{{"lawn", a.lawn}, {"n", a.n}, {"s", a.s_vec[0]}, {"t", a.t_vec[0]}};
    return json{{"lawn", a.lawn}, {"n", a.n}, {"s_vec", a.s_vec}, {"t_vec", a.t_vec}};
}

Shape shape_from_json(const json& j) { return Shape(j.get<std::vector<int>>()); }

Density density_from_json(const json& j) {
    return Density(shape_from_json(j.at("shape")),
                   j.at("cells").get<std::vector<std::vector<int>>>());
}

SetValuedTableau tableau_from_json(const json& j) {
    return SetValuedTableau(shape_from_json(j.at("shape")), j.at("cells").get<CellGrid>());
}

LatticePath path_from_json(const json& j) {
    return LatticePath(j.at("steps").get<std::string>());
}

Count count_from_json(const json& j) { return Count(j.at("value").get<std::string>()); }

RaneyTuple raney_tuple_from_json(const json& j) {
    RaneyTuple tuple;
    tuple.k = j.at("k").get<int>();
    tuple.r = j.at("r").get<int>();
    for (const auto& block : j.at("blocks")) tuple.blocks.push_back(tableau_from_json(block));
    return tuple;
}

TennisArrangement arrangement_from_json(const json& j) {
    TennisArrangement arr;
    arr.n = j.at("n").get<int>();
    arr.lawn = j.at("lawn").get<std::vector<int>>();
    if (j.contains("s_vec")) {
        arr.s_vec = j.at("s_vec").get<std::vector<int>>();
        arr.t_vec = j.at("t_vec").get<std::vector<int>>();
    } else {
        arr.s_vec.assign(static_cast<std::size_t>(arr.n), j.at("s").get<int>());
        arr.t_vec.assign(static_cast<std::size_t>(arr.n), j.at("t").get<int>());
    }
    return arr;
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        // trim spaces
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) throw std::invalid_argument("empty list entry");
        const auto last = item.find_last_not_of(" \t");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(value);
    }
    return out;
}

}  // namespace

Density parse_density(const std::string& text) {
    std::vector<std::vector<int>> grid;
    std::stringstream stream(text);
    std::string row;
    while (std::getline(stream, row, ';'))
        if (!row.empty()) grid.push_back(parse_int_list(row));
    std::vector<int> lengths;
    lengths.reserve(grid.size());
    for (const auto& r : grid) lengths.push_back(static_cast<int>(r.size()));
    return Density(Shape(std::move(lengths)), std::move(grid));
}

Shape parse_shape(const std::string& text) {
    if (text.empty()) return Shape();
    return Shape(parse_int_list(text));
}

}  // namespace svt
