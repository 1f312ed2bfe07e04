#include <doctest.h>

#include "svt/json_io.hpp"
#include "svt/render.hpp"

using namespace svt;
using nlohmann::json;

namespace {

SetValuedTableau tab(CellGrid cells) { return SetValuedTableau::from_cells(std::move(cells)); }

}  // namespace

TEST_CASE("tableau JSON is canonical and round-trips byte-identically") {
    auto t = tab({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}});
    std::string emitted = to_json(t).dump();
    CHECK(emitted == R"({"cells":[[[1,2],[3,4]],[[5,6],[7,8]]],"shape":[2,2]})");
    CHECK(to_json(tableau_from_json(json::parse(emitted))).dump() == emitted);

    std::string empty = to_json(SetValuedTableau()).dump();
    CHECK(to_json(tableau_from_json(json::parse(empty))).dump() == empty);
}

TEST_CASE("path, count and density JSON") {
    CHECK(to_json(LatticePath("ENEN")).dump() == R"({"steps":"ENEN"})");
    CHECK(path_from_json(json::parse(R"({"steps":"EN"})")) == LatticePath("EN"));
    CHECK(to_json(Count("123456789012345678901234567890")).dump() ==
          R"({"value":"123456789012345678901234567890"})");
    CHECK(count_from_json(json::parse(R"({"value":"42"})")) == 42);
    Density rho(Shape({2, 1}), {{1, 2}, {3}});
    CHECK(density_from_json(to_json(rho)) == rho);
}

TEST_CASE("tuple and arrangement JSON") {
    RaneyTuple tuple{2, 2, {tab({{{1}}, {{2}}}), SetValuedTableau()}};
    auto parsed = raney_tuple_from_json(to_json(tuple));
    CHECK(parsed.k == 2);
    CHECK(parsed.r == 2);
    REQUIRE(parsed.blocks.size() == 2);
    CHECK(parsed.blocks[0] == tuple.blocks[0]);
    CHECK(parsed.blocks[1].shape().empty());

    TennisArrangement arr{2, {2, 2}, {1, 1}, {1, 3}};
    std::string emitted = to_json(arr).dump();
    CHECK(emitted == R"({"lawn":[1,3],"n":2,"s":2,"t":1})");
    auto back = arrangement_from_json(json::parse(emitted));
    CHECK(back.lawn == arr.lawn);
    CHECK(back.s_vec == arr.s_vec);

    TennisArrangement general{2, {2, 3}, {1, 2}, {1, 2, 3}};
    auto general_back = arrangement_from_json(to_json(general));
    CHECK(general_back.t_vec == general.t_vec);
}

TEST_CASE("density grammar") {
    CHECK(parse_density("2,2;2,2") == Density(Shape({2, 2}), {{2, 2}, {2, 2}}));
    CHECK(parse_density("1,1,1;2,2") == Density(Shape({3, 2}), {{1, 1, 1}, {2, 2}}));
    CHECK(parse_density("") == Density());
    CHECK(parse_density("1, 0, 2") == Density(Shape({3}), {{1, 0, 2}}));
    CHECK_THROWS_AS(parse_density("1;2,2"), std::invalid_argument);  // increasing rows
    CHECK_THROWS_AS(parse_density("1,x"), std::invalid_argument);
    CHECK(parse_shape("2,2") == Shape({2, 2}));
    CHECK(parse_shape("") == Shape());
}

TEST_CASE("ascii rendering") {
    auto t = tab({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}});
    CHECK(render_tableau(t) ==
          "+-----+-----+\n"
          "| 1 2 | 3 4 |\n"
          "+-----+-----+\n"
          "| 5 6 | 7 8 |\n"
          "+-----+-----+\n");
    auto ragged = tab({{{1}, {2, 3}}, {{4}}});
    CHECK(render_tableau(ragged) ==
          "+---+-----+\n"
          "| 1 | 2 3 |\n"
          "+---+-----+\n"
          "| 4 |\n"
          "+---+\n");
    CHECK(render_tableau(SetValuedTableau()) == "(empty tableau)\n");
}
