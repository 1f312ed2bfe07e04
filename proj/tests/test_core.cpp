#include <doctest.h>

#include "svt/generate.hpp"
#include "svt/shape.hpp"
#include "svt/tableau.hpp"

using namespace svt;

namespace {

SetValuedTableau tab(CellGrid cells) { return SetValuedTableau::from_cells(std::move(cells)); }

// rows {1},{3},{7} / {2,4},{5,6},{8,9}
SetValuedTableau nine_entry_example() {
    return tab({{{1}, {3}, {7}}, {{2, 4}, {5, 6}, {8, 9}}});
}

}  // namespace

TEST_CASE("shape invariants") {
    CHECK(Shape({3, 2, 1}).num_cells() == 6);
    CHECK(Shape().empty());
    CHECK(Shape({2, 2}).is_rectangular());
    CHECK_FALSE(Shape({3, 2}).is_rectangular());
    CHECK_THROWS_AS(Shape({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Shape({1, 0}), std::invalid_argument);
}

TEST_CASE("density construction") {
    Density rho(Shape({2, 2}), {{2, 2}, {2, 2}});
    CHECK(rho.total_mass() == 8);
    CHECK(rho.at(1, 0) == 2);
    CHECK_THROWS_AS(Density(Shape({2, 2}), {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Density(Shape({1}), {{-1}}), std::invalid_argument);
    CHECK(Density(Shape({2}), {{0, 3}}).total_mass() == 3);  // zero cells admitted
}

TEST_CASE("validate accepts the basic 2x2 example") {
    auto t = tab({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}});
    CHECK(validate(t).ok());
    CHECK(is_standard(t));
}

TEST_CASE("validate reports a missing integer against the expected density") {
    auto t = tab({{{1, 2}, {3, 4}}, {{5, 6}, {7}}});
    // On its own this is a fine 7-entry tableau...
    CHECK(validate(t).ok());
    // ...but against the all-2 density the partition of [8] fails.
    Density expected(Shape({2, 2}), {{2, 2}, {2, 2}});
    auto report = validate(t, expected);
    REQUIRE_FALSE(report.ok());
    bool saw_partition = false;
    for (const auto& v : report.violations) {
        if (v.rule == "partition") {
            saw_partition = true;
            CHECK(v.detail == "entries do not partition [8]");
        }
    }
    CHECK(saw_partition);
}

TEST_CASE("validate reports row-standardness with the offending cells") {
    auto t = tab({{{1, 3}, {2, 4}}, {{5, 6}, {7, 8}}});
    auto report = validate(t);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().rule == "row-standardness");
    CHECK(report.violations.front().row_a == 1);
    CHECK(report.violations.front().col_a == 1);
    CHECK(report.violations.front().row_b == 1);
    CHECK(report.violations.front().col_b == 2);
}

TEST_CASE("validate flags column and skip-level order violations") {
    auto column_bad = tab({{{5, 6}, {7, 8}}, {{1, 2}, {3, 4}}});
    bool saw_column = false;
    for (const auto& v : validate(column_bad).violations)
        if (v.rule == "column-standardness") saw_column = true;
    CHECK(saw_column);

    // An empty intermediate cell does not suspend the ordering: position
    // (2,2) must still dominate (1,1).
    auto skip = tab({{{2}, {}}, {{}, {1}}});
    bool saw_diag = false;
    for (const auto& v : validate(skip).violations)
        if (v.rule == "standardness") saw_diag = true;
    CHECK(saw_diag);
    CHECK(is_standard(tab({{{1}, {}}, {{}, {2}}})));
}

TEST_CASE("cells are canonicalized and screened") {
    auto t = SetValuedTableau(Shape({1}), {{{3, 1, 2}}});
    CHECK(t.cell(0, 0) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(SetValuedTableau(Shape({1}), {{{1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(SetValuedTableau(Shape({1}), {{{0}}}), std::invalid_argument);
    CHECK_THROWS_AS(SetValuedTableau(Shape({2}), {{{1}}}), std::invalid_argument);
}

TEST_CASE("density_of") {
    auto t = tab({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}});
    CHECK(density_of(t) == Density(Shape({2, 2}), {{2, 2}, {2, 2}}));
    CHECK(density_of(SetValuedTableau()) == Density());
    CHECK(density_of(nine_entry_example()) == Density(Shape({3, 3}), {{1, 1, 1}, {2, 2, 2}}));
}

TEST_CASE("reverse_density rotates the grid half a turn") {
    Density rho(Shape({3, 3}), {{1, 1, 1}, {2, 2, 2}});
    CHECK(reverse_density(rho) == Density(Shape({3, 3}), {{2, 2, 2}, {1, 1, 1}}));
    Density all2(Shape({2, 2}), {{2, 2}, {2, 2}});
    CHECK(reverse_density(all2) == all2);
    Density ragged_vals(Shape({2, 2}), {{1, 1}, {3, 2}});
    CHECK(reverse_density(ragged_vals) == Density(Shape({2, 2}), {{2, 3}, {1, 1}}));
    CHECK_THROWS_WITH(reverse_density(Density(Shape({2, 1}), {{1, 1}, {1}})),
                      "involution requires rectangular shape");
}

TEST_CASE("schutzenberger worked examples") {
    auto self_dual = tab({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}});
    CHECK(schutzenberger(self_dual) == self_dual);

    auto expected = tab({{{1, 2}, {4, 5}, {6, 8}}, {{3}, {7}, {9}}});
    CHECK(schutzenberger(nine_entry_example()) == expected);
    CHECK(is_standard(expected));

    auto single = tab({{{1}}});
    CHECK(schutzenberger(single) == single);
    CHECK_THROWS_AS(schutzenberger(tab({{{1}, {2}}, {{3}}})), std::invalid_argument);
}

TEST_CASE("schutzenberger is an involution across a generated class") {
    Density rho(Shape({2, 2}), {{1, 2}, {2, 1}});
    for (const auto& t : all_tableaux(rho)) {
        auto image = schutzenberger(t);
        CHECK(validate(image, reverse_density(rho)).ok());
        CHECK(schutzenberger(image) == t);
    }
}
