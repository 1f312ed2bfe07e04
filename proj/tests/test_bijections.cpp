#include <doctest.h>

#include <set>

#include "svt/bijections.hpp"
#include "svt/generate.hpp"

using namespace svt;

namespace {

SetValuedTableau tab(CellGrid cells) { return SetValuedTableau::from_cells(std::move(cells)); }

SetValuedTableau nine_entry_example() {
    return tab({{{1}, {3}, {7}}, {{2, 4}, {5, 6}, {8, 9}}});
}

}  // namespace

TEST_CASE("tableau_to_path worked examples") {
    CHECK(tableau_to_path(nine_entry_example()) == LatticePath("ENENNNENN"));
    CHECK(tableau_to_path(tab({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}})) == LatticePath("EEEENNNN"));
    CHECK(tableau_to_path(tab({{{1, 2, 3}}, {{4, 5}}})) == LatticePath("EEENN"));
    CHECK_THROWS_AS(tableau_to_path(tab({{{1}}, {{2}}, {{3}}})), std::invalid_argument);
}

TEST_CASE("path_to_tableau worked examples") {
    Density rho(Shape({3, 3}), {{1, 1, 1}, {2, 2, 2}});
    CHECK(path_to_tableau(LatticePath("ENENNNENN"), rho) == nine_entry_example());
    CHECK_THROWS_WITH(path_to_tableau(LatticePath("NENNNEENN"), rho),
                      "path not weakly below P_max");
    CHECK_THROWS_AS(path_to_tableau(LatticePath("EN"), rho), std::invalid_argument);

    // the maximal staircase fills column by column
    auto t_max = path_to_tableau(LatticePath("ENNENNENN"), rho);
    CHECK(t_max == tab({{{1}, {4}, {7}}, {{2, 3}, {5, 6}, {8, 9}}}));
}

TEST_CASE("psi round trips and image characterization on one class") {
    Density rho(Shape({3, 3}), {{1, 1, 1}, {2, 2, 2}});
    auto tableaux = all_tableaux(rho);
    CHECK(tableaux.size() == 12);
    std::set<LatticePath> image;
    for (const auto& t : tableaux) {
        LatticePath p = tableau_to_path(t);
        CHECK(path_to_tableau(p, rho) == t);
        image.insert(p);
    }
    auto ideal = all_paths_below(p_max(TwoRowDensity({1, 1, 1}, {2, 2, 2})));
    CHECK(image == std::set<LatticePath>(ideal.begin(), ideal.end()));
}

TEST_CASE("zero-density cells are tolerated when unambiguous") {
    auto t = tab({{{1}, {2}}, {{3}, {}}});
    CHECK(tableau_to_path(t) == LatticePath("EEN"));
    auto ambiguous = tab({{{1}, {}}, {{}, {2}}});
    CHECK_THROWS_AS(tableau_to_path(ambiguous), std::invalid_argument);
}

TEST_CASE("density shift on the eleven-entry worked example") {
    auto before = tab({{{1, 2}, {4, 5, 7}}, {{3, 6, 8, 9}, {10, 11}}});
    auto [after, shifted] = density_shift(before);
    CHECK(shifted == 2);
    CHECK(after == tab({{{1, 2, 3, 4, 5}}, {{6, 7, 8, 9}}}));

    // the inverse with u naming the two relocated values restores the original
    auto restored = density_shift_inverse(after, 2, {1, 4}, 2, 4);
    CHECK(restored == before);
}

TEST_CASE("density shift degenerate cases") {
    // the column-ordered maximal tableau moves all of (2,1) up: i = b1, and
    // the image is again the column-ordered maximal tableau of the reduced
    // density
    auto t_max = tab({{{1}, {4}, {7}}, {{2, 3}, {5, 6}, {8, 9}}});
    auto [after, shifted] = density_shift(t_max);
    CHECK(shifted == 2);
    CHECK(after == tab({{{1, 2, 3}, {6}}, {{4, 5}, {7, 8}}}));

    // the path-minimal tableau (all first-row entries first) shifts nothing
    auto t_min = tab({{{1}, {2}, {3}}, {{4, 5}, {6, 7}, {8, 9}}});
    auto [after_min, shifted_min] = density_shift(t_min);
    CHECK(shifted_min == 0);
    CHECK(after_min == tab({{{1}, {2}}, {{3, 4, 5, 6}, {7, 8}}}));

    // empty (2,1) keeps (2,2) untouched
    auto empty_b1 = tab({{{1}, {2}}, {{}, {3, 4}}});
    auto result = density_shift(empty_b1);
    CHECK(result.shifted == 0);
    CHECK(result.tableau == tab({{{1}}, {{2, 3}}}));

    CHECK_THROWS_AS(density_shift(tab({{{1}}, {{2}}})), std::invalid_argument);
}

TEST_CASE("density shift inverse rejects bad u") {
    auto after = tab({{{1, 2, 3, 4, 5}}, {{6, 7, 8, 9}}});
    CHECK_THROWS_AS(density_shift_inverse(after, 2, {1, 5}, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(density_shift_inverse(after, 2, {1}, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(density_shift_inverse(after, 2, {1, 4}, 2, 1), std::invalid_argument);
}

TEST_CASE("density shift partitions a small class into binomial-sized classes") {
    Density rho(Shape({2, 2}), {{2, 2}, {2, 2}});
    auto tableaux = all_tableaux(rho);
    std::set<SetValuedTableau> all(tableaux.begin(), tableaux.end());
    std::set<SetValuedTableau> rebuilt;
    long long total = 0;
    for (int i = 0; i <= 2; ++i) {
        // shifted class: rows (2+i), (4-i)
        Density shifted_rho(Shape({1, 1}), {{2 + i}, {4 - i}});
        auto shifted_class = all_tableaux(shifted_rho);
        CHECK(shifted_class.size() == 1);
        std::vector<std::vector<int>> us;
        if (i == 0) us = {{}};
        if (i == 1) us = {{1}, {2}};
        if (i == 2) us = {{1, 2}, {1, 3}, {2, 3}};
        for (const auto& u : us)
            for (const auto& t_shifted : shifted_class) {
                auto t = density_shift_inverse(t_shifted, i, u, 2, 2);
                CHECK(all.count(t) == 1);
                rebuilt.insert(t);
                ++total;
            }
    }
    CHECK(rebuilt == all);
    CHECK(total == 6);
}

namespace {

RaneyTuple worked_example_tuple() {
    RaneyTuple tuple{3, 4, {}};
    tuple.blocks.push_back(tab({{{1}}, {{2, 3}}}));
    tuple.blocks.push_back(tab({{{1}, {3}}, {{2, 4}, {5, 6}}}));
    tuple.blocks.emplace_back();
    tuple.blocks.push_back(tab({{{1}, {4}}, {{2, 3}, {5, 6}}}));
    return tuple;
}

SetValuedTableau worked_example_concatenation() {
    return tab({{{1}, {2}, {6}, {8}, {14}, {17}},
                {{3, 4, 5}, {7, 9}, {10, 11}, {12, 13}, {15, 16}, {18, 19}}});
}

}  // namespace

TEST_CASE("raney concatenation reproduces the worked 19-entry example") {
    CHECK(raney_concat(worked_example_tuple()) == worked_example_concatenation());
}

TEST_CASE("raney splitting recovers the worked tuple, empty block included") {
    RaneyTuple split = raney_split(worked_example_concatenation(), 3, 4);
    RaneyTuple expected = worked_example_tuple();
    REQUIRE(split.blocks.size() == 4);
    for (int j = 0; j < 4; ++j)
        CHECK(split.blocks[static_cast<std::size_t>(j)] ==
              expected.blocks[static_cast<std::size_t>(j)]);
}

TEST_CASE("raney r=1 prepends a column whose deletion recovers the block") {
    RaneyTuple tuple{2, 1, {tab({{{1}, {3}}, {{2}, {4}}})}};
    SetValuedTableau image = raney_concat(tuple);
    CHECK(density_of(image) == Density(Shape({3, 3}), {{1, 1, 1}, {0, 1, 1}}));
    // deleting the first column and shifting x -> x-1 recovers the block
    CellGrid inner{{image.cell(0, 1), image.cell(0, 2)}, {image.cell(1, 1), image.cell(1, 2)}};
    for (auto& row : inner)
        for (auto& cell : row)
            for (int& v : cell) --v;
    CHECK(tab(inner) == tuple.blocks[0]);

    RaneyTuple back = raney_split(image, 2, 1);
    CHECK(back.blocks.size() == 1);
    CHECK(back.blocks[0] == tuple.blocks[0]);
}

TEST_CASE("raney n=0 forces a single marked column") {
    RaneyTuple tuple{3, 4, {{}, {}, {}, {}}};
    SetValuedTableau image = raney_concat(tuple);
    CHECK(image == tab({{{1}}, {{2, 3, 4}}}));
    RaneyTuple back = raney_split(image, 3, 4);
    for (const auto& block : back.blocks) CHECK(block.shape().empty());
}

TEST_CASE("raney split rejects foreign densities") {
    CHECK_THROWS_AS(raney_split(tab({{{1}, {2}}, {{3, 4}, {5, 6}}}), 3, 4),
                    std::invalid_argument);
}

TEST_CASE("raney round trip across a whole class, k=1 included") {
    for (auto [k, r, n] : {std::tuple{2, 2, 2}, {1, 3, 3}, {3, 2, 2}}) {
        std::vector<int> row2(static_cast<std::size_t>(n) + 1, k - 1);
        row2[0] = r - 1;
        Density rho(Shape({n + 1, n + 1}),
                    {std::vector<int>(static_cast<std::size_t>(n) + 1, 1), row2});
        for (const auto& t : all_tableaux(rho)) {
            RaneyTuple tuple = raney_split(t, k, r);
            CHECK(raney_concat(tuple) == t);
        }
    }
}

TEST_CASE("tennis arrangement validity") {
    TennisArrangement ok{2, {2, 2}, {1, 1}, {1, 3}};
    CHECK(is_valid_arrangement(ok));
    TennisArrangement bad{2, {2, 2}, {1, 1}, {3, 4}};  // nothing thrown in turn 1
    CHECK_FALSE(is_valid_arrangement(bad));
    TennisArrangement wrong_size{2, {2, 2}, {1, 1}, {1}};
    CHECK_FALSE(is_valid_arrangement(wrong_size));
}

TEST_CASE("lawn simulation matches the known count") {
    auto lawns = enumerate_lawn_sets({2, 2}, {1, 1});
    CHECK(lawns.size() == 5);  // all 2-subsets of [4] except {3,4}
    for (const auto& lawn : lawns) CHECK(lawn != std::vector<int>{3, 4});
}

TEST_CASE("tennis maps: worked example and distinguished lawns") {
    TennisArrangement arr{2, {2, 2}, {1, 1}, {1, 3}};
    SetValuedTableau image = tennis_to_tableau(arr);
    CHECK(image == tab({{{1}, {2}, {4}}, {{3}, {5}, {6}}}));
    CHECK(tableau_to_tennis(image, 2, 1, 2).lawn == std::vector<int>{1, 3});

    // always throw the smallest: lawn {1..nt} maps to the bottom path
    TennisArrangement smallest{2, {2, 2}, {1, 1}, {1, 2}};
    CHECK(tableau_to_path(tennis_to_tableau(smallest)) == LatticePath("EEENNN"));
    // always throw the largest: the column-ordered maximal tableau
    TennisArrangement largest{2, {2, 2}, {1, 1}, {2, 4}};
    CHECK(tennis_to_tableau(largest) == tab({{{1}, {3}, {5}}, {{2}, {4}, {6}}}));

    CHECK_THROWS_AS(tennis_to_tableau(TennisArrangement{2, {2, 2}, {1, 1}, {3, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(tableau_to_tennis(image, 3, 1, 2), std::invalid_argument);
}

TEST_CASE("tennis maps are mutually inverse over a full class") {
    const int n = 2, s = 3, t = 2;
    auto lawns = enumerate_lawn_sets({s, s}, {t, t});
    std::set<SetValuedTableau> images;
    for (const auto& lawn : lawns) {
        TennisArrangement arr{n, {s, s}, {t, t}, lawn};
        auto image = tennis_to_tableau(arr);
        CHECK(tableau_to_tennis(image, s, t, n).lawn == lawn);
        images.insert(image);
    }
    Density rho(Shape({3, 3}), {{2, 2, 2}, {1, 1, 1}});
    auto tableaux = all_tableaux(rho);
    CHECK(images == std::set<SetValuedTableau>(tableaux.begin(), tableaux.end()));
}
