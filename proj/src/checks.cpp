#include "svt/checks.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "svt/bijections.hpp"
#include "svt/enumerate.hpp"
#include "svt/generate.hpp"
#include "svt/lattice_path.hpp"
#include "svt/numbers.hpp"
#include "svt/tableau.hpp"

namespace svt {

namespace {

Density two_row_density(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty()) return Density(Shape(), {});
    if (b.empty()) return Density(Shape({static_cast<int>(a.size())}), {a});
    return Density(Shape({static_cast<int>(a.size()), static_cast<int>(b.size())}), {a, b});
}

// Every two-row density with n1 <= max_n1 columns, 1 <= n2 <= n1 real
// second-row cells, per-cell entries in 0..max_entry and total mass <= max_mass.
void sweep_two_row(int max_n1, int max_entry, int max_mass, bool positive_only,
                   const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    const int low = positive_only ? 1 : 0;
    for (int n1 = 1; n1 <= max_n1; ++n1) {
        for (int n2 = 1; n2 <= n1; ++n2) {
            const int cells = n1 + n2;
            std::vector<int> grid(static_cast<std::size_t>(cells), low);
            while (true) {
                int mass = 0;
                for (int v : grid) mass += v;
                if (mass <= max_mass) {
                    std::vector<int> a(grid.begin(), grid.begin() + n1);
                    std::vector<int> b(grid.begin() + n1, grid.end());
                    fn(a, b);
                }
                int pos = 0;
                while (pos < cells && grid[static_cast<std::size_t>(pos)] == max_entry)
                    grid[static_cast<std::size_t>(pos++)] = low;
                if (pos == cells) break;
                ++grid[static_cast<std::size_t>(pos)];
            }
        }
    }
}

std::string plural(long long n, const char* singular, const char* plural_form = nullptr) {
    if (n == 1) return std::to_string(n) + " " + singular;
    return std::to_string(n) + " " + (plural_form ? plural_form : std::string(singular) + "s");
}

CheckResult pass(const std::string& name, const std::string& detail) {
    return {name, true, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
    return {name, false, detail};
}

const CellGrid kTwoByTwoClass[6] = {
    {{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}}, {{{1, 2}, {3, 5}}, {{4, 6}, {7, 8}}},
    {{{1, 2}, {3, 6}}, {{4, 5}, {7, 8}}}, {{{1, 2}, {4, 5}}, {{3, 6}, {7, 8}}},
    {{{1, 2}, {4, 6}}, {{3, 5}, {7, 8}}}, {{{1, 2}, {5, 6}}, {{3, 4}, {7, 8}}}};

}  // namespace

VerifyBounds VerifyBounds::small() {
    VerifyBounds b;
    b.sweep_n1 = 3;
    b.sweep_entry = 2;
    b.sweep_mass = 8;
    b.psi_mass = 8;
    b.shift_mass = 8;
    b.raney_rt_mass = 8;
    b.raney_conv_n = 6;
    b.raney_conv_k = 3;
    b.raney_conv_r = 3;
    b.raney_svt_mass = 9;
    b.catalan_mass = 9;
    b.rational_sum = 8;
    b.tennis_mass = 8;
    b.tennis_identity_mass = 8;
    b.schutz_mass = 8;
    return b;
}

void VerifyBounds::cap_mass(int m) {
    for (int* bound : {&sweep_mass, &psi_mass, &shift_mass, &raney_rt_mass, &raney_svt_mass,
                       &catalan_mass, &rational_sum, &tennis_mass, &tennis_identity_mass,
                       &schutz_mass})
        *bound = std::min(*bound, m);
}

CheckResult check_reference_class() {
    const char* name = "2x2 reference class";
    Density rho(Shape({2, 2}), {{2, 2}, {2, 2}});
    auto tableaux = all_tableaux(rho);
    if (tableaux.size() != 6) return fail(name, "expected 6 tableaux, generated " +
                                                    std::to_string(tableaux.size()));
    for (int x = 0; x < 6; ++x)
        if (tableaux[static_cast<std::size_t>(x)].cells() != kTwoByTwoClass[x])
            return fail(name, "tableau " + std::to_string(x + 1) + " differs");
    for (const auto& t : tableaux)
        if (!validate(t, rho).ok()) return fail(name, "generated tableau fails validation");
    return pass(name, "all 6 tableaux of the 2x2 all-2 density reproduced in order");
}

CheckResult check_triple_agreement(const VerifyBounds& b) {
    const char* name = "triple agreement (brute = recursion = closed form)";
    long long cases = 0;
    std::string failure;
    sweep_two_row(b.sweep_n1, b.sweep_entry, b.sweep_mass, false,
                  [&](const std::vector<int>& a, const std::vector<int>& be) {
                      if (!failure.empty()) return;
                      TwoRowDensity d(a, be);
                      Count brute = count_by_generation(two_row_density(a, be));
                      Count rec = count_shift_recursion(d);
                      Count closed = count_closed_form(d);
                      if (brute != rec || brute != closed) {
                          std::ostringstream msg;
                          msg << "disagreement at a=(";
                          for (int v : a) msg << v << ",";
                          msg << ") b=(";
                          for (int v : be) msg << v << ",";
                          msg << "): brute=" << brute << " recursion=" << rec
                              << " closed=" << closed;
                          failure = msg.str();
                      }
                      ++cases;
                  });
    if (!failure.empty()) return fail(name, failure);
    return pass(name, plural(cases, "density grid") + " checked exactly (n1<=" +
                          std::to_string(b.sweep_n1) + ", entries<=" +
                          std::to_string(b.sweep_entry) + ", mass<=" +
                          std::to_string(b.sweep_mass) + ")");
}

CheckResult check_k_catalan(const VerifyBounds& b) {
    const char* name = "k-Catalan tableau counts";
    long long cases = 0;
    for (int k = 1; k <= b.catalan_mass; ++k) {
        for (int n = 0; k * n <= b.catalan_mass; ++n) {
            Count formula = catalan_k(n, k);
            Count generated = count_by_generation(build_density(KCatalanParams{n, k}));
            if (formula != generated)
                return fail(name, "mismatch at n=" + std::to_string(n) + " k=" +
                                      std::to_string(k) + ": formula " + formula.str() +
                                      " vs generation " + generated.str());
            ++cases;
        }
    }
    if (catalan_k(3, 3) != 12 || catalan_k(3, 2) != 5)
        return fail(name, "pinned values C_3^3=12, C_3^2=5 violated");
    return pass(name, plural(cases, "parameter pair") + " verified up to kn<=" +
                          std::to_string(b.catalan_mass) + ", including (3,3)->12 and (3,2)->5");
}

CheckResult check_raney_numbers(const VerifyBounds& b) {
    const char* name = "Raney three-way agreement";
    long long conv_cases = 0, svt_cases = 0, deletion_cases = 0;
    for (int k = 1; k <= b.raney_conv_k; ++k)
        for (int r = 1; r <= b.raney_conv_r; ++r)
            for (int n = 0; n <= b.raney_conv_n; ++n) {
                if (raney(n, k, r) != raney_by_convolution(n, k, r))
                    return fail(name, "closed form vs convolution mismatch at n=" +
                                          std::to_string(n) + " k=" + std::to_string(k) +
                                          " r=" + std::to_string(r));
                ++conv_cases;
            }
    for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= 4; ++r)
            for (int n = 0; k * n + r <= b.raney_svt_mass; ++n) {
                Count generated = count_by_generation(build_density(RaneyParams{n, k, r}));
                if (raney(n, k, r) != generated)
                    return fail(name, "closed form vs tableau count mismatch at n=" +
                                          std::to_string(n) + " k=" + std::to_string(k) +
                                          " r=" + std::to_string(r));
                ++svt_cases;
            }
    // r=1 and the first-column deletion: |SVT((n+1)^2, rho(k,1))| = |SVT(n^2, rho(k,k))|
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; k * n + 1 <= b.raney_svt_mass; ++n) {
            Count left = count_by_generation(build_density(RaneyParams{n, k, 1}));
            Count right = count_by_generation(build_density(RaneyParams{n - 1, k, k}));
            if (left != right)
                return fail(name, "first-column deletion identity fails at n=" +
                                      std::to_string(n) + " k=" + std::to_string(k));
            ++deletion_cases;
        }
    if (raney(2, 2, 2) != 5) return fail(name, "pinned value R_{2,2}(2)=5 violated");
    return pass(name, plural(conv_cases, "convolution case") + ", " +
                          plural(svt_cases, "tableau-count case") + ", " +
                          plural(deletion_cases, "column-deletion case") + "; R_{2,2}(2)=5");
}

CheckResult check_rational_catalan(const VerifyBounds& b) {
    const char* name = "rational Catalan tableau counts";
    long long cases = 0;
    for (int a = 1; a <= b.rational_sum - 1; ++a)
        for (int bb = 1; a + bb <= b.rational_sum; ++bb) {
            if (std::gcd(a, bb) != 1) continue;
            Count formula = rational_catalan(a, bb);
            Count generated = count_by_generation(build_density(RationalParams{a, bb}));
            if (formula != generated)
                return fail(name, "mismatch at (a,b)=(" + std::to_string(a) + "," +
                                      std::to_string(bb) + ")");
            ++cases;
        }
    if (rational_catalan(3, 5) != 7 || rational_catalan(2, 3) != 2)
        return fail(name, "pinned values C(3,5)=7, C(2,3)=2 violated");
    return pass(name, plural(cases, "coprime pair") + " verified up to a+b<=" +
                          std::to_string(b.rational_sum) + ", including (3,5)->7 and (2,3)->2");
}

namespace {

// All T_n-subsets of [S_n] meeting the cumulative feasibility condition.
std::vector<std::vector<int>> lawns_by_filter(const std::vector<int>& s_vec,
                                              const std::vector<int>& t_vec) {
    const int n = static_cast<int>(s_vec.size());
    int total_s = 0, total_t = 0;
    for (int v : s_vec) total_s += v;
    for (int v : t_vec) total_t += v;
    std::vector<std::vector<int>> out;
    std::vector<int> lawn;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(lawn.size()) == total_t) {
            TennisArrangement arr{n, s_vec, t_vec, lawn};
            if (is_valid_arrangement(arr)) out.push_back(lawn);
            return;
        }
        for (int v = next; v <= total_s; ++v) {
            lawn.push_back(v);
            self(self, v + 1);
            lawn.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

CheckResult check_tennis(const VerifyBounds& b) {
    const char* name = "tennis ball counts and maps";
    long long count_cases = 0, map_cases = 0;
    for (int s = 2; s <= 3; ++s) {
        for (int t = 1; t < s; ++t) {
            for (int n = 0; n * s <= b.tennis_mass; ++n) {
                auto simulated = enumerate_lawn_sets(std::vector<int>(static_cast<std::size_t>(n), s),
                                                     std::vector<int>(static_cast<std::size_t>(n), t));
                auto filtered = lawns_by_filter(std::vector<int>(static_cast<std::size_t>(n), s),
                                                std::vector<int>(static_cast<std::size_t>(n), t));
                if (simulated != filtered)
                    return fail(name, "cumulative characterization disagrees with simulation at (s,t,n)=(" +
                                          std::to_string(s) + "," + std::to_string(t) + "," +
                                          std::to_string(n) + ")");
                Count closed = tennis_count(n, s, t);
                if (Count(simulated.size()) != closed)
                    return fail(name, "simulation count vs closed form mismatch at (s,t,n)=(" +
                                          std::to_string(s) + "," + std::to_string(t) + "," +
                                          std::to_string(n) + ")");
                Count generated = count_by_generation(build_density(TennisParams{n, s, t}));
                if (generated != closed)
                    return fail(name, "tableau generation vs closed form mismatch at (s,t,n)=(" +
                                          std::to_string(s) + "," + std::to_string(t) + "," +
                                          std::to_string(n) + ")");
                ++count_cases;

                // the bijection itself, both directions, over every arrangement
                if (n >= 1 && n * s <= 10) {
                    std::set<SetValuedTableau> images;
                    for (const auto& lawn : simulated) {
                        TennisArrangement arr{n, std::vector<int>(static_cast<std::size_t>(n), s),
                                              std::vector<int>(static_cast<std::size_t>(n), t), lawn};
                        SetValuedTableau image = tennis_to_tableau(arr);
                        TennisArrangement back = tableau_to_tennis(image, s, t, n);
                        if (back.lawn != lawn)
                            return fail(name, "tennis round trip failed at (s,t,n)=(" +
                                                  std::to_string(s) + "," + std::to_string(t) + "," +
                                                  std::to_string(n) + ")");
                        images.insert(image);
                        ++map_cases;
                    }
                    auto tableaux = all_tableaux(build_density(TennisParams{n, s, t}));
                    std::set<SetValuedTableau> expected(tableaux.begin(), tableaux.end());
                    if (images != expected)
                        return fail(name, "tennis image is not all of the tableau class at (s,t,n)=(" +
                                              std::to_string(s) + "," + std::to_string(t) + "," +
                                              std::to_string(n) + ")");
                }
            }
        }
    }
    if (tennis_count(2, 2, 1) != 5) return fail(name, "pinned value B_{2,1}(2)=5 violated");
    for (int s = 2; s <= 4; ++s)
        for (int n = 0; s * n <= b.tennis_identity_mass; ++n)
            if (tennis_count(n, s, 1) != catalan_k(n + 1, s))
                return fail(name, "B_{s,1}(n) = C_{n+1}^s fails at s=" + std::to_string(s) +
                                      " n=" + std::to_string(n));
    // non-constant turns, checked against the process simulation
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> general = {
        {{2, 3}, {1, 2}}, {{3, 2}, {2, 1}}, {{2, 2, 3}, {1, 1, 2}}};
    for (const auto& [sv, tv] : general) {
        auto simulated = enumerate_lawn_sets(sv, tv);
        Count closed = tennis_count_general(sv, tv);
        Count generated = count_by_generation(build_density(TennisGeneralParams{sv, tv}));
        if (Count(simulated.size()) != closed || generated != closed)
            return fail(name, "generalized tennis mismatch");
        ++count_cases;
    }
    return pass(name, plural(count_cases, "count case") + " and " +
                          plural(map_cases, "bijection round trip") + " verified");
}

CheckResult check_path_bijection(const VerifyBounds& b) {
    const char* name = "tableau/path bijection";
    long long densities = 0, round_trips = 0, covers = 0;
    std::string failure;
    sweep_two_row(b.sweep_n1, b.sweep_entry, b.psi_mass, true,
                  [&](const std::vector<int>& a, const std::vector<int>& be) {
                      if (!failure.empty()) return;
                      Density rho = two_row_density(a, be);
                      TwoRowDensity d(a, be);
                      auto tableaux = all_tableaux(rho);
                      std::set<LatticePath> image;
                      for (const auto& t : tableaux) {
                          LatticePath path = tableau_to_path(t);
                          if (!(path_to_tableau(path, rho) == t)) {
                              failure = "psi round trip failed";
                              return;
                          }
                          image.insert(path);
                          ++round_trips;
                      }
                      if (image.size() != tableaux.size()) {
                          failure = "psi is not injective";
                          return;
                      }
                      LatticePath pmax = p_max(d);
                      auto ideal_paths = all_paths_below(pmax);
                      std::set<LatticePath> ideal(ideal_paths.begin(), ideal_paths.end());
                      if (image != ideal) {
                          failure = "image differs from the order ideal below P_max";
                          return;
                      }
                      if (count_paths_below(pmax) != Count(tableaux.size())) {
                          failure = "path count DP disagrees with the tableau count";
                          return;
                      }
                      // single-cover downward closure: swapping one NE to EN
                      // stays in the image
                      for (const auto& t : tableaux) {
                          const std::string& steps = tableau_to_path(t).steps();
                          for (std::size_t x = 0; x + 1 < steps.size(); ++x) {
                              if (steps[x] != 'N' || steps[x + 1] != 'E') continue;
                              std::string swapped = steps;
                              swapped[x] = 'E';
                              swapped[x + 1] = 'N';
                              SetValuedTableau lower = path_to_tableau(LatticePath(swapped), rho);
                              if (!is_standard(lower)) {
                                  failure = "NE->EN cover swap left the image";
                                  return;
                              }
                              ++covers;
                          }
                      }
                      ++densities;
                  });
    if (!failure.empty()) return fail(name, failure);
    return pass(name, plural(densities, "positive density", "positive densities") + ", " +
                          plural(round_trips, "round trip") + ", " +
                          plural(covers, "cover swap") + " verified");
}

namespace {

Density shifted_density(const std::vector<int>& a, const std::vector<int>& be, int i) {
    const int n1 = static_cast<int>(a.size());
    const int n2 = static_cast<int>(be.size());
    std::vector<int> top(a.begin() + 1, a.end());
    top[0] = a[1] + i;  // structural first-cell density
    std::vector<int> bottom;
    if (n2 >= 2) {
        bottom.assign(be.begin() + 1, be.end());
        bottom[0] = be[0] + be[1] - i;
    } else if (be[0] - i > 0) {
        bottom = {be[0] - i};
    }
    (void)n1;
    return two_row_density(top, bottom);
}

void subsets_of(int universe, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == size) {
            fn(pick);
            return;
        }
        for (int v = next; v <= universe; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace

CheckResult check_density_shift(const VerifyBounds& b) {
    const char* name = "density shift partition";
    long long densities = 0, classes = 0;
    std::string failure;
    sweep_two_row(std::min(b.sweep_n1, 4), b.sweep_entry, b.shift_mass, false,
                  [&](const std::vector<int>& a, const std::vector<int>& be) {
                      // canonical shapes only: a trailing zero-density cell in
                      // row 2 is inert and cannot survive the round trip
                      if (!failure.empty() || a.size() < 2 || be.back() == 0) return;
                      Density rho = two_row_density(a, be);
                      auto tableaux = all_tableaux(rho);
                      std::set<SetValuedTableau> expected(tableaux.begin(), tableaux.end());
                      const int a1 = a[0], b1 = be[0];

                      // forward: every tableau lands in the class its shift data names
                      for (const auto& t : tableaux) {
                          auto [shifted_t, i] = density_shift(t);
                          std::vector<int> u;
                          if (t.num_rows() == 2)
                              for (int x = 0; x < i; ++x)
                                  u.push_back(t.cell(1, 0)[static_cast<std::size_t>(x)] - a1);
                          SetValuedTableau back =
                              density_shift_inverse(shifted_t, i, u, a1, b1);
                          if (!(back == t)) {
                              failure = "density shift round trip failed";
                              return;
                          }
                      }

                      // backward: the inverse classes tile the whole set
                      std::set<SetValuedTableau> rebuilt;
                      long long rebuilt_total = 0;
                      for (int i = 0; i <= b1; ++i) {
                          const int a2 = a[1];
                          Count class_count = binomial(a2 + i - 1, i);
                          if (class_count == 0) continue;
                          auto shifted_class = all_tableaux(shifted_density(a, be, i));
                          long long u_count = 0;
                          subsets_of(a2 + i - 1, i, [&](const std::vector<int>& u) {
                              ++u_count;
                              for (const auto& t_shifted : shifted_class) {
                                  SetValuedTableau t =
                                      density_shift_inverse(t_shifted, i, u, a1, b1);
                                  rebuilt.insert(t);
                                  ++rebuilt_total;
                              }
                          });
                          if (Count(u_count) != class_count) {
                              failure = "class multiplicity differs from binom(a2+i-1, i)";
                              return;
                          }
                          classes += u_count;
                      }
                      if (rebuilt != expected ||
                          rebuilt_total != static_cast<long long>(expected.size())) {
                          failure = "inverse classes do not partition the tableau set";
                          return;
                      }
                      ++densities;
                  });
    if (!failure.empty()) return fail(name, failure);
    return pass(name, plural(densities, "density", "densities") + " partitioned into " +
                          plural(classes, "class", "classes") + " exactly");
}

namespace {

SetValuedTableau block_of(const CellGrid& cells) {
    return SetValuedTableau::from_cells(cells);
}

}  // namespace

CheckResult check_raney_bijection(const VerifyBounds& b) {
    const char* name = "Raney concatenation/splitting";

    // the worked 19-entry example: k=3, r=4, blocks of sizes 1, 2, 0, 2
    RaneyTuple example{3, 4, {}};
    example.blocks.push_back(block_of({{{1}}, {{2, 3}}}));
    example.blocks.push_back(block_of({{{1}, {3}}, {{2, 4}, {5, 6}}}));
    example.blocks.emplace_back();
    example.blocks.push_back(block_of({{{1}, {4}}, {{2, 3}, {5, 6}}}));
    SetValuedTableau expected = block_of(
        {{{1}, {2}, {6}, {8}, {14}, {17}},
         {{3, 4, 5}, {7, 9}, {10, 11}, {12, 13}, {15, 16}, {18, 19}}});
    if (!(raney_concat(example) == expected))
        return fail(name, "worked concatenation example does not reproduce");
    {
        RaneyTuple split = raney_split(expected, 3, 4);
        if (split.blocks.size() != 4 || !(split.blocks[0] == example.blocks[0]) ||
            !(split.blocks[1] == example.blocks[1]) || !split.blocks[2].shape().empty() ||
            !(split.blocks[3] == example.blocks[3]))
            return fail(name, "worked splitting example does not reproduce");
    }

    long long round_trips = 0;
    for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= 4; ++r)
            for (int n = 0; k * n + r <= b.raney_rt_mass; ++n) {
                // split then concat over the whole tableau class
                auto tableaux = all_tableaux(build_density(RaneyParams{n, k, r}));
                std::set<SetValuedTableau> seen;
                for (const auto& t : tableaux) {
                    RaneyTuple tuple = raney_split(t, k, r);
                    if (tuple.total_columns() != n)
                        return fail(name, "split block sizes do not sum to n");
                    if (!(raney_concat(tuple) == t))
                        return fail(name, "split/concat round trip failed at k=" +
                                              std::to_string(k) + " r=" + std::to_string(r) +
                                              " n=" + std::to_string(n));
                    seen.insert(t);
                    ++round_trips;
                }

                // concat then split over every tuple
                std::vector<std::vector<SetValuedTableau>> blocks_by_width(
                    static_cast<std::size_t>(n) + 1);
                for (int w = 0; w <= n; ++w)
                    blocks_by_width[static_cast<std::size_t>(w)] =
                        all_tableaux(build_density(KCatalanParams{w, k}));
                std::vector<SetValuedTableau> chosen;
                long long tuple_count = 0;
                auto rec = [&](auto&& self, int part, int remaining) -> bool {
                    if (part == r) {
                        if (remaining != 0) return true;
                        RaneyTuple tuple{k, r, chosen};
                        SetValuedTableau image = raney_concat(tuple);
                        if (!seen.count(image)) return false;
                        RaneyTuple back = raney_split(image, k, r);
                        for (int j = 0; j < r; ++j)
                            if (!(back.blocks[static_cast<std::size_t>(j)] ==
                                  chosen[static_cast<std::size_t>(j)]))
                                return false;
                        ++tuple_count;
                        return true;
                    }
                    for (int w = 0; w <= remaining; ++w)
                        for (const auto& block : blocks_by_width[static_cast<std::size_t>(w)]) {
                            chosen.push_back(block);
                            bool ok = self(self, part + 1, remaining - w);
                            chosen.pop_back();
                            if (!ok) return false;
                        }
                    return true;
                };
                if (!rec(rec, 0, n))
                    return fail(name, "concat/split round trip failed at k=" + std::to_string(k) +
                                          " r=" + std::to_string(r) + " n=" + std::to_string(n));
                if (tuple_count != static_cast<long long>(tableaux.size()))
                    return fail(name, "tuple count differs from tableau count at k=" +
                                          std::to_string(k) + " r=" + std::to_string(r) +
                                          " n=" + std::to_string(n));
            }
    return pass(name, plural(round_trips, "round trip") + " plus the worked 19-entry example");
}

CheckResult check_schutzenberger(const VerifyBounds& b) {
    const char* name = "rectangular involution";
    long long densities = 0, tableaux_checked = 0;
    const std::vector<std::pair<int, int>> shapes = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2},
                                                     {2, 3}, {3, 1}, {3, 2}, {3, 3}, {2, 4},
                                                     {4, 2}};
    for (auto [rows, cols] : shapes) {
        const int cells = rows * cols;
        const int max_entry = cells <= 4 ? 3 : 2;
        std::vector<int> grid(static_cast<std::size_t>(cells), 0);
        while (true) {
            int mass = 0;
            for (int v : grid) mass += v;
            if (mass <= b.schutz_mass) {
                std::vector<std::vector<int>> rho_grid;
                for (int i = 0; i < rows; ++i)
                    rho_grid.emplace_back(grid.begin() + i * cols, grid.begin() + (i + 1) * cols);
                Density rho(Shape(std::vector<int>(static_cast<std::size_t>(rows), cols)),
                            rho_grid);
                Density reversed = reverse_density(rho);
                auto forward = all_tableaux(rho);
                if (count_by_generation(reversed) != Count(forward.size()))
                    return fail(name, "involution does not preserve counts");
                for (const auto& t : forward) {
                    SetValuedTableau image = schutzenberger(t);
                    if (!validate(image, reversed).ok())
                        return fail(name, "image fails validation against the rotated density");
                    if (!(schutzenberger(image) == t))
                        return fail(name, "double application is not the identity");
                    ++tableaux_checked;
                }
                ++densities;
            }
            std::size_t pos = 0;
            while (pos < grid.size() && grid[pos] == max_entry) grid[pos++] = 0;
            if (pos == grid.size()) break;
            ++grid[pos];
        }
    }
    return pass(name, plural(densities, "rectangular density", "rectangular densities") + ", " +
                          plural(tableaux_checked, "tableau", "tableaux") + " checked (shapes up to 3x3 and 2x4/4x2)");
}

std::vector<CheckResult> run_all_checks(const VerifyBounds& b) {
    return {check_reference_class(),  check_triple_agreement(b), check_k_catalan(b),
            check_raney_numbers(b),   check_rational_catalan(b), check_tennis(b),
            check_path_bijection(b),  check_density_shift(b),    check_raney_bijection(b),
            check_schutzenberger(b)};
}

}  // namespace svt
