#include "svt/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace svt {

namespace {

void check_two_rows(const SetValuedTableau& t) {
    if (t.num_rows() > 2)
        throw std::invalid_argument("operation requires a shape with at most two rows");
}

void check_valid(const SetValuedTableau& t, const char* what) {
    if (!is_standard(t))
        throw std::invalid_argument(std::string(what) + ": input tableau is not standard");
}

std::vector<int> shifted_by(const std::vector<int>& values, int delta) {
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) out.push_back(v + delta);
    return out;
}

}  // namespace

LatticePath tableau_to_path(const SetValuedTableau& t) {
    check_two_rows(t);
    check_valid(t, "tableau_to_path");
    TwoRowDensity rho = TwoRowDensity::from_density(density_of(t));
    for (int j = 0; j + 1 < rho.columns(); ++j)
        if (rho.bottom[static_cast<std::size_t>(j)] == 0 &&
            rho.top[static_cast<std::size_t>(j) + 1] == 0)
            throw std::invalid_argument(
                "density has an ambiguous zero pattern (rho(2,j) = rho(1,j+1) = 0)");
    const int m = t.total_entries();
    std::string steps(static_cast<std::size_t>(m), 'E');
    if (t.num_rows() == 2)
        for (const auto& cell : t.cells()[1])
            for (int x : cell) steps[static_cast<std::size_t>(x - 1)] = 'N';
    return LatticePath(std::move(steps));
}

SetValuedTableau path_to_tableau(const LatticePath& path, const Density& rho) {
    TwoRowDensity d = TwoRowDensity::from_density(rho);
    int east = 0, north = 0;
    for (int v : d.top) east += v;
    for (int v : d.bottom) north += v;
    if (path.path_shape() != std::pair<int, int>{east, north})
        throw std::invalid_argument("path shape does not match the density");

    std::vector<int> east_steps, north_steps;
    for (std::size_t x = 0; x < path.steps().size(); ++x)
        (path.steps()[x] == 'E' ? east_steps : north_steps).push_back(static_cast<int>(x) + 1);

    CellGrid cells(static_cast<std::size_t>(rho.shape().num_rows()));
    std::size_t next_east = 0, next_north = 0;
    for (int i = 0; i < rho.shape().num_rows(); ++i) {
        auto& source = i == 0 ? east_steps : north_steps;
        auto& cursor = i == 0 ? next_east : next_north;
        for (int j = 0; j < rho.shape().row_length(i); ++j) {
            const auto width = static_cast<std::size_t>(rho.at(i, j));
            cells[static_cast<std::size_t>(i)].emplace_back(source.begin() + static_cast<long>(cursor),
                                                            source.begin() + static_cast<long>(cursor + width));
            cursor += width;
        }
    }
    SetValuedTableau t(rho.shape(), std::move(cells));
    if (!is_standard(t)) throw std::invalid_argument("path not weakly below P_max");
    return t;
}

DensityShiftResult density_shift(const SetValuedTableau& t) {
    check_two_rows(t);
    check_valid(t, "density_shift");
    const int n1 = t.num_rows() >= 1 ? t.shape().row_length(0) : 0;
    if (n1 < 2) throw std::invalid_argument("density_shift requires at least two columns");
    const int n2 = t.num_rows() == 2 ? t.shape().row_length(1) : 0;

    const std::vector<int>& first_top = t.cell(0, 0);
    const int a1 = static_cast<int>(first_top.size());
    const std::vector<int>& alpha = t.cell(0, 1);
    const std::vector<int> beta = n2 >= 1 ? t.cell(1, 0) : std::vector<int>{};

    // Entries of (2,1) below the largest entry of (1,2) move up to row 1.
    int shifted = 0;
    if (!alpha.empty())
        while (shifted < static_cast<int>(beta.size()) &&
               beta[static_cast<std::size_t>(shifted)] < alpha.back())
            ++shifted;

    std::vector<int> new_first_top(alpha);
    new_first_top.insert(new_first_top.end(), beta.begin(), beta.begin() + shifted);
    std::sort(new_first_top.begin(), new_first_top.end());
    std::vector<int> new_first_bottom(beta.begin() + shifted, beta.end());
    if (n2 >= 2) {
        const auto& old = t.cell(1, 1);
        new_first_bottom.insert(new_first_bottom.end(), old.begin(), old.end());
    }

    CellGrid cells(1);
    cells[0].push_back(shifted_by(new_first_top, -a1));
    for (int j = 2; j < n1; ++j) cells[0].push_back(shifted_by(t.cell(0, j), -a1));
    const int new_n2 = n2 >= 2 ? n2 - 1 : (new_first_bottom.empty() ? 0 : 1);
    if (new_n2 > 0) {
        cells.emplace_back();
        cells[1].push_back(shifted_by(new_first_bottom, -a1));
        for (int j = 2; j < n2; ++j) cells[1].push_back(shifted_by(t.cell(1, j), -a1));
    }
    std::vector<int> rows{n1 - 1};
    if (new_n2 > 0) rows.push_back(new_n2);
    return {SetValuedTableau(Shape(std::move(rows)), std::move(cells)), shifted};
}

SetValuedTableau density_shift_inverse(const SetValuedTableau& t_shifted, int shifted,
                                       const std::vector<int>& u, int a1, int b1) {
    check_two_rows(t_shifted);
    check_valid(t_shifted, "density_shift_inverse");
    if (shifted < 0 || b1 < shifted)
        throw std::invalid_argument("density_shift_inverse requires 0 <= shifted <= b1");
    if (static_cast<int>(u.size()) != shifted)
        throw std::invalid_argument("u must contain exactly `shifted` values");
    if (t_shifted.shape().num_rows() == 0 || t_shifted.shape().row_length(0) < 1)
        throw std::invalid_argument("density_shift_inverse requires a nonempty tableau");

    // (1,1) of a standard tableau is the initial segment {1..|cell|}, so the
    // admissible u values are exactly 1..|cell|-1.
    const std::vector<int>& head = t_shifted.cell(0, 0);
    std::set<int> picks(u.begin(), u.end());
    if (picks.size() != u.size()) throw std::invalid_argument("u must not repeat values");
    for (int v : picks)
        if (v < 1 || v >= static_cast<int>(head.size()))
            throw std::invalid_argument("u must avoid the largest entry of cell (1,1)");

    const int n2_old = t_shifted.num_rows() == 2 ? t_shifted.shape().row_length(1) : 0;
    const std::vector<int> old_bottom = n2_old >= 1 ? t_shifted.cell(1, 0) : std::vector<int>{};
    const int take = b1 - shifted;
    if (static_cast<int>(old_bottom.size()) < take)
        throw std::invalid_argument("cell (2,1) holds fewer than b1 - shifted entries");

    // The removed integers populate the bottom cell of the new first column.
    std::vector<int> removed(picks.begin(), picks.end());
    removed.insert(removed.end(), old_bottom.begin(), old_bottom.begin() + take);
    std::sort(removed.begin(), removed.end());

    std::vector<int> kept_top;
    for (int v : head)
        if (!picks.count(v)) kept_top.push_back(v);
    std::vector<int> kept_bottom(old_bottom.begin() + take, old_bottom.end());

    const int n1_old = t_shifted.shape().row_length(0);
    CellGrid cells(1);
    std::vector<int> top_left(static_cast<std::size_t>(a1));
    for (int x = 0; x < a1; ++x) top_left[static_cast<std::size_t>(x)] = x + 1;
    cells[0].push_back(std::move(top_left));
    cells[0].push_back(shifted_by(kept_top, a1));
    for (int j = 1; j < n1_old; ++j) cells[0].push_back(shifted_by(t_shifted.cell(0, j), a1));

    std::vector<std::vector<int>> second_row;
    second_row.push_back(shifted_by(removed, a1));
    if (n2_old >= 1) second_row.push_back(shifted_by(kept_bottom, a1));
    for (int j = 1; j < n2_old; ++j) second_row.push_back(shifted_by(t_shifted.cell(1, j), a1));
    // canonical shape: no trailing empty second-row cells
    while (!second_row.empty() && second_row.back().empty()) second_row.pop_back();

    std::vector<int> rows{n1_old + 1};
    if (!second_row.empty()) {
        rows.push_back(static_cast<int>(second_row.size()));
        cells.push_back(std::move(second_row));
    }
    Shape shape(std::move(rows));
    SetValuedTableau result(std::move(shape), std::move(cells));
    if (!is_standard(result))
        throw std::invalid_argument("density_shift_inverse produced a non-standard tableau");
    return result;
}

int RaneyTuple::total_columns() const {
    int total = 0;
    for (const auto& block : blocks)
        total += block.num_rows() >= 1 ? block.shape().row_length(0) : 0;
    return total;
}

void check_raney_tuple(const RaneyTuple& tuple) {
    if (tuple.k < 1 || tuple.r < 1) throw std::invalid_argument("raney tuple requires k, r >= 1");
    if (static_cast<int>(tuple.blocks.size()) != tuple.r)
        throw std::invalid_argument("raney tuple must contain exactly r blocks");
    for (const auto& block : tuple.blocks) {
        if (block.shape().empty()) continue;
        if (block.num_rows() != 2 || !block.shape().is_rectangular())
            throw std::invalid_argument("raney blocks must be square two-row tableaux");
        const int width = block.shape().row_length(0);
        Density expected(block.shape(),
                         {std::vector<int>(static_cast<std::size_t>(width), 1),
                          std::vector<int>(static_cast<std::size_t>(width), tuple.k - 1)});
        if (!validate(block, expected).ok())
            throw std::invalid_argument("raney block does not carry the 1/(k-1) row densities");
    }
}

SetValuedTableau raney_concat(const RaneyTuple& tuple) {
    check_raney_tuple(tuple);
    const int k = tuple.k, r = tuple.r;
    const int n = tuple.total_columns();

    // Walk the marked diagram left to right handing out the smallest
    // available labels; collapse is equivalent to re-chunking the second row.
    std::vector<int> row1_values;
    std::vector<int> row2_values;
    int next = 1;
    row1_values.push_back(next++);  // marked top of the first column
    for (int j = 0; j < r; ++j) {
        if (j > 0) row2_values.push_back(next++);  // marked bottom of column c_{j+1}
        const auto& block = tuple.blocks[static_cast<std::size_t>(j)];
        if (block.shape().empty()) continue;
        const int base = next;
        next += block.total_entries();
        for (const auto& cell : block.cells()[0])
            for (int x : cell) row1_values.push_back(base + x - 1);
        for (const auto& cell : block.cells()[1])
            for (int x : cell) row2_values.push_back(base + x - 1);
    }
    std::sort(row1_values.begin(), row1_values.end());
    std::sort(row2_values.begin(), row2_values.end());

    CellGrid cells(2);
    for (int v : row1_values) cells[0].push_back({v});
    std::size_t cursor = 0;
    for (int j = 0; j <= n; ++j) {
        const auto width = static_cast<std::size_t>(j == 0 ? r - 1 : k - 1);
        cells[1].emplace_back(row2_values.begin() + static_cast<long>(cursor),
                              row2_values.begin() + static_cast<long>(cursor + width));
        cursor += width;
    }
    SetValuedTableau t(Shape({n + 1, n + 1}), std::move(cells));
    if (!is_standard(t))
        throw std::logic_error("raney_concat produced a non-standard tableau");
    return t;
}

RaneyTuple raney_split(const SetValuedTableau& t, int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("raney_split requires k, r >= 1");
    check_valid(t, "raney_split");
    if (t.num_rows() != 2 || !t.shape().is_rectangular())
        throw std::invalid_argument("tableau density does not match the Raney pattern");
    const int width = t.shape().row_length(0);
    std::vector<int> row2(static_cast<std::size_t>(width), k - 1);
    row2[0] = r - 1;
    Density expected(t.shape(), {std::vector<int>(static_cast<std::size_t>(width), 1), row2});
    if (!validate(t, expected).ok())
        throw std::invalid_argument("tableau density does not match the Raney pattern");
    const int n = width - 1;
    const int m = k * n + r;

    std::vector<bool> in_row1(static_cast<std::size_t>(m) + 1, false);
    for (const auto& cell : t.cells()[0])
        for (int x : cell) in_row1[static_cast<std::size_t>(x)] = true;
    if (!in_row1[1])
        throw std::invalid_argument("tableau density does not match the Raney pattern");

    // Scan values upward.  Within a block, any prefix has at most (k-1) bottom
    // entries per top entry; a second-row value arriving when the current
    // block is complete can only be a marker, which closes the block.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups(1);
    int tops = 0, bottoms = 0;
    int markers = 0;
    for (int v = 2; v <= m; ++v) {
        if (in_row1[static_cast<std::size_t>(v)]) {
            groups.back().first.push_back(v);
            ++tops;
        } else if (bottoms == (k - 1) * tops) {
            ++markers;
            if (markers > r - 1)
                throw std::invalid_argument("tableau is not in the image of raney_concat");
            groups.emplace_back();
            tops = bottoms = 0;
        } else {
            groups.back().second.push_back(v);
            ++bottoms;
        }
    }
    if (markers != r - 1 || bottoms != (k - 1) * tops)
        throw std::invalid_argument("tableau is not in the image of raney_concat");

    RaneyTuple tuple{k, r, {}};
    for (const auto& [top_vals, bottom_vals] : groups) {
        const int blk = static_cast<int>(top_vals.size());
        if (blk == 0) {
            tuple.blocks.emplace_back();
            continue;
        }
        std::map<int, int> rank;
        {
            std::vector<int> all(top_vals);
            all.insert(all.end(), bottom_vals.begin(), bottom_vals.end());
            std::sort(all.begin(), all.end());
            for (std::size_t x = 0; x < all.size(); ++x) rank[all[x]] = static_cast<int>(x) + 1;
        }
        CellGrid cells(2);
        for (int v : top_vals) cells[0].push_back({rank[v]});
        for (int c = 0; c < blk; ++c) {
            std::vector<int> cell;
            for (int x = 0; x < k - 1; ++x)
                cell.push_back(rank[bottom_vals[static_cast<std::size_t>(c * (k - 1) + x)]]);
            cells[1].push_back(std::move(cell));
        }
        tuple.blocks.emplace_back(Shape({blk, blk}), std::move(cells));
    }
    check_raney_tuple(tuple);
    return tuple;
}

bool TennisArrangement::constant() const {
    for (int v : s_vec)
        if (v != s_vec.front()) return false;
    for (int v : t_vec)
        if (v != t_vec.front()) return false;
    return true;
}

namespace {

void check_arrangement_structure(const TennisArrangement& arr) {
    if (arr.n < 0 || static_cast<int>(arr.s_vec.size()) != arr.n ||
        static_cast<int>(arr.t_vec.size()) != arr.n)
        throw std::invalid_argument("arrangement vectors must have length n");
    for (int i = 0; i < arr.n; ++i)
        if (arr.t_vec[static_cast<std::size_t>(i)] < 1 ||
            arr.s_vec[static_cast<std::size_t>(i)] < arr.t_vec[static_cast<std::size_t>(i)])
            throw std::invalid_argument("arrangement requires s_i >= t_i >= 1");
}

}  // namespace

bool is_valid_arrangement(const TennisArrangement& arr) {
    check_arrangement_structure(arr);
    int total_s = 0, total_t = 0;
    for (int i = 0; i < arr.n; ++i) total_s += arr.s_vec[static_cast<std::size_t>(i)];
    for (int i = 0; i < arr.n; ++i) total_t += arr.t_vec[static_cast<std::size_t>(i)];
    if (static_cast<int>(arr.lawn.size()) != total_t) return false;
    std::set<int> lawn(arr.lawn.begin(), arr.lawn.end());
    if (static_cast<int>(lawn.size()) != total_t) return false;
    for (int v : lawn)
        if (v < 1 || v > total_s) return false;
    int cum_s = 0, cum_t = 0;
    for (int i = 0; i < arr.n; ++i) {
        cum_s += arr.s_vec[static_cast<std::size_t>(i)];
        cum_t += arr.t_vec[static_cast<std::size_t>(i)];
        int on_lawn = 0;
        for (int v : lawn)
            if (v <= cum_s) ++on_lawn;
        if (on_lawn < cum_t) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_lawn_sets(const std::vector<int>& s_vec,
                                                  const std::vector<int>& t_vec) {
    const int n = static_cast<int>(s_vec.size());
    if (static_cast<int>(t_vec.size()) != n)
        throw std::invalid_argument("vectors must have equal length");
    int total = 0;
    for (int v : s_vec) total += v;
    if (total > 25) throw std::invalid_argument("simulation limited to 25 balls");

    std::set<unsigned> final_pools;
    std::vector<std::set<unsigned>> seen(static_cast<std::size_t>(n) + 1);

    auto rec = [&](auto&& self, int turn, unsigned pool, int added) -> void {
        if (!seen[static_cast<std::size_t>(turn)].insert(pool).second) return;
        if (turn == n) {
            final_pools.insert(pool);
            return;
        }
        unsigned next_pool = pool;
        int next_added = added;
        for (int x = 0; x < s_vec[static_cast<std::size_t>(turn)]; ++x)
            next_pool |= 1u << next_added++;
        // throw every t-subset of the pool onto the lawn
        std::vector<int> balls;
        for (int x = 0; x < next_added; ++x)
            if (next_pool & (1u << x)) balls.push_back(x);
        const int throw_count = t_vec[static_cast<std::size_t>(turn)];
        std::vector<int> pick(static_cast<std::size_t>(throw_count));
        auto choose = [&](auto&& chooser, int from, int need) -> void {
            if (need == 0) {
                unsigned after = next_pool;
                for (int x = 0; x < throw_count; ++x)
                    after &= ~(1u << pick[static_cast<std::size_t>(x)]);
                self(self, turn + 1, after, next_added);
                return;
            }
            for (int x = from; x <= static_cast<int>(balls.size()) - need; ++x) {
                pick[static_cast<std::size_t>(throw_count - need)] = balls[static_cast<std::size_t>(x)];
                chooser(chooser, x + 1, need - 1);
            }
        };
        if (throw_count > static_cast<int>(balls.size())) return;
        choose(choose, 0, throw_count);
    };
    rec(rec, 0, 0u, 0);

    std::vector<std::vector<int>> lawns;
    for (unsigned pool : final_pools) {
        std::vector<int> lawn;
        for (int x = 0; x < total; ++x)
            if (!(pool & (1u << x))) lawn.push_back(x + 1);
        lawns.push_back(std::move(lawn));
    }
    std::sort(lawns.begin(), lawns.end());
    return lawns;
}

SetValuedTableau tennis_to_tableau(const TennisArrangement& arr) {
    check_arrangement_structure(arr);
    if (!arr.constant())
        throw std::invalid_argument("tennis_to_tableau requires constant s and t");
    if (!is_valid_arrangement(arr))
        throw std::invalid_argument("arrangement is not reachable by the throwing process");
    const int n = arr.n;
    const int s = n > 0 ? arr.s_vec[0] : 1;
    const int t = n > 0 ? arr.t_vec[0] : 1;

    std::vector<int> lawn(arr.lawn);
    std::sort(lawn.begin(), lawn.end());
    std::vector<int> rest;
    {
        std::set<int> on(lawn.begin(), lawn.end());
        for (int v = 1; v <= n * s; ++v)
            if (!on.count(v)) rest.push_back(v);
    }

    CellGrid cells(2);
    std::vector<int> head(static_cast<std::size_t>(t));
    for (int x = 0; x < t; ++x) head[static_cast<std::size_t>(x)] = x + 1;
    cells[0].push_back(std::move(head));
    for (int j = 0; j < n; ++j)
        cells[0].push_back(shifted_by(
            std::vector<int>(lawn.begin() + j * t, lawn.begin() + (j + 1) * t), t));
    for (int j = 0; j < n; ++j)
        cells[1].push_back(shifted_by(
            std::vector<int>(rest.begin() + j * (s - t), rest.begin() + (j + 1) * (s - t)), t));
    std::vector<int> tail(static_cast<std::size_t>(s - t));
    for (int x = 0; x < s - t; ++x) tail[static_cast<std::size_t>(x)] = n * s + t + 1 + x;
    cells[1].push_back(std::move(tail));

    SetValuedTableau result(Shape({n + 1, n + 1}), std::move(cells));
    if (!is_standard(result))
        throw std::logic_error("tennis_to_tableau produced a non-standard tableau");
    return result;
}

TennisArrangement tableau_to_tennis(const SetValuedTableau& t, int s, int t_throw, int n) {
    if (t_throw < 1 || s < t_throw || n < 0)
        throw std::invalid_argument("tennis requires s >= t >= 1 and n >= 0");
    check_valid(t, "tableau_to_tennis");
    if (t.num_rows() != 2 || !t.shape().is_rectangular() || t.shape().row_length(0) != n + 1)
        throw std::invalid_argument("tableau density does not match the tennis pattern");
    Density expected(t.shape(),
                     {std::vector<int>(static_cast<std::size_t>(n) + 1, t_throw),
                      std::vector<int>(static_cast<std::size_t>(n) + 1, s - t_throw)});
    if (!validate(t, expected).ok())
        throw std::invalid_argument("tableau density does not match the tennis pattern");

    std::vector<int> lawn;
    for (int j = 1; j <= n; ++j)
        for (int x : t.cell(0, j)) lawn.push_back(x - t_throw);
    TennisArrangement arr{n, std::vector<int>(static_cast<std::size_t>(n), s),
                          std::vector<int>(static_cast<std::size_t>(n), t_throw), std::move(lawn)};
    if (!is_valid_arrangement(arr))
        throw std::invalid_argument("tableau is not the image of a reachable arrangement");
    return arr;
}

}  // namespace svt
