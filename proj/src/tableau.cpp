#include "svt/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace svt {

namespace {

void check_cell_canonical(const std::vector<int>& cell) {
    for (std::size_t x = 0; x < cell.size(); ++x) {
        if (cell[x] < 1)
            throw std::invalid_argument("tableau entries must be positive integers");
        if (x > 0 && cell[x] <= cell[x - 1])
            throw std::invalid_argument("cell entries must be strictly increasing");
    }
}

}  // namespace

SetValuedTableau::SetValuedTableau(Shape shape, CellGrid cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
    if (static_cast<int>(cells_.size()) != shape_.num_rows())
        throw std::invalid_argument("tableau grid does not match shape");
    for (int i = 0; i < shape_.num_rows(); ++i) {
        auto& row = cells_[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != shape_.row_length(i))
            throw std::invalid_argument("tableau grid does not match shape");
        for (auto& cell : row) {
            std::sort(cell.begin(), cell.end());
            check_cell_canonical(cell);
        }
    }
}

SetValuedTableau SetValuedTableau::from_cells(CellGrid cells) {
    std::vector<int> rows;
    rows.reserve(cells.size());
    for (const auto& row : cells) rows.push_back(static_cast<int>(row.size()));
    return SetValuedTableau(Shape(std::move(rows)), std::move(cells));
}

int SetValuedTableau::total_entries() const {
    int total = 0;
    for (const auto& row : cells_)
        for (const auto& cell : row) total += static_cast<int>(cell.size());
    return total;
}

namespace {

// Appends order violations: entries at (i,j) must all be smaller than entries
// at any nonempty cell weakly south-east of (i,j).
void collect_order_violations(const SetValuedTableau& t, std::vector<Violation>& out,
                              bool stop_at_first) {
    const Shape& sh = t.shape();
    for (int i = 0; i < sh.num_rows(); ++i) {
        for (int j = 0; j < sh.row_length(i); ++j) {
            const auto& a = t.cell(i, j);
            if (a.empty()) continue;
            for (int i2 = i; i2 < sh.num_rows(); ++i2) {
                for (int j2 = (i2 == i ? j + 1 : j); j2 < sh.row_length(i2); ++j2) {
                    const auto& b = t.cell(i2, j2);
                    if (b.empty()) continue;
                    if (a.back() >= b.front()) {
                        const char* rule = i2 == i   ? "row-standardness"
                                           : j2 == j ? "column-standardness"
                                                     : "standardness";
                        out.push_back({rule, i + 1, j + 1, i2 + 1, j2 + 1,
                                       std::string(rule) + " fails between (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                           ") and (" + std::to_string(i2 + 1) + "," +
                                           std::to_string(j2 + 1) + ")"});
                        if (stop_at_first) return;
                    }
                }
            }
        }
    }
}

void collect_partition_violation(const SetValuedTableau& t, int expected_m,
                                 std::vector<Violation>& out) {
    std::vector<int> entries;
    for (const auto& row : t.cells())
        for (const auto& cell : row) entries.insert(entries.end(), cell.begin(), cell.end());
    std::sort(entries.begin(), entries.end());
    bool ok = static_cast<int>(entries.size()) == expected_m;
    if (ok)
        for (int x = 0; x < expected_m; ++x)
            if (entries[static_cast<std::size_t>(x)] != x + 1) { ok = false; break; }
    if (!ok)
        out.push_back({"partition", -1, -1, -1, -1,
                       "entries do not partition [" + std::to_string(expected_m) + "]"});
}

}  // namespace

ValidationReport validate(const SetValuedTableau& t) {
    ValidationReport report;
    collect_partition_violation(t, t.total_entries(), report.violations);
    collect_order_violations(t, report.violations, false);
    return report;
}

ValidationReport validate(const SetValuedTableau& t, const Density& expected) {
    ValidationReport report;
    if (expected.shape() != t.shape()) {
        report.violations.push_back({"structure", -1, -1, -1, -1,
                                     "tableau shape does not match the expected density"});
        return report;
    }
    for (int i = 0; i < t.shape().num_rows(); ++i)
        for (int j = 0; j < t.shape().row_length(i); ++j)
            if (static_cast<int>(t.cell(i, j).size()) != expected.at(i, j))
                report.violations.push_back(
                    {"density", i + 1, j + 1, -1, -1,
                     "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") holds " +
                         std::to_string(t.cell(i, j).size()) + " entries, expected " +
                         std::to_string(expected.at(i, j))});
    collect_partition_violation(t, expected.total_mass(), report.violations);
    collect_order_violations(t, report.violations, false);
    return report;
}

bool is_standard(const SetValuedTableau& t) {
    std::vector<Violation> v;
    collect_partition_violation(t, t.total_entries(), v);
    if (!v.empty()) return false;
    collect_order_violations(t, v, true);
    return v.empty();
}

Density density_of(const SetValuedTableau& t) {
    std::vector<std::vector<int>> grid;
    grid.reserve(t.cells().size());
    for (const auto& row : t.cells()) {
        std::vector<int> sizes;
        sizes.reserve(row.size());
        for (const auto& cell : row) sizes.push_back(static_cast<int>(cell.size()));
        grid.push_back(std::move(sizes));
    }
    return Density(t.shape(), std::move(grid));
}

SetValuedTableau schutzenberger(const SetValuedTableau& t) {
    if (!t.shape().is_rectangular())
        throw std::invalid_argument("involution requires rectangular shape");
    const int m = t.total_entries();
    const int rows = t.num_rows();
    if (rows == 0) return t;
    const int cols = t.shape().row_length(0);
    CellGrid out(static_cast<std::size_t>(rows),
                 std::vector<std::vector<int>>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<int> cell;
            cell.reserve(t.cell(i, j).size());
            for (int x : t.cell(i, j)) cell.push_back(m + 1 - x);
            out[static_cast<std::size_t>(rows - 1 - i)][static_cast<std::size_t>(cols - 1 - j)] =
                std::move(cell);
        }
    return SetValuedTableau(t.shape(), std::move(out));
}

}  // namespace svt
