#include "svt/render.hpp"

#include <algorithm>
#include <sstream>

namespace svt {

namespace {

std::string cell_text(const std::vector<int>& cell) {
    std::string out;
    for (std::size_t x = 0; x < cell.size(); ++x) {
        if (x > 0) out += ' ';
        out += std::to_string(cell[x]);
    }
    return out;
}

std::string border(const std::vector<int>& widths, int cells) {
    std::string out = "+";
    for (int j = 0; j < cells; ++j)
        out += std::string(static_cast<std::size_t>(widths[static_cast<std::size_t>(j)]) + 2, '-') + "+";
    return out;
}

}  // namespace

std::string render_tableau(const SetValuedTableau& t) {
    if (t.shape().empty()) return "(empty tableau)\n";
    const int cols = t.shape().row_length(0);
    std::vector<int> widths(static_cast<std::size_t>(cols), 1);
    for (int i = 0; i < t.num_rows(); ++i)
        for (int j = 0; j < t.shape().row_length(i); ++j)
            widths[static_cast<std::size_t>(j)] =
                std::max(widths[static_cast<std::size_t>(j)],
                         static_cast<int>(cell_text(t.cell(i, j)).size()));

    std::ostringstream out;
    for (int i = 0; i < t.num_rows(); ++i) {
        const int len = t.shape().row_length(i);
        // the border above row i also closes the (longer) row above it
        out << border(widths, i == 0 ? len : t.shape().row_length(i - 1)) << "\n|";
        for (int j = 0; j < len; ++j) {
            std::string text = cell_text(t.cell(i, j));
            text.resize(static_cast<std::size_t>(widths[static_cast<std::size_t>(j)]), ' ');
            out << ' ' << text << " |";
        }
        out << "\n";
    }
    out << border(widths, t.shape().row_length(t.num_rows() - 1)) << "\n";
    return out.str();
}

std::string render_arrangement(const TennisArrangement& a) {
    std::ostringstream out;
    out << "turns: " << a.n << "  lawn:";
    for (int v : a.lawn) out << ' ' << v;
    out << "\n";
    return out.str();
}

std::string render_raney_tuple(const RaneyTuple& t) {
    std::ostringstream out;
    out << t.r << " blocks (k=" << t.k << ")\n";
    for (std::size_t j = 0; j < t.blocks.size(); ++j) {
        out << "block " << j + 1 << ":\n";
        if (t.blocks[j].shape().empty())
            out << "(empty)\n";
        else
            out << render_tableau(t.blocks[j]);
    }
    return out.str();
}

}  // namespace svt
