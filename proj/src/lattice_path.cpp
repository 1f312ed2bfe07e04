#include "svt/lattice_path.hpp"

#include <stdexcept>

namespace svt {

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
    for (char c : steps_) {
        if (c == 'E')
            ++east_;
        else if (c == 'N')
            ++north_;
        else
            throw std::invalid_argument("path steps must be 'E' or 'N'");
    }
}

namespace {

// heights[k] = number of North steps taken before the (k+1)-th East step,
// for k = 0 .. east-1; heights[east] = total Norths.  Non-decreasing.
std::vector<int> east_heights(const LatticePath& p) {
    std::vector<int> heights;
    heights.reserve(static_cast<std::size_t>(p.east_count()) + 1);
    int norths = 0;
    for (char c : p.steps()) {
        if (c == 'E')
            heights.push_back(norths);
        else
            ++norths;
    }
    heights.push_back(norths);
    return heights;
}

}  // namespace

bool path_leq(const LatticePath& p1, const LatticePath& p2) {
    if (p1.path_shape() != p2.path_shape())
        throw std::invalid_argument("paths must have the same shape");
    std::vector<int> h1 = east_heights(p1);
    std::vector<int> h2 = east_heights(p2);
    for (std::size_t k = 0; k < h1.size(); ++k)
        if (h1[k] > h2[k]) return false;
    return true;
}

LatticePath p_max(const TwoRowDensity& rho) {
    const int n1 = rho.columns();
    for (int j = 0; j + 1 < n1; ++j)
        if (rho.bottom[static_cast<std::size_t>(j)] == 0 &&
            rho.top[static_cast<std::size_t>(j) + 1] == 0)
            throw std::invalid_argument(
                "density has an ambiguous zero pattern (rho(2,j) = rho(1,j+1) = 0)");
    std::string steps;
    for (int j = 0; j < n1; ++j) {
        steps.append(static_cast<std::size_t>(rho.top[static_cast<std::size_t>(j)]), 'E');
        steps.append(static_cast<std::size_t>(rho.bottom[static_cast<std::size_t>(j)]), 'N');
    }
    return LatticePath(std::move(steps));
}

bool paths_below(const LatticePath& p, const std::function<bool(const LatticePath&)>& visit) {
    const int a = p.east_count();
    const int b = p.north_count();
    std::vector<int> limit = east_heights(p);  // limit[x] caps the height at column x
    std::string steps;
    steps.reserve(static_cast<std::size_t>(a + b));
    bool stopped = false;

    auto rec = [&](auto&& self, int x, int y) -> void {
        if (stopped) return;
        if (x == a && y == b) {
            if (!visit(LatticePath(steps))) stopped = true;
            return;
        }
        if (x < a) {  // E < N, so try East first for lexicographic emission
            steps.push_back('E');
            self(self, x + 1, y);
            steps.pop_back();
            if (stopped) return;
        }
        if (y < limit[static_cast<std::size_t>(x)]) {
            steps.push_back('N');
            self(self, x, y + 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
    return !stopped;
}

std::vector<LatticePath> all_paths_below(const LatticePath& p) {
    std::vector<LatticePath> out;
    paths_below(p, [&](const LatticePath& q) {
        out.push_back(q);
        return true;
    });
    return out;
}

Count count_paths_below(const LatticePath& p) {
    const int a = p.east_count();
    const int b = p.north_count();
    std::vector<int> limit = east_heights(p);
    // dp over lattice points, column by column
    std::vector<Count> column(static_cast<std::size_t>(b) + 1, Count(0));
    column[0] = 1;
    for (int y = 1; y <= limit[0]; ++y) column[static_cast<std::size_t>(y)] = 1;
    for (int x = 1; x <= a; ++x) {
        const int cap = limit[static_cast<std::size_t>(x)];
        std::vector<Count> next(static_cast<std::size_t>(b) + 1, Count(0));
        for (int y = 0; y <= cap; ++y) {
            next[static_cast<std::size_t>(y)] = column[static_cast<std::size_t>(y)];
            if (y > 0) next[static_cast<std::size_t>(y)] += next[static_cast<std::size_t>(y) - 1];
        }
        column = std::move(next);
    }
    return column[static_cast<std::size_t>(b)];
}

}  // namespace svt
