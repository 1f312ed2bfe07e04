#include "svt/generate.hpp"

namespace svt {

namespace {

struct Engine {
    const Density& rho;
    const std::function<bool(const CellGrid&)>& visit;
    CellGrid cells;
    std::vector<std::vector<int>> fill;
    int total_mass;
    bool stopped = false;

    Engine(const Density& d, const std::function<bool(const CellGrid&)>& v)
        : rho(d), visit(v), total_mass(d.total_mass()) {
        const Shape& sh = rho.shape();
        cells.resize(static_cast<std::size_t>(sh.num_rows()));
        fill.resize(static_cast<std::size_t>(sh.num_rows()));
        for (int i = 0; i < sh.num_rows(); ++i) {
            cells[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(sh.row_length(i)));
            fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(sh.row_length(i)), 0);
        }
    }

    bool full(int i, int j) const {
        return fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == rho.at(i, j);
    }

    // Every cell weakly above-left of (i,j), other than (i,j) itself, is full.
    // Rows above are at least as long as row i, so all those cells exist.
    bool frontier_open(int i, int j) const {
        for (int r = 0; r <= i; ++r)
            for (int c = 0; c <= (r == i ? j - 1 : j); ++c)
                if (!full(r, c)) return false;
        return true;
    }

    void place(int t) {
        if (t > total_mass) {
            if (!visit(cells)) stopped = true;
            return;
        }
        const Shape& sh = rho.shape();
        for (int i = 0; i < sh.num_rows() && !stopped; ++i) {
            for (int j = 0; j < sh.row_length(i); ++j) {
                auto& count = fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (count == rho.at(i, j) || !frontier_open(i, j)) continue;
                cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(t);
                ++count;
                place(t + 1);
                --count;
                cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].pop_back();
                if (stopped) return;
            }
        }
    }
};

}  // namespace

bool for_each_filling(const Density& rho, const std::function<bool(const CellGrid&)>& visit) {
    Engine engine(rho, visit);
    engine.place(1);
    return !engine.stopped;
}

bool generate_all(const Density& rho, const std::function<bool(const SetValuedTableau&)>& visit) {
    return for_each_filling(rho, [&](const CellGrid& cells) {
        return visit(SetValuedTableau(rho.shape(), cells));
    });
}

std::vector<SetValuedTableau> all_tableaux(const Density& rho) {
    std::vector<SetValuedTableau> out;
    generate_all(rho, [&](const SetValuedTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

Count count_by_generation(const Density& rho) {
    unsigned long long n = 0;
    for_each_filling(rho, [&](const CellGrid&) {
        ++n;
        return true;
    });
    return Count(n);
}

}  // namespace svt
