#include "svt/enumerate.hpp"

#include <numeric>
#include <stdexcept>

namespace svt {

TwoRowDensity::TwoRowDensity(std::vector<int> a, std::vector<int> b)
    : top(std::move(a)), bottom(std::move(b)), n2(static_cast<int>(bottom.size())) {
    if (n2 > columns())
        throw std::invalid_argument("second row may not be longer than the first");
    for (int v : top)
        if (v < 0) throw std::invalid_argument("densities must be non-negative");
    for (int v : bottom)
        if (v < 0) throw std::invalid_argument("densities must be non-negative");
    bottom.resize(top.size(), 0);
}

int TwoRowDensity::total_mass() const {
    return std::accumulate(top.begin(), top.end(), 0) +
           std::accumulate(bottom.begin(), bottom.end(), 0);
}

TwoRowDensity TwoRowDensity::from_density(const Density& rho) {
    const int rows = rho.shape().num_rows();
    if (rows > 2)
        throw std::invalid_argument("operation requires a shape with at most two rows");
    std::vector<int> a = rows >= 1 ? rho.cells()[0] : std::vector<int>{};
    std::vector<int> b = rows == 2 ? rho.cells()[1] : std::vector<int>{};
    return TwoRowDensity(std::move(a), std::move(b));
}

Count count_shift_recursion(const TwoRowDensity& d) {
    const int n1 = d.columns();
    if (n1 <= 1) return 1;  // a single column admits exactly one filling
    Count total = 0;
    const int a2 = d.top[1];
    for (int i = 0; i <= d.bottom[0]; ++i) {
        Count weight = binomial(a2 + i - 1, i);
        if (weight == 0) continue;
        TwoRowDensity shifted;
        shifted.top.assign(d.top.begin() + 1, d.top.end());
        shifted.bottom.assign(d.bottom.begin() + 1, d.bottom.end());
        shifted.bottom[0] += d.bottom[0] - i;
        shifted.n2 = static_cast<int>(shifted.bottom.size());
        total += weight * count_shift_recursion(shifted);
    }
    return total;
}

Count count_closed_form(const TwoRowDensity& d) {
    const int n1 = d.columns();
    if (n1 <= 1) return 1;
    // dp[s] = total weight of tuple prefixes (i_1..i_j) with i_1+...+i_j = s.
    std::vector<Count> dp{1};
    int budget = 0;
    for (int j = 1; j < n1; ++j) {
        budget += d.bottom[static_cast<std::size_t>(j - 1)];
        const int a_next = d.top[static_cast<std::size_t>(j)];
        std::vector<Count> next(static_cast<std::size_t>(budget) + 1, Count(0));
        for (int s = 0; s <= budget; ++s) {
            for (int prev = 0; prev <= s && prev < static_cast<int>(dp.size()); ++prev) {
                if (dp[static_cast<std::size_t>(prev)] == 0) continue;
                const int i = s - prev;
                Count weight = binomial(a_next + i - 1, i);
                if (weight == 0) continue;
                next[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(prev)] * weight;
            }
        }
        dp = std::move(next);
    }
    Count total = 0;
    for (const Count& v : dp) total += v;
    return total;
}

bool enumerate_dominated_tuples(std::span<const int> b_prefix,
                                const std::function<bool(const std::vector<int>&)>& visit) {
    const int len = static_cast<int>(b_prefix.size());
    std::vector<int> tuple(static_cast<std::size_t>(len), 0);
    bool stopped = false;

    auto rec = [&](auto&& self, int pos, int used, int budget) -> void {
        if (stopped) return;
        if (pos == len) {
            if (!visit(tuple)) stopped = true;
            return;
        }
        const int limit = budget + b_prefix[static_cast<std::size_t>(pos)] - used;
        for (int i = 0; i <= limit && !stopped; ++i) {
            tuple[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, used + i, budget + b_prefix[static_cast<std::size_t>(pos)]);
        }
        tuple[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, 0, 0);
    return !stopped;
}

std::vector<std::vector<int>> dominated_tuples(std::span<const int> b_prefix) {
    std::vector<std::vector<int>> out;
    enumerate_dominated_tuples(b_prefix, [&](const std::vector<int>& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace svt
