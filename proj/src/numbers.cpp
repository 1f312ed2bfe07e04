#include "svt/numbers.hpp"

#include <numeric>
#include <stdexcept>

#include "svt/enumerate.hpp"

namespace svt {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

Density two_row_rect(int columns, const std::vector<int>& row1, const std::vector<int>& row2) {
    if (columns == 0) return Density(Shape(), {});
    return Density(Shape({columns, columns}), {row1, row2});
}

}  // namespace

Count catalan_k(long long n, long long k) {
    require(n >= 0 && k >= 1, "catalan_k requires n >= 0 and k >= 1");
    return exact_div(binomial(k * n + 1, n), Count(k * n + 1));
}

Count raney(long long n, long long k, long long r) {
    require(n >= 0 && k >= 1 && r >= 1, "raney requires n >= 0, k >= 1, r >= 1");
    return exact_div(Count(r) * binomial(k * n + r, n), Count(k * n + r));
}

Count raney_by_convolution(long long n, long long k, long long r) {
    require(n >= 0 && k >= 1 && r >= 1, "raney requires n >= 0, k >= 1, r >= 1");
    std::vector<Count> catalan(static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) catalan[static_cast<std::size_t>(i)] = catalan_k(i, k);
    // r-1 truncated convolutions of the k-Catalan sequence with itself.
    std::vector<Count> acc = catalan;
    for (long long step = 1; step < r; ++step) {
        std::vector<Count> next(static_cast<std::size_t>(n) + 1, Count(0));
        for (long long i = 0; i <= n; ++i)
            for (long long j = 0; i + j <= n; ++j)
                next[static_cast<std::size_t>(i + j)] +=
                    acc[static_cast<std::size_t>(i)] * catalan[static_cast<std::size_t>(j)];
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(n)];
}

Count rational_catalan(long long a, long long b) {
    require(a >= 1 && b >= 1, "rational_catalan requires positive parameters");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("parameters must be coprime");
    return exact_div(binomial(a + b, a), Count(a + b));
}

Density build_density(const FamilyParams& params) {
    return std::visit(
        [](const auto& p) -> Density {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, KCatalanParams>) {
                require(p.n >= 0 && p.k >= 1, "k-Catalan requires n >= 0 and k >= 1");
                return two_row_rect(p.n, std::vector<int>(static_cast<std::size_t>(p.n), 1),
                                    std::vector<int>(static_cast<std::size_t>(p.n), p.k - 1));
            } else if constexpr (std::is_same_v<T, RaneyParams>) {
                require(p.n >= 0 && p.k >= 1 && p.r >= 1,
                        "Raney requires n >= 0, k >= 1, r >= 1");
                std::vector<int> row2(static_cast<std::size_t>(p.n) + 1, p.k - 1);
                row2[0] = p.r - 1;
                return two_row_rect(p.n + 1,
                                    std::vector<int>(static_cast<std::size_t>(p.n) + 1, 1), row2);
            } else if constexpr (std::is_same_v<T, RationalParams>) {
                require(p.a >= 1 && p.b >= 1, "rational requires positive parameters");
                if (std::gcd(p.a, p.b) != 1)
                    throw std::invalid_argument("parameters must be coprime");
                std::vector<int> row2(static_cast<std::size_t>(p.a));
                for (int j = 1; j <= p.a; ++j)
                    row2[static_cast<std::size_t>(j - 1)] =
                        static_cast<int>((static_cast<long long>(p.b) * j) / p.a -
                                         (static_cast<long long>(p.b) * (j - 1)) / p.a);
                return two_row_rect(p.a, std::vector<int>(static_cast<std::size_t>(p.a), 1),
                                    std::move(row2));
            } else if constexpr (std::is_same_v<T, TennisParams>) {
                require(p.n >= 0 && p.t >= 1 && p.s >= p.t, "tennis requires s >= t >= 1, n >= 0");
                return two_row_rect(p.n + 1,
                                    std::vector<int>(static_cast<std::size_t>(p.n) + 1, p.t),
                                    std::vector<int>(static_cast<std::size_t>(p.n) + 1, p.s - p.t));
            } else {
                static_assert(std::is_same_v<T, TennisGeneralParams>);
                require(p.s.size() == p.t.size(), "tennis vectors must have equal length");
                const int n = static_cast<int>(p.s.size());
                for (int i = 0; i < n; ++i)
                    require(p.t[static_cast<std::size_t>(i)] >= 1 &&
                                p.t[static_cast<std::size_t>(i)] < p.s[static_cast<std::size_t>(i)],
                            "tennis requires 1 <= t_i < s_i");
                std::vector<int> row1(static_cast<std::size_t>(n) + 1, 1);
                std::vector<int> row2(static_cast<std::size_t>(n) + 1, 1);
                for (int i = 0; i < n; ++i) {
                    row1[static_cast<std::size_t>(i) + 1] = p.t[static_cast<std::size_t>(i)];
                    row2[static_cast<std::size_t>(i)] =
                        p.s[static_cast<std::size_t>(i)] - p.t[static_cast<std::size_t>(i)];
                }
                return two_row_rect(n + 1, std::move(row1), std::move(row2));
            }
        },
        params);
}

Count tennis_count(int n, int s, int t) {
    Density rho = build_density(TennisParams{n, s, t});
    return count_closed_form(TwoRowDensity::from_density(rho));
}

Count tennis_count_general(const std::vector<int>& s_vec, const std::vector<int>& t_vec) {
    Density rho = build_density(TennisGeneralParams{s_vec, t_vec});
    return count_closed_form(TwoRowDensity::from_density(rho));
}

}  // namespace svt
