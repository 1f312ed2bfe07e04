#include "svt/count.hpp"

#include <stdexcept>

namespace svt {

Count binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;  // covers the binomial(-1, 0) = 1 convention
    if (n < k) return 0;
    if (n - k < k) k = n - k;
    Count result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step
    }
    return result;
}

Count exact_div(const Count& numerator, const Count& denominator) {
    if (denominator == 0) throw std::logic_error("exact_div: division by zero");
    Count q = numerator / denominator;
    if (q * denominator != numerator)
        throw std::logic_error("exact_div: division is not exact");
    return q;
}

}  // namespace svt
