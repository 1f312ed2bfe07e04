#ifndef SVT_COUNT_HPP
#define SVT_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace svt {

// All enumeration results are exact, arbitrary-precision and non-negative.
using Count = boost::multiprecision::cpp_int;

/// Binomial coefficient with the degenerate conventions used throughout:
/// binomial(x, 0) = 1 for every x >= -1, and binomial(n, k) = 0 when k > n >= 0.
Count binomial(long long n, long long k);

/// Integer division that insists the division is exact.
/// Throws std::logic_error otherwise; the closed forms use this so a bad
/// parameter surfaces immediately instead of silently truncating.
Count exact_div(const Count& numerator, const Count& denominator);

}  // namespace svt

#endif
