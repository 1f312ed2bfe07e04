#ifndef SVT_NUMBERS_HPP
#define SVT_NUMBERS_HPP

#include <utility>
#include <variant>
#include <vector>

#include "svt/count.hpp"
#include "svt/shape.hpp"

namespace svt {

// Generalized Catalan calculators and the density builders that realize each
// family as a class of two-row set-valued tableaux.

/// C_n^k = binom(kn+1, n) / (kn+1).  Requires n >= 0, k >= 1.
Count catalan_k(long long n, long long k);

/// R_{k,r}(n) = r * binom(kn+r, n) / (kn+r).  Requires n >= 0, k >= 1, r >= 1.
Count raney(long long n, long long k, long long r);

/// R_{k,r}(n) as the r-fold convolution of the k-Catalan sequence:
/// sum over (i_1..i_r) >= 0 with i_1+...+i_r = n of C_{i_1}^k ... C_{i_r}^k.
Count raney_by_convolution(long long n, long long k, long long r);

/// C(a,b) = binom(a+b, a) / (a+b) for coprime a, b >= 1.
/// Throws std::invalid_argument("parameters must be coprime") otherwise.
Count rational_catalan(long long a, long long b);

// Family parameter records.  All densities below use the orientation with
// ones on the first row; the vertically reflected grids give the same counts
// by the rectangular involution.
struct KCatalanParams { int n; int k; };                          // shape n^2, rows 1 / (k-1)
struct RaneyParams { int n; int k; int r; };                      // shape (n+1)^2, rows 1 / (r-1, k-1, ...)
struct RationalParams { int a; int b; };                          // shape a^2, rows 1 / floor(bj/a)-floor(b(j-1)/a)
struct TennisParams { int n; int s; int t; };                     // shape (n+1)^2, rows t / (s-t)
struct TennisGeneralParams { std::vector<int> s; std::vector<int> t; };  // shape (n+1)^2

using FamilyParams = std::variant<KCatalanParams, RaneyParams, RationalParams,
                                  TennisParams, TennisGeneralParams>;

/// The density whose tableau count realizes the family; throws on invalid
/// parameters (k,r >= 1; coprime a,b; s >= t >= 1; t_i < s_i).
Density build_density(const FamilyParams& params);

/// Solution to the tennis ball problem with s balls added and t thrown per
/// turn, for n turns, computed through the two-row closed form.
Count tennis_count(int n, int s, int t);

/// Non-constant variant: s_vec[i] balls added and t_vec[i] thrown on turn i.
Count tennis_count_general(const std::vector<int>& s_vec, const std::vector<int>& t_vec);

}  // namespace svt

#endif
