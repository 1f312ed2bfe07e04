#ifndef SVT_LATTICE_PATH_HPP
#define SVT_LATTICE_PATH_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "svt/count.hpp"
#include "svt/enumerate.hpp"

namespace svt {

/// An N-E lattice path: a finite sequence over East (1,0) and North (0,1)
/// steps, stored as a string over {'E','N'}.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::string steps);  // throws on characters other than E/N

    const std::string& steps() const { return steps_; }
    int east_count() const { return east_; }
    int north_count() const { return north_; }
    std::pair<int, int> path_shape() const { return {east_, north_}; }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    bool operator<(const LatticePath& other) const { return steps_ < other.steps_; }

private:
    std::string steps_;
    int east_ = 0;
    int north_ = 0;
};

/// True iff p1 lies weakly below p2: for every k, the height at which p1
/// takes its k-th East step is at most the height at which p2 does.
/// Throws if the paths have different shapes.
bool path_leq(const LatticePath& p1, const LatticePath& p2);

/// The maximal path E^{a_1} N^{b_1} E^{a_2} N^{b_2} ... of a two-row density.
/// Throws if some j has b_j = 0 and a_{j+1} = 0 (the column boundary would be
/// unrecoverable from the path).
LatticePath p_max(const TwoRowDensity& rho);

/// All paths of the same shape lying weakly below p, in lexicographic order
/// of the step strings with E < N.  Return false from the callback to stop.
bool paths_below(const LatticePath& p,
                 const std::function<bool(const LatticePath&)>& visit);

std::vector<LatticePath> all_paths_below(const LatticePath& p);

/// Size of the order ideal below p, by the usual lattice-point dynamic
/// program in O(east * north) additions.
Count count_paths_below(const LatticePath& p);

}  // namespace svt

#endif
