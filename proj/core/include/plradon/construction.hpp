#pragma once

#include <array>
#include <optional>
#include <vector>

#include "plradon/direction.hpp"
#include "plradon/geometry.hpp"

namespace plradon {

// One level of the recursion: the frame triangle of that level, its three
// feet labelled k = 0, 1, 2 by the axis that bisects them, and the foot side
// used at this level ((6/7)*2^-j for odd j, 2^-j for even j).
struct Generation {
    int level = 0;
    StandardTriangle frame;                 // T_j
    std::array<StandardTriangle, 3> foot;   // tau_{j,k}
    QS3 foot_side;
};

// Finite-level truncation of the recursive set: the base cell plus, per
// level, either the whole feet (odd levels) or the cells of the feet (even
// levels). The catalogue lists the base triangle and every foot.
struct Truncation {
    int levels = 0;
    std::vector<Generation> generations;
    SignedRegion region;
    std::vector<StandardTriangle> catalogue;

    const StandardTriangle& base() const { return catalogue.front(); }
    // tau_{j,k}; level 0 aliases the base triangle for all k.
    const StandardTriangle& foot(int level, int k) const {
        return level == 0 ? catalogue.front() : generations[static_cast<size_t>(level - 1)].foot[static_cast<size_t>(k)];
    }
};

// Builds levels 1..J starting from the unit up triangle centred at the
// origin.
Truncation build_truncation(int levels);

QS3 truncation_area(int levels);

// Closed form of the limiting area: (sqrt(3)/4) * (6/7 + 3*(36/49)*S_odd +
// 3*(6/7)*S_even) with the geometric sums over odd/even levels.
QS3 limit_area();

struct SpacingEntry {
    int level_a = 0;  // j
    int level_b = 0;  // i < j
    int k = 0;
    QS3 sq_dist;
    QS3 sq_bound;  // (2^(j-2))^2 for j >= 2, else 0
    bool ok = false;
};

struct SpacingReport {
    std::vector<SpacingEntry> entries;
    bool all_ok = true;
};

// Verifies the same-family spacing dist(tau_{j,k}, tau_{i,k}) >= 2^(j-2)
// exactly in squared form, with the base triangle standing in at level 0.
SpacingReport spacing_check(const Truncation& tr);

enum class FootFamily { All, K0, K1, K2 };

// Number of catalogue triangles met by the line {<x, omega> = t}; a family
// restriction keeps one foot family plus the base triangle.
int line_intersection_count(const Truncation& tr, const Direction& omega, double t,
                            FootFamily family);
// Exact variant for the 12 special directions.
int line_intersection_count_exact(const Truncation& tr, SpecialDir omega, const QS3& t,
                                  FootFamily family);

// Largest |<v, omega>| over catalogue vertices; bounds the t-range any line
// can meet the construction in.
double projection_radius(const Truncation& tr, const Direction& omega);

}  // namespace plradon
