#pragma once

// Test-only oracles, kept independent of the profile engine: chord lengths
// come from clipping the line against the triangle's half-planes in the line
// parameter, not from any piecewise-linear bookkeeping.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "plradon/geometry.hpp"
#include "plradon/profile.hpp"

namespace plradon::testing {

// H^1 of {x : <x, u> = t} inside the triangle with float vertices vs.
// Parameterize the line as t*u + s*u_perp and intersect the three half-plane
// constraints, each affine in s.
inline double chord_oracle(const std::array<std::array<double, 2>, 3>& v, double ux, double uy,
                           double t) {
    const double px = uy, py = -ux;  // line direction
    double s_lo = -std::numeric_limits<double>::infinity();
    double s_hi = std::numeric_limits<double>::infinity();
    // Use a consistent winding: flip if the polygon is clockwise.
    const double twice_area = (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) -
                              (v[1][1] - v[0][1]) * (v[2][0] - v[0][0]);
    const double orient = twice_area >= 0 ? 1.0 : -1.0;
    for (int i = 0; i < 3; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % 3];
        const double ex = b[0] - a[0], ey = b[1] - a[1];
        // inside: orient * cross(e, p - a) >= 0, affine in s: alpha + beta*s >= 0
        const double base_x = t * ux - a[0], base_y = t * uy - a[1];
        const double alpha = orient * (ex * base_y - ey * base_x);
        const double beta = orient * (ex * py - ey * px);
        if (std::abs(beta) < 1e-300) {
            if (alpha < 0) return 0.0;
            continue;
        }
        const double s0 = -alpha / beta;
        if (beta > 0) {
            s_lo = std::max(s_lo, s0);
        } else {
            s_hi = std::min(s_hi, s0);
        }
    }
    return std::max(0.0, s_hi - s_lo);
}

inline double chord_oracle(const ShadowTriangle& s, double ux, double uy, double t) {
    return chord_oracle(s.v, ux, uy, t);
}

// Signed-region chord: sum of weighted per-triangle chords.
inline double region_chord_oracle(const std::vector<ShadowTriangle>& shadows, double ux,
                                  double uy, double t) {
    double total = 0;
    for (const auto& s : shadows) total += s.weight * chord_oracle(s, ux, uy, t);
    return total;
}

inline Rat random_rat(std::mt19937_64& rng, long max_num = 40, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline QS3 random_qs3(std::mt19937_64& rng, long max_num = 40, long max_den = 9) {
    return QS3(random_rat(rng, max_num, max_den), random_rat(rng, max_num, max_den));
}

inline StandardTriangle random_triangle(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> side_num(1, 24);
    std::uniform_int_distribution<int> coin(0, 1);
    return StandardTriangle{Point{random_qs3(rng), random_qs3(rng)},
                            QS3(Rat(side_num(rng), 4)),
                            coin(rng) ? Orientation::Up : Orientation::Down};
}

}  // namespace plradon::testing
