#pragma once

#include <array>
#include <vector>

#include "plradon/direction.hpp"
#include "plradon/geometry.hpp"
#include "plradon/piecewise_linear.hpp"

namespace plradon {

// Breakpoint merge tolerance for float-mode profiles, in units of the base
// side length. Distinct breakpoints of the constructions swept here stay
// several orders of magnitude further apart.
inline constexpr double kFloatMergeEps = 1e-9;

// Float shadow of a signed triangle: vertices, area and side as binary64.
struct ShadowTriangle {
    std::array<std::array<double, 2>, 3> v;
    double area;
    double side;
    int weight;
};

std::vector<ShadowTriangle> shadow_region(const SignedRegion& r);
ShadowTriangle shadow_triangle(const StandardTriangle& t, int weight);

// Exact profile t -> H^1(E ∩ {<x, omega> = t}) of a single triangle. Away
// from the six edge normals this is a hat; at an edge normal it has a single
// jump of height equal to the side length.
PLFunction<QS3> triangle_profile_exact(const StandardTriangle& t, SpecialDir d);
PLFunction<double> triangle_profile_float(const StandardTriangle& t, const Direction& d);

// Signed sum of the per-triangle profiles. Jumps that cancel exactly are
// removed, which is what makes the edge-normal cancellation of the recursive
// construction an assertable fact rather than a numerical accident.
PLFunction<QS3> region_profile_exact(const SignedRegion& r, SpecialDir d);
PLFunction<double> region_profile_float(const SignedRegion& r, const Direction& d);
PLFunction<double> region_profile_float(const std::vector<ShadowTriangle>& shadows,
                                         const Direction& d);

}  // namespace plradon
