#pragma once

#include <optional>
#include <string>

#include "plradon/geometry.hpp"

namespace plradon {

// The 12 directions whose projections stay inside Q(sqrt(3)): the edge
// directions +-omega_k = (cos k*pi/3, sin k*pi/3) and their clockwise
// perpendiculars +-omega_k-perp. Profiles in these directions are computed
// exactly; jump bookkeeping at the perpendicular six must be exact because
// the construction cancels those jumps only identically.
enum class SpecialDir {
    Omega0, Omega1, Omega2,
    NegOmega0, NegOmega1, NegOmega2,
    Omega0Perp, Omega1Perp, Omega2Perp,
    NegOmega0Perp, NegOmega1Perp, NegOmega2Perp,
};

// Exact unit vector of a special direction.
Point special_unit(SpecialDir d);
// True for the +-omega_k-perp six, where standard-triangle profiles jump.
bool is_edge_normal(SpecialDir d);
double special_angle(SpecialDir d);
std::string special_name(SpecialDir d);
std::optional<SpecialDir> special_from_name(const std::string& name);
// Special direction at angle m * 30 degrees, m = 0..11.
SpecialDir special_from_thirty_deg(int m);

// A projection direction: either one of the 12 exact ones or a generic
// binary64 angle.
class Direction {
public:
    static Direction special(SpecialDir d) { return Direction(d); }
    static Direction angle(double theta) { return Direction(theta); }

    bool is_special() const { return special_.has_value(); }
    SpecialDir special_dir() const { return *special_; }
    double theta() const { return theta_; }
    double ux() const { return ux_; }
    double uy() const { return uy_; }

    // Exact projection <p, omega>; only valid for special directions.
    QS3 project_exact(const Point& p) const;
    double project(double x, double y) const { return x * ux_ + y * uy_; }

    std::string describe() const;

private:
    explicit Direction(SpecialDir d);
    explicit Direction(double theta);

    std::optional<SpecialDir> special_;
    double theta_ = 0.0;
    double ux_ = 1.0;
    double uy_ = 0.0;
};

}  // namespace plradon
