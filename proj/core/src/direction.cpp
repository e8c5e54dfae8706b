#include "plradon/direction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plradon {

namespace {

constexpr double kPi = std::numbers::pi;

const QS3 kZero{Rat(0)};
const QS3 kOne{Rat(1)};
const QS3 kHalf{Rat(1, 2)};
const QS3 kRootHalf{Rat(0), Rat(1, 2)};  // sqrt(3)/2

}  // namespace

Point special_unit(SpecialDir d) {
    switch (d) {
        case SpecialDir::Omega0: return {kOne, kZero};
        case SpecialDir::Omega1: return {kHalf, kRootHalf};
        case SpecialDir::Omega2: return {-kHalf, kRootHalf};
        case SpecialDir::NegOmega0: return {-kOne, kZero};
        case SpecialDir::NegOmega1: return {-kHalf, -kRootHalf};
        case SpecialDir::NegOmega2: return {kHalf, -kRootHalf};
        case SpecialDir::Omega0Perp: return {kZero, -kOne};
        case SpecialDir::Omega1Perp: return {kRootHalf, -kHalf};
        case SpecialDir::Omega2Perp: return {kRootHalf, kHalf};
        case SpecialDir::NegOmega0Perp: return {kZero, kOne};
        case SpecialDir::NegOmega1Perp: return {-kRootHalf, kHalf};
        case SpecialDir::NegOmega2Perp: return {-kRootHalf, -kHalf};
    }
    throw std::invalid_argument("special_unit: bad direction");
}

bool is_edge_normal(SpecialDir d) {
    switch (d) {
        case SpecialDir::Omega0Perp:
        case SpecialDir::Omega1Perp:
        case SpecialDir::Omega2Perp:
        case SpecialDir::NegOmega0Perp:
        case SpecialDir::NegOmega1Perp:
        case SpecialDir::NegOmega2Perp: return true;
        default: return false;
    }
}

double special_angle(SpecialDir d) {
    switch (d) {
        case SpecialDir::Omega0: return 0.0;
        case SpecialDir::Omega1: return kPi / 3;
        case SpecialDir::Omega2: return 2 * kPi / 3;
        case SpecialDir::NegOmega0: return kPi;
        case SpecialDir::NegOmega1: return 4 * kPi / 3;
        case SpecialDir::NegOmega2: return 5 * kPi / 3;
        case SpecialDir::Omega0Perp: return 3 * kPi / 2;
        case SpecialDir::Omega1Perp: return 11 * kPi / 6;
        case SpecialDir::Omega2Perp: return kPi / 6;
        case SpecialDir::NegOmega0Perp: return kPi / 2;
        case SpecialDir::NegOmega1Perp: return 5 * kPi / 6;
        case SpecialDir::NegOmega2Perp: return 7 * kPi / 6;
    }
    throw std::invalid_argument("special_angle: bad direction");
}

std::string special_name(SpecialDir d) {
    switch (d) {
        case SpecialDir::Omega0: return "omega0";
        case SpecialDir::Omega1: return "omega1";
        case SpecialDir::Omega2: return "omega2";
        case SpecialDir::NegOmega0: return "neg-omega0";
        case SpecialDir::NegOmega1: return "neg-omega1";
        case SpecialDir::NegOmega2: return "neg-omega2";
        case SpecialDir::Omega0Perp: return "omega0-perp";
        case SpecialDir::Omega1Perp: return "omega1-perp";
        case SpecialDir::Omega2Perp: return "omega2-perp";
        case SpecialDir::NegOmega0Perp: return "neg-omega0-perp";
        case SpecialDir::NegOmega1Perp: return "neg-omega1-perp";
        case SpecialDir::NegOmega2Perp: return "neg-omega2-perp";
    }
    throw std::invalid_argument("special_name: bad direction");
}

std::optional<SpecialDir> special_from_name(const std::string& name) {
    static const SpecialDir all[] = {
        SpecialDir::Omega0, SpecialDir::Omega1, SpecialDir::Omega2,
        SpecialDir::NegOmega0, SpecialDir::NegOmega1, SpecialDir::NegOmega2,
        SpecialDir::Omega0Perp, SpecialDir::Omega1Perp, SpecialDir::Omega2Perp,
        SpecialDir::NegOmega0Perp, SpecialDir::NegOmega1Perp, SpecialDir::NegOmega2Perp,
    };
    for (SpecialDir d : all)
        if (special_name(d) == name) return d;
    return std::nullopt;
}

SpecialDir special_from_thirty_deg(int m) {
    switch (((m % 12) + 12) % 12) {
        case 0: return SpecialDir::Omega0;
        case 1: return SpecialDir::Omega2Perp;
        case 2: return SpecialDir::Omega1;
        case 3: return SpecialDir::NegOmega0Perp;
        case 4: return SpecialDir::Omega2;
        case 5: return SpecialDir::NegOmega1Perp;
        case 6: return SpecialDir::NegOmega0;
        case 7: return SpecialDir::NegOmega2Perp;
        case 8: return SpecialDir::NegOmega1;
        case 9: return SpecialDir::Omega0Perp;
        case 10: return SpecialDir::NegOmega2;
        case 11: return SpecialDir::Omega1Perp;
    }
    throw std::logic_error("special_from_thirty_deg: unreachable");
}

Direction::Direction(SpecialDir d) : special_(d), theta_(special_angle(d)) {
    const Point u = special_unit(d);
    ux_ = u.x.to_double();
    uy_ = u.y.to_double();
}

Direction::Direction(double theta) : theta_(theta), ux_(std::cos(theta)), uy_(std::sin(theta)) {}

QS3 Direction::project_exact(const Point& p) const {
    if (!is_special()) throw std::logic_error("project_exact: direction is not special");
    const Point u = special_unit(*special_);
    return dot(p, u);
}

std::string Direction::describe() const {
    if (is_special()) return special_name(*special_);
    return "theta=" + std::to_string(theta_);
}

}  // namespace plradon
