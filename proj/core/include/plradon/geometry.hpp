#pragma once

#include <array>
#include <vector>

#include "plradon/qsqrt3.hpp"

namespace plradon {

struct Point {
    QS3 x;
    QS3 y;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const QS3& s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline QS3 dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }
inline QS3 cross(const Point& p, const Point& q) { return p.x * q.y - p.y * q.x; }
inline QS3 squared_norm(const Point& p) { return dot(p, p); }

// Rotation by 2*pi/3 clockwise about the origin; closed on Q(sqrt(3))^2 and
// maps standard triangles to standard triangles of the same orientation.
Point rotate_third_cw(const Point& p);
// Mirror across the y-axis.
inline Point mirror_x(const Point& p) { return {-p.x, p.y}; }

enum class Orientation { Up, Down };

inline Orientation opposite(Orientation o) {
    return o == Orientation::Up ? Orientation::Down : Orientation::Up;
}

// Closed equilateral triangle with one horizontal edge, stored as
// (centroid, side, orientation) so that only such triangles are
// representable. Up means the horizontal edge lies below the centroid.
struct StandardTriangle {
    Point centroid;
    QS3 side;
    Orientation orient = Orientation::Up;

    // Vertex order: the two endpoints of the horizontal edge (left, right),
    // then the apex.
    std::array<Point, 3> vertices() const;
    // Same vertices in counterclockwise order, for half-plane tests.
    std::array<Point, 3> ccw_vertices() const;

    QS3 area() const;  // (sqrt(3)/4) * side^2

    bool contains(const Point& p, bool strict = false) const;

    bool operator==(const StandardTriangle& o) const {
        return centroid == o.centroid && side == o.side && orient == o.orient;
    }
};

struct SignedTriangle {
    StandardTriangle triangle;
    int weight = 1;  // +1 or -1
};

// Region represented by inclusion-exclusion over standard triangles. For the
// regions built here the signed indicator takes values in {0,1} off a null
// set; areas and profiles are insensitive to the boundary convention.
struct SignedRegion {
    std::vector<SignedTriangle> terms;

    void add(const StandardTriangle& t, int w) { terms.push_back({t, w}); }
    void append(const SignedRegion& r) {
        terms.insert(terms.end(), r.terms.begin(), r.terms.end());
    }
};

// Sum of weight * indicator over the terms, with closed-triangle membership.
int region_indicator(const SignedRegion& r, const Point& p);

QS3 region_area(const SignedRegion& r);

SignedRegion scale_about_origin(const SignedRegion& r, const QS3& factor);

// The three r-feet, formed by extending the two edges meeting at each vertex
// by r beyond it. Foot k is the one bisected by the line through the
// triangle's centroid parallel to omega_k-perp; the returned array is indexed
// by k. Feet have side r and orientation opposite to the parent.
std::array<StandardTriangle, 3> feet(const StandardTriangle& t, const QS3& r);

// Edge of a foot opposite its vertex shared with the parent.
std::array<Point, 2> outer_edge(const StandardTriangle& parent, const StandardTriangle& foot);

// The concentric triangle of side (2/7)*side whose half-side feet have outer
// edges inside the parent's edges. The orientation (opposite to the parent)
// is certified against that defining property, not assumed.
StandardTriangle inner_triangle(const StandardTriangle& t);

// t minus the interior of its inner triangle and the inner triangle's three
// half-side feet, as a signed sum: [(t,+1), (t0,-1), (foot_k,-1) x3].
SignedRegion cell(const StandardTriangle& t);

// The concentric triangle of opposite orientation and side 2*side + 3r whose
// edges contain the outer edges of the r-feet of t; the containment is
// checked exactly on construction.
StandardTriangle circumscribe(const StandardTriangle& t, const QS3& r);

// Exact squared Euclidean distance between two closed triangles; zero when
// they intersect (including shared boundary points).
QS3 min_sq_dist(const StandardTriangle& a, const StandardTriangle& b);

// Closed-set intersection test via separating axes; the candidate axes are
// the three shared edge normals of all standard triangles.
bool triangles_intersect(const StandardTriangle& a, const StandardTriangle& b);
// Open-interior overlap test (false for shared-boundary contact).
bool interiors_intersect(const StandardTriangle& a, const StandardTriangle& b);

// True when segment [p,q] lies inside segment [a,b] (collinear containment).
bool segment_contains(const Point& a, const Point& b, const Point& p, const Point& q);

}  // namespace plradon
