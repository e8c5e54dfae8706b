#include "plradon/geometry.hpp"

#include <stdexcept>

namespace plradon {

namespace {

const Rat kHalf(1, 2);
const Rat kSixth(1, 6);
const Rat kThird(1, 3);

// omega_k-perp for k = 0, 1, 2 (omega_k rotated pi/2 clockwise):
// (0,-1), (sqrt(3)/2, -1/2), (sqrt(3)/2, 1/2).
Point omega_perp_axis(int k) {
    switch (k) {
        case 0: return {QS3(0), QS3(-1)};
        case 1: return {QS3(Rat(0), kHalf), QS3(Rat(-1, 2))};
        case 2: return {QS3(Rat(0), kHalf), QS3(Rat(1, 2))};
        default: throw std::invalid_argument("omega_perp_axis: k out of range");
    }
}

QS3 point_segment_sq_dist(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const QS3 len2 = squared_norm(ab);
    if (len2.is_zero()) return squared_norm(p - a);
    QS3 t = dot(p - a, ab) / len2;
    if (t.sign() < 0) t = QS3(0);
    if ((t - QS3(1)).sign() > 0) t = QS3(1);
    const Point foot{a.x + ab.x * t, a.y + ab.y * t};
    return squared_norm(p - foot);
}

struct AxisInterval {
    QS3 lo, hi;
};

AxisInterval project_onto(const StandardTriangle& t, const Point& axis) {
    const auto vs = t.vertices();
    AxisInterval iv{dot(vs[0], axis), dot(vs[0], axis)};
    for (int i = 1; i < 3; ++i) {
        const QS3 p = dot(vs[i], axis);
        if (p < iv.lo) iv.lo = p;
        if (p > iv.hi) iv.hi = p;
    }
    return iv;
}

}  // namespace

Point rotate_third_cw(const Point& p) {
    const QS3 c(Rat(-1, 2));
    const QS3 s(Rat(0), Rat(1, 2));  // sqrt(3)/2
    return {p.x * c + p.y * s, p.x * (-s) + p.y * c};
}

std::array<Point, 3> StandardTriangle::vertices() const {
    const QS3 half = side * QS3(kHalf);
    const QS3 h_edge = side * QS3(Rat(0), kSixth);   // side * sqrt(3)/6
    const QS3 h_apex = side * QS3(Rat(0), kThird);   // side * sqrt(3)/3
    if (orient == Orientation::Up) {
        return {Point{centroid.x - half, centroid.y - h_edge},
                Point{centroid.x + half, centroid.y - h_edge},
                Point{centroid.x, centroid.y + h_apex}};
    }
    return {Point{centroid.x - half, centroid.y + h_edge},
            Point{centroid.x + half, centroid.y + h_edge},
            Point{centroid.x, centroid.y - h_apex}};
}

std::array<Point, 3> StandardTriangle::ccw_vertices() const {
    const auto vs = vertices();
    if (orient == Orientation::Up) return vs;
    return {vs[0], vs[2], vs[1]};
}

QS3 StandardTriangle::area() const { return side * side * QS3(Rat(0), Rat(1, 4)); }

bool StandardTriangle::contains(const Point& p, bool strict) const {
    const auto vs = ccw_vertices();
    for (int i = 0; i < 3; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % 3];
        const int s = cross(b - a, p - a).sign();
        if (strict ? s <= 0 : s < 0) return false;
    }
    return true;
}

int region_indicator(const SignedRegion& r, const Point& p) {
    int v = 0;
    for (const auto& st : r.terms)
        if (st.triangle.contains(p)) v += st.weight;
    return v;
}

QS3 region_area(const SignedRegion& r) {
    QS3 a(0);
    for (const auto& st : r.terms) a += st.triangle.area() * QS3(Rat(st.weight, 1));
    return a;
}

SignedRegion scale_about_origin(const SignedRegion& r, const QS3& factor) {
    if (factor.sign() <= 0) throw std::invalid_argument("scale_about_origin: factor must be positive");
    SignedRegion out;
    out.terms.reserve(r.terms.size());
    for (const auto& st : r.terms) {
        out.add({st.triangle.centroid * factor, st.triangle.side * factor, st.triangle.orient},
                st.weight);
    }
    return out;
}

std::array<StandardTriangle, 3> feet(const StandardTriangle& t, const QS3& r) {
    if (r.sign() <= 0) throw std::invalid_argument("feet: r must be positive");
    const auto vs = t.vertices();
    const QS3 ratio = r / t.side;
    std::array<StandardTriangle, 3> out;
    std::array<bool, 3> filled{false, false, false};
    for (const auto& v : vs) {
        const Point dir = v - t.centroid;
        int k = -1;
        for (int j = 0; j < 3; ++j) {
            if (cross(dir, omega_perp_axis(j)).is_zero()) {
                k = j;
                break;
            }
        }
        if (k < 0 || filled[k]) throw std::logic_error("feet: vertex axis labeling failed");
        filled[k] = true;
        const Point fc{v.x + dir.x * ratio, v.y + dir.y * ratio};
        out[k] = StandardTriangle{fc, r, opposite(t.orient)};
    }
    return out;
}

std::array<Point, 2> outer_edge(const StandardTriangle& parent, const StandardTriangle& foot) {
    const auto pv = parent.vertices();
    const auto fv = foot.vertices();
    for (int i = 0; i < 3; ++i) {
        for (const auto& p : pv) {
            if (fv[i] == p) return {fv[(i + 1) % 3], fv[(i + 2) % 3]};
        }
    }
    throw std::invalid_argument("outer_edge: triangles share no vertex");
}

bool segment_contains(const Point& a, const Point& b, const Point& p, const Point& q) {
    const Point ab = b - a;
    if (!cross(ab, p - a).is_zero() || !cross(ab, q - a).is_zero()) return false;
    const QS3 len2 = squared_norm(ab);
    for (const Point& e : {p, q}) {
        const QS3 s = dot(e - a, ab);
        if (s.sign() < 0 || s > len2) return false;
    }
    return true;
}

namespace {

// Checks the defining property of both inner_triangle and circumscribe: every
// outer edge of the given feet lies inside an edge of `frame`.
bool outer_edges_in_frame(const StandardTriangle& parent,
                          const std::array<StandardTriangle, 3>& the_feet,
                          const StandardTriangle& frame) {
    const auto fr = frame.vertices();
    for (const auto& foot : the_feet) {
        const auto oe = outer_edge(parent, foot);
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i) {
            found = segment_contains(fr[i], fr[(i + 1) % 3], oe[0], oe[1]);
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

StandardTriangle inner_triangle(const StandardTriangle& t) {
    const StandardTriangle t0{t.centroid, t.side * QS3(Rat(2, 7)), opposite(t.orient)};
    const QS3 half_side = t0.side * QS3(kHalf);
    if (!outer_edges_in_frame(t0, feet(t0, half_side), t))
        throw std::logic_error("inner_triangle: defining containment property violated");
    return t0;
}

SignedRegion cell(const StandardTriangle& t) {
    const StandardTriangle t0 = inner_triangle(t);
    SignedRegion r;
    r.add(t, +1);
    r.add(t0, -1);
    for (const auto& f : feet(t0, t0.side * QS3(kHalf))) r.add(f, -1);
    return r;
}

StandardTriangle circumscribe(const StandardTriangle& t, const QS3& r) {
    if (r.sign() <= 0) throw std::invalid_argument("circumscribe: r must be positive");
    const StandardTriangle big{t.centroid, t.side * QS3(2) + r * QS3(3), opposite(t.orient)};
    if (!outer_edges_in_frame(t, feet(t, r), big))
        throw std::logic_error("circumscribe: outer edges not contained in result");
    return big;
}

bool triangles_intersect(const StandardTriangle& a, const StandardTriangle& b) {
    for (int k = 0; k < 3; ++k) {
        const Point axis = omega_perp_axis(k);
        const AxisInterval ia = project_onto(a, axis);
        const AxisInterval ib = project_onto(b, axis);
        if (ia.hi < ib.lo || ib.hi < ia.lo) return false;
    }
    return true;
}

bool interiors_intersect(const StandardTriangle& a, const StandardTriangle& b) {
    for (int k = 0; k < 3; ++k) {
        const Point axis = omega_perp_axis(k);
        const AxisInterval ia = project_onto(a, axis);
        const AxisInterval ib = project_onto(b, axis);
        if (ia.hi <= ib.lo || ib.hi <= ia.lo) return false;
    }
    return true;
}

QS3 min_sq_dist(const StandardTriangle& a, const StandardTriangle& b) {
    if (triangles_intersect(a, b)) return QS3(0);
    const auto va = a.vertices();
    const auto vb = b.vertices();
    QS3 best = point_segment_sq_dist(va[0], vb[0], vb[1]);
    const auto consider = [&best](const QS3& d) {
        if (d < best) best = d;
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            consider(point_segment_sq_dist(va[i], vb[j], vb[(j + 1) % 3]));
            consider(point_segment_sq_dist(vb[i], va[j], va[(j + 1) % 3]));
        }
    }
    return best;
}

}  // namespace plradon
