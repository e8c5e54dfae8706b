#include "plradon/profile.hpp"

#include <algorithm>
#include <cmath>

namespace plradon {

namespace {

// Emits the events of one triangle's profile given its sorted vertex
// projections. The continuous case is the hat with peak 2*area/(t3-t1) at t2
// (forced by the integral being the area); a tied pair of projections means
// an edge runs parallel to the line of integration and the profile jumps by
// the chord there, which for an equilateral triangle is the full side.
template <class T>
void emit_triangle_events(std::vector<PLEvent<T>>& evs, T t1, T t2, T t3, const T& area,
                          const T& side, int weight) {
    const T w = T(weight);
    if (t1 == t3) return;  // degenerate, impossible for a real triangle
    if (t1 == t2) {
        const T h = w * side;
        const T s = h / (t3 - t1);
        evs.push_back({t1, h, -s});
        evs.push_back({t3, T(0), s});
        return;
    }
    if (t2 == t3) {
        const T h = w * side;
        const T s = h / (t3 - t1);
        evs.push_back({t1, T(0), s});
        evs.push_back({t3, -h, -s});
        return;
    }
    const T peak = w * T(2) * area / (t3 - t1);
    const T s_up = peak / (t2 - t1);
    const T s_down = peak / (t3 - t2);
    evs.push_back({t1, T(0), s_up});
    evs.push_back({t2, T(0), -s_up - s_down});
    evs.push_back({t3, T(0), s_down});
}

template <class T, class Projector>
void emit_projected(std::vector<PLEvent<T>>& evs, const Projector& proj, const T& area,
                    const T& side, int weight) {
    std::array<T, 3> ts = proj();
    std::sort(ts.begin(), ts.end());
    emit_triangle_events(evs, ts[0], ts[1], ts[2], area, side, weight);
}

}  // namespace

ShadowTriangle shadow_triangle(const StandardTriangle& t, int weight) {
    ShadowTriangle s;
    const auto vs = t.vertices();
    for (int i = 0; i < 3; ++i) s.v[i] = {vs[i].x.to_double(), vs[i].y.to_double()};
    s.area = t.area().to_double();
    s.side = t.side.to_double();
    s.weight = weight;
    return s;
}

std::vector<ShadowTriangle> shadow_region(const SignedRegion& r) {
    std::vector<ShadowTriangle> out;
    out.reserve(r.terms.size());
    for (const auto& st : r.terms) out.push_back(shadow_triangle(st.triangle, st.weight));
    return out;
}

PLFunction<QS3> triangle_profile_exact(const StandardTriangle& t, SpecialDir d) {
    std::vector<PLEvent<QS3>> evs;
    const Point u = special_unit(d);
    const auto vs = t.vertices();
    emit_projected<QS3>(
        evs, [&] { return std::array<QS3, 3>{dot(vs[0], u), dot(vs[1], u), dot(vs[2], u)}; },
        t.area(), t.side, 1);
    return PLFunction<QS3>::from_events(std::move(evs), QS3(0));
}

PLFunction<double> triangle_profile_float(const StandardTriangle& t, const Direction& d) {
    std::vector<PLEvent<double>> evs;
    const ShadowTriangle s = shadow_triangle(t, 1);
    emit_projected<double>(
        evs,
        [&] {
            return std::array<double, 3>{d.project(s.v[0][0], s.v[0][1]),
                                         d.project(s.v[1][0], s.v[1][1]),
                                         d.project(s.v[2][0], s.v[2][1])};
        },
        s.area, s.side, 1);
    return PLFunction<double>::from_events(std::move(evs), kFloatMergeEps);
}

PLFunction<QS3> region_profile_exact(const SignedRegion& r, SpecialDir d) {
    std::vector<PLEvent<QS3>> evs;
    evs.reserve(r.terms.size() * 3);
    const Point u = special_unit(d);
    for (const auto& st : r.terms) {
        const auto vs = st.triangle.vertices();
        emit_projected<QS3>(
            evs, [&] { return std::array<QS3, 3>{dot(vs[0], u), dot(vs[1], u), dot(vs[2], u)}; },
            st.triangle.area(), st.triangle.side, st.weight);
    }
    return PLFunction<QS3>::from_events(std::move(evs), QS3(0));
}

PLFunction<double> region_profile_float(const std::vector<ShadowTriangle>& shadows,
                                        const Direction& d) {
    // Summed in value space with a balanced fold: each triangle's profile is
    // exactly zero outside its own support, so the wide gaps between distant
    // pieces cannot pick up slope round-off.
    std::vector<PLFunction<double>> parts;
    parts.reserve(shadows.size());
    for (const auto& s : shadows) {
        std::vector<PLEvent<double>> evs;
        emit_projected<double>(
            evs,
            [&] {
                return std::array<double, 3>{d.project(s.v[0][0], s.v[0][1]),
                                             d.project(s.v[1][0], s.v[1][1]),
                                             d.project(s.v[2][0], s.v[2][1])};
            },
            s.area, s.side, s.weight);
        parts.push_back(PLFunction<double>::from_events(std::move(evs), kFloatMergeEps));
    }
    return pl_sum_many(std::move(parts), kFloatMergeEps);
}

PLFunction<double> region_profile_float(const SignedRegion& r, const Direction& d) {
    return region_profile_float(shadow_region(r), d);
}

}  // namespace plradon
