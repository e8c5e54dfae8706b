#include "plradon/construction.hpp"

#include <cmath>
#include <stdexcept>

namespace plradon {

namespace {

QS3 foot_side_for_level(int j) {
    // (6/7)*2^-j for odd j, 2^-j for even j.
    const Rat scale = Rat::pow2(-j);
    return j % 2 == 1 ? QS3(Rat(6, 7) * scale) : QS3(scale);
}

bool in_family(FootFamily family, int k) {
    switch (family) {
        case FootFamily::All: return true;
        case FootFamily::K0: return k == 0;
        case FootFamily::K1: return k == 1;
        case FootFamily::K2: return k == 2;
    }
    return false;
}

}  // namespace

Truncation build_truncation(int levels) {
    if (levels < 1) throw std::invalid_argument("build_truncation: levels must be >= 1");
    Truncation tr;
    tr.levels = levels;

    StandardTriangle frame{Point{QS3(0), QS3(0)}, QS3(1), Orientation::Up};
    tr.catalogue.push_back(frame);
    tr.region = cell(frame);

    for (int j = 1; j <= levels; ++j) {
        Generation g;
        g.level = j;
        g.frame = frame;
        g.foot_side = foot_side_for_level(j);
        g.foot = feet(frame, g.foot_side);
        for (const auto& f : g.foot) {
            tr.catalogue.push_back(f);
            if (j % 2 == 1) {
                tr.region.add(f, +1);
            } else {
                tr.region.append(cell(f));
            }
        }
        frame = circumscribe(frame, g.foot_side);
        tr.generations.push_back(g);
    }
    return tr;
}

QS3 truncation_area(int levels) { return region_area(build_truncation(levels).region); }

QS3 limit_area() {
    // Sum over odd j of 4^-j is (1/4)/(1 - 1/16); over even j >= 2 it is
    // (1/16)/(1 - 1/16).
    const Rat s_odd(4, 15);
    const Rat s_even(1, 15);
    const Rat factor = Rat(6, 7) + Rat(3) * Rat(36, 49) * s_odd + Rat(3) * Rat(6, 7) * s_even;
    return QS3(Rat(0), factor * Rat(1, 4));
}

SpacingReport spacing_check(const Truncation& tr) {
    if (tr.levels < 2) throw std::invalid_argument("spacing_check: needs at least two levels");
    SpacingReport rep;
    for (int k = 0; k < 3; ++k) {
        for (int j = 2; j <= tr.levels; ++j) {
            const QS3 bound = QS3(Rat::pow2(2 * (j - 2)));
            for (int i = 0; i < j; ++i) {
                SpacingEntry e;
                e.level_a = j;
                e.level_b = i;
                e.k = k;
                e.sq_dist = min_sq_dist(tr.foot(j, k), tr.foot(i, k));
                e.sq_bound = bound;
                e.ok = e.sq_dist >= e.sq_bound;
                if (!e.ok) rep.all_ok = false;
                rep.entries.push_back(e);
            }
        }
    }
    return rep;
}

int line_intersection_count(const Truncation& tr, const Direction& omega, double t,
                            FootFamily family) {
    int count = 0;
    auto hits = [&](const StandardTriangle& tri) {
        const auto vs = tri.vertices();
        double lo = 0, hi = 0;
        for (int i = 0; i < 3; ++i) {
            const double p = omega.project(vs[i].x.to_double(), vs[i].y.to_double());
            if (i == 0) {
                lo = hi = p;
            } else {
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
        }
        return lo <= t && t <= hi;
    };
    if (hits(tr.base())) ++count;
    for (const auto& g : tr.generations)
        for (int k = 0; k < 3; ++k)
            if (in_family(family, k) && hits(g.foot[static_cast<size_t>(k)])) ++count;
    return count;
}

int line_intersection_count_exact(const Truncation& tr, SpecialDir omega, const QS3& t,
                                  FootFamily family) {
    const Point u = special_unit(omega);
    int count = 0;
    auto hits = [&](const StandardTriangle& tri) {
        const auto vs = tri.vertices();
        QS3 lo = dot(vs[0], u), hi = lo;
        for (int i = 1; i < 3; ++i) {
            const QS3 p = dot(vs[i], u);
            if (p < lo) lo = p;
            if (p > hi) hi = p;
        }
        return lo <= t && t <= hi;
    };
    if (hits(tr.base())) ++count;
    for (const auto& g : tr.generations)
        for (int k = 0; k < 3; ++k)
            if (in_family(family, k) && hits(g.foot[static_cast<size_t>(k)])) ++count;
    return count;
}

double projection_radius(const Truncation& tr, const Direction& omega) {
    double r = 0;
    for (const auto& tri : tr.catalogue) {
        for (const auto& v : tri.vertices()) {
            r = std::max(r, std::abs(omega.project(v.x.to_double(), v.y.to_double())));
        }
    }
    return r;
}

}  // namespace plradon
