#include "plradon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace plradon {

namespace {

const QS3 kSqrt3 = QS3::sqrt3();

QS3 scale_pow4(int j) { return QS3(Rat::pow2(-2 * j)); }

}  // namespace

std::vector<Rat> fj_interval_endpoints(int j) {
    const Rat s = Rat::pow2(-2 * j);
    return {Rat(-1, 2), Rat(-1, 2) * s, Rat(-2, 7) * s, Rat(-3, 14) * s,
            Rat(-1, 7) * s, Rat(-1, 14) * s, Rat(0)};
}

QS3 fj_reference(int j, const QS3& t) {
    if (j < 0) throw std::invalid_argument("fj_reference: j must be >= 0");
    if (t < QS3(Rat(-1, 2)) || t > QS3(0)) throw std::domain_error("fj_reference: t outside [-1/2, 0]");
    const auto c = fj_interval_endpoints(j);
    const Rat s = Rat::pow2(-2 * j);
    if (t <= QS3(c[1])) return QS3(0);
    if (t <= QS3(c[2])) return kSqrt3 * (t + QS3(s * Rat(1, 2)));
    if (t <= QS3(c[3])) return kSqrt3 * QS3(s * Rat(3, 14));
    if (t <= QS3(c[4])) return kSqrt3 * (QS3(3) * t + QS3(s * Rat(6, 7)));
    if (t <= QS3(c[5])) return kSqrt3 * (t + QS3(s * Rat(4, 7)));
    return kSqrt3 * QS3(s * Rat(1, 2));
}

PLFunction<QS3> fj_reference_pl(int j) {
    const auto c = fj_interval_endpoints(j);
    const QS3 half_scale = QS3(Rat::pow2(-2 * j) * Rat(1, 2));
    std::vector<PLEvent<QS3>> evs;
    evs.push_back({QS3(c[1]), QS3(0), kSqrt3});
    evs.push_back({QS3(c[2]), QS3(0), -kSqrt3});
    evs.push_back({QS3(c[3]), QS3(0), kSqrt3 * QS3(3)});
    evs.push_back({QS3(c[4]), QS3(0), -kSqrt3 * QS3(2)});
    evs.push_back({QS3(c[5]), QS3(0), -kSqrt3});
    evs.push_back({QS3(0), -kSqrt3 * half_scale, QS3(0)});
    return PLFunction<QS3>::from_events(std::move(evs), QS3(0));
}

SignedRegion fj_model_region(int j) {
    const StandardTriangle base{Point{QS3(0), QS3(0)}, QS3(1), Orientation::Up};
    SignedRegion motif = cell(base);
    motif.add(feet(base, QS3(Rat(3, 7)))[0], +1);
    return scale_about_origin(motif, scale_pow4(j));
}

FjReport verify_fj(int j, int samples_per_interval) {
    FjReport rep;
    rep.j = j;
    const auto prof = region_profile_exact(fj_model_region(j), SpecialDir::Omega0);

    // The motif profile has to be continuous: it is a sum of hats.
    rep.continuous_ok = prof.jumps().empty();

    const auto c = fj_interval_endpoints(j);
    auto check_point = [&](const QS3& t) {
        const QS3 expected = fj_reference(j, t);
        const QS3 got = prof.eval_right(t);
        const QS3 got_l = prof.eval_left(t);
        if (!(expected == got) || !(expected == got_l)) {
            rep.values_ok = false;
            rep.mismatches.push_back({t.to_string(), expected.to_string(), got.to_string()});
        }
    };
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const QS3 lo(c[i]), hi(c[i + 1]);
        check_point(lo);
        for (int n = 1; n <= samples_per_interval; ++n) {
            const QS3 t = lo + (hi - lo) * QS3(Rat(n, samples_per_interval + 1));
            check_point(t);
        }
    }
    check_point(QS3(0));

    // Breakpoints inside [-1/2, 0) must be exactly the five scaled endpoints.
    std::vector<QS3> expected_bps;
    for (std::size_t i = 1; i <= 5; ++i) expected_bps.emplace_back(c[i]);
    std::vector<QS3> got_bps;
    for (const QS3& t : prof.breakpoints())
        if (QS3(Rat(-1, 2)) <= t && t < QS3(0)) got_bps.push_back(t);
    rep.breakpoints_ok = got_bps == expected_bps;
    return rep;
}

QS3 fk_tail_constant(int m) {
    // sum_{j=0}^{m} sqrt(3)*4^-j/2 = (2/sqrt(3)) * (1 - 4^-(m+1))
    return QS3(Rat(0), Rat(2, 3) * (Rat(1) - Rat::pow2(-2 * (m + 1))));
}

namespace {

PLFunction<QS3> constant_on(const QS3& value, const QS3& lo, const QS3& hi) {
    std::vector<PLEvent<QS3>> evs;
    evs.push_back({lo, value, QS3(0)});
    evs.push_back({hi, -value, QS3(0)});
    return PLFunction<QS3>::from_events(std::move(evs), QS3(0));
}

}  // namespace

FkReport verify_Fk(int k_max) {
    if (k_max < 2) throw std::invalid_argument("verify_Fk: k_max must be >= 2");
    FkReport rep;
    std::vector<PLFunction<QS3>> f;
    std::vector<PLFunction<QS3>> F;
    for (int j = 0; j <= k_max; ++j) {
        f.push_back(fj_reference_pl(j));
        F.push_back(j == 0 ? f.back() : pl_sum(F.back(), f.back(), QS3(0)));
    }
    const QS3 kBound = kSqrt3 * QS3(3);

    for (int k = 2; k <= k_max; ++k) {
        FkClauseReport cl;
        cl.k = k;
        const auto ck = fj_interval_endpoints(k);
        const auto ck1 = fj_interval_endpoints(k - 1);

        // I0_k = [-1/2, c1(k)], I1_k = [c1(k), c2(k)], I5_{k-1} = [c5(k-1), 0].
        const QS3 i0_lo(Rat(-1, 2)), i0_hi(ck[1]);
        const QS3 i1_lo(ck[1]), i1_hi(ck[2]);
        const QS3 i5_lo(ck1[5]), i5_hi(0);

        cl.restriction_ok = pl_equal_on(F[k], F[k - 1], i0_lo, i0_hi);

        const auto tail = pl_sum(f[k], constant_on(fk_tail_constant(k - 1), i5_lo, i5_hi), QS3(0));
        cl.tail_constant_ok = pl_equal_on(F[k], tail, i5_lo, i5_hi);

        // I1_k sits inside I5_{k-2}, where f_0 + .. + f_{k-2} is constant.
        const auto ck2 = fj_interval_endpoints(k - 2);
        const bool nested = QS3(ck2[5]) <= i1_lo && i1_hi <= QS3(0);
        const auto head = pl_sum(pl_sum(f[k - 1], f[k], QS3(0)),
                                 constant_on(fk_tail_constant(k - 2), i1_lo, i1_hi), QS3(0));
        cl.head_constant_ok = nested && pl_equal_on(F[k], head, i1_lo, i1_hi);

        // Exact cover: junctions agree and the ends reach -1/2 and 0.
        cl.cover_ok = (i0_hi == i1_lo) && (i1_hi == i5_lo);

        // Slope bound over [-1/2, 0]: reached exactly, never exceeded.
        QS3 max_slope(0);
        const auto& Fk = F[k];
        for (std::size_t i = 0; i + 1 < Fk.size(); ++i)
            max_slope = max(max_slope, abs(Fk.slope(i)));
        cl.slope_bound_ok = (max_slope == kBound);

        if (!cl.ok()) rep.all_ok = false;
        rep.per_k.push_back(cl);
    }
    return rep;
}

SpecialDirectionReport special_direction_check(const Truncation& tr, SpecialDir dir) {
    if (!is_edge_normal(dir))
        throw std::invalid_argument("special_direction_check: direction must be an edge normal");
    SpecialDirectionReport rep;
    rep.dir = dir;
    rep.levels = tr.levels;

    const Point u = special_unit(dir);
    const Generation& last = tr.generations.back();
    bool have_rho = false;
    for (int k = 0; k < 3; ++k) {
        const auto oe = outer_edge(last.frame, last.foot[static_cast<size_t>(k)]);
        const QS3 ta = dot(oe[0], u);
        const QS3 tb = dot(oe[1], u);
        QS3 m;
        if (ta.sign() != tb.sign() && ta.sign() * tb.sign() < 0) {
            m = QS3(0);  // the edge's projection straddles zero
        } else {
            m = min(abs(ta), abs(tb));
        }
        if (!have_rho || m < rep.rho) {
            rep.rho = m;
            have_rho = true;
        }
    }

    const auto prof = region_profile_exact(tr.region, dir);
    rep.jumps = prof.jumps();
    for (const auto& [t, h] : rep.jumps) {
        if (abs(t) < rep.rho) ++rep.interior_jump_count;
    }

    QS3 wl(0);
    for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
        const QS3& lo = prof.breakpoints()[i];
        const QS3& hi = prof.breakpoints()[i + 1];
        if (lo < rep.rho && (-rep.rho) < hi) wl = max(wl, abs(prof.slope(i)));
    }
    rep.windowed_lipschitz = wl;
    rep.ok = rep.interior_jump_count == 0;
    return rep;
}

std::vector<Direction> uniform_grid(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_grid: n must be positive");
    std::vector<Direction> grid;
    grid.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if ((12LL * i) % n == 0) {
            grid.push_back(Direction::special(special_from_thirty_deg(static_cast<int>(12LL * i / n))));
        } else {
            grid.push_back(Direction::angle(2.0 * std::numbers::pi * i / n));
        }
    }
    return grid;
}

SweepTable lip_sweep(const std::vector<Direction>& grid, int levels) {
    if (grid.empty()) throw std::invalid_argument("lip_sweep: empty grid");
    SweepTable table;
    table.levels = levels;
    const Truncation tr = build_truncation(levels);
    const auto shadows = shadow_region(tr.region);

    for (const Direction& d : grid) {
        SweepRow row;
        row.omega_rad = d.theta();
        row.special = d.is_special();
        if (d.is_special()) {
            const auto m = pl_metrics(region_profile_exact(tr.region, d.special_dir()));
            row.lip_finite = m.lipschitz_finite;
            row.lip = m.lipschitz_finite ? m.lipschitz.to_double() : 0;
            row.support = m.support_measure.to_double();
            row.sup = m.sup.to_double();
            row.integral = m.integral.to_double();
        } else {
            const auto m = pl_metrics(region_profile_float(shadows, d));
            row.lip_finite = m.lipschitz_finite;
            row.lip = m.lipschitz;
            row.support = m.support_measure;
            row.sup = m.sup;
            row.integral = m.integral;
        }
        table.max_support = std::max(table.max_support, row.support);
        table.sup_bound = std::max(table.sup_bound, row.sup);
        if (row.lip_finite) table.max_finite_lip = std::max(table.max_finite_lip, row.lip);
        table.rows.push_back(row);
    }
    return table;
}

std::vector<double> perp_refinement_max_lip(SpecialDir center, const std::vector<int>& ns,
                                            int levels) {
    if (!is_edge_normal(center))
        throw std::invalid_argument("perp_refinement_max_lip: center must be an edge normal");
    const Truncation tr = build_truncation(levels);
    const auto shadows = shadow_region(tr.region);
    const double theta0 = special_angle(center);

    std::vector<double> out;
    for (int n : ns) {
        double best = 0;
        for (double mult : {1.0, 1.25, 1.5, 1.75}) {
            for (int sgn : {-1, 1}) {
                const Direction d = Direction::angle(theta0 + sgn * mult * std::ldexp(1.0, -n));
                const auto m = pl_metrics(region_profile_float(shadows, d));
                if (m.lipschitz_finite) best = std::max(best, m.lipschitz);
            }
        }
        out.push_back(best);
    }
    return out;
}

ClaimReport claim_suite(int n_min, int n_max, int lines_per_case, std::uint64_t seed) {
    ClaimReport rep;
    for (int n = n_min; n <= n_max; ++n) {
        ClaimCase cc;
        cc.n = n;
        cc.angle_offset = 1.5 * std::ldexp(1.0, -n);  // in (2^-n, 2^-n+1]
        cc.levels = n + 4;
        cc.bound = std::max(n, 6);

        const Truncation tr = build_truncation(cc.levels);
        const Direction omega = Direction::angle(std::numbers::pi / 3 + cc.angle_offset);
        const double radius = projection_radius(tr, omega);

        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
        std::uniform_real_distribution<double> dist(-radius, radius);
        auto consider = [&](double t) {
            const int c = line_intersection_count(tr, omega, t, FootFamily::K1);
            if (c > cc.max_count) {
                cc.max_count = c;
                cc.argmax_t = t;
            }
        };
        consider(0.0);
        consider(-radius);
        consider(radius);
        for (int i = 0; i < lines_per_case; ++i) consider(dist(rng));

        cc.ok = cc.max_count <= cc.bound;
        if (!cc.ok) rep.all_ok = false;
        rep.cases.push_back(cc);
    }
    return rep;
}

}  // namespace plradon
