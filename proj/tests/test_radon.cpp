#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "plradon/construction.hpp"
#include "plradon/profile.hpp"

using namespace plradon;
using plradon::testing::chord_oracle;
using plradon::testing::random_qs3;
using plradon::testing::random_triangle;
using plradon::testing::region_chord_oracle;

namespace {

std::mt19937_64 rng(0x2468ace013579bdfULL);

const Point kOrigin{QS3(0), QS3(0)};
const QS3 kR3 = QS3::sqrt3();

// Unit up triangle with its horizontal edge on y = 0, centred at x = 0.
const StandardTriangle kBaseTri{Point{QS3(0), QS3(Rat(0), Rat(1, 6))}, QS3(1), Orientation::Up};

SpecialDir random_special() {
    static const SpecialDir all[12] = {
        SpecialDir::Omega0, SpecialDir::Omega1, SpecialDir::Omega2,
        SpecialDir::NegOmega0, SpecialDir::NegOmega1, SpecialDir::NegOmega2,
        SpecialDir::Omega0Perp, SpecialDir::Omega1Perp, SpecialDir::Omega2Perp,
        SpecialDir::NegOmega0Perp, SpecialDir::NegOmega1Perp, SpecialDir::NegOmega2Perp,
    };
    std::uniform_int_distribution<int> pick(0, 11);
    return all[pick(rng)];
}

}  // namespace

TEST_CASE("exact projections at special directions") {
    const Point p{QS3(1), kR3};
    CHECK(Direction::special(SpecialDir::Omega0).project_exact(p) == QS3(1));
    // <(1, sqrt3), omega_1> = 1/2 + 3/2 = 2; closed in the field.
    CHECK(Direction::special(SpecialDir::Omega1).project_exact(p) == QS3(2));
    CHECK(Direction::special(SpecialDir::Omega0Perp).project_exact(Point{QS3(0), QS3(-1)}) ==
          QS3(1));
}

TEST_CASE("hat profile of the unit triangle at omega_0") {
    const auto prof = triangle_profile_exact(kBaseTri, SpecialDir::Omega0);
    REQUIRE(prof.size() == 3);
    CHECK(prof.breakpoints()[0] == QS3(Rat(-1, 2)));
    CHECK(prof.breakpoints()[1] == QS3(0));
    CHECK(prof.breakpoints()[2] == QS3(Rat(1, 2)));
    CHECK(prof.right_value(1) == kR3 * QS3(Rat(1, 2)));  // peak sqrt(3)/2
    CHECK(prof.slope(0) == kR3);
    CHECK(prof.slope(1) == -kR3);
    CHECK(prof.jumps().empty());

    // pl_eval: linear interpolation and zero outside the support.
    CHECK(prof.eval_right(QS3(Rat(1, 4))) == kR3 * QS3(Rat(1, 4)));
    CHECK(prof.eval_left(QS3(Rat(-3, 4))) == QS3(0));
    CHECK(prof.eval_right(QS3(2)) == QS3(0));

    const auto m = pl_metrics(prof);
    CHECK(m.lipschitz_finite);
    CHECK(m.lipschitz == kR3);
    CHECK(m.integral == QS3(Rat(0), Rat(1, 4)));
    CHECK(m.sup == kR3 * QS3(Rat(1, 2)));
    CHECK(m.support_measure == QS3(1));
    CHECK(m.derivative_finite);
    // two pieces of slope +-sqrt(3) and length 1/2 each: 2 * 3 * 1/2
    CHECK(m.derivative_l2_sq == QS3(3));
}

TEST_CASE("edge-normal profile has a single jump of the side length") {
    for (const QS3& side : {QS3(1), QS3(Rat(3, 7)), QS3(Rat(5, 2))}) {
        StandardTriangle t = random_triangle(rng);
        t.side = side;
        for (SpecialDir d : {SpecialDir::Omega0Perp, SpecialDir::Omega1Perp,
                             SpecialDir::Omega2Perp, SpecialDir::NegOmega0Perp,
                             SpecialDir::NegOmega1Perp, SpecialDir::NegOmega2Perp}) {
            const auto prof = triangle_profile_exact(t, d);
            const auto js = prof.jumps();
            REQUIRE(js.size() == 1);
            CHECK(abs(js[0].second) == side);
            const auto m = pl_metrics(prof);
            CHECK(!m.lipschitz_finite);
            CHECK(!m.derivative_finite);
            CHECK(m.integral == t.area());
        }
    }
}

TEST_CASE("zero function metrics") {
    SignedRegion r;
    const StandardTriangle t = random_triangle(rng);
    r.add(t, +1);
    r.add(t, -1);
    const auto prof = region_profile_exact(r, SpecialDir::Omega1);
    CHECK(prof.empty());
    const auto m = pl_metrics(prof);
    CHECK(m.lipschitz == QS3(0));
    CHECK(m.integral == QS3(0));
    CHECK(m.sup == QS3(0));
    CHECK(m.support_measure == QS3(0));
}

TEST_CASE("profiles agree with the chord oracle") {
    std::uniform_real_distribution<double> angle(0.0, 2 * 3.14159265358979);
    for (int i = 0; i < 60; ++i) {
        const StandardTriangle t = random_triangle(rng);
        const Direction d = Direction::angle(angle(rng));
        const auto prof = triangle_profile_float(t, d);
        const auto shadow = shadow_triangle(t, 1);
        REQUIRE(prof.size() == 3);
        const double lo = prof.breakpoints().front(), hi = prof.breakpoints().back();
        std::uniform_real_distribution<double> ts(lo - 0.2 * (hi - lo), hi + 0.2 * (hi - lo));
        for (int k = 0; k < 100; ++k) {
            const double t0 = ts(rng);
            const double got = prof.eval_right(t0);
            const double want = chord_oracle(shadow, d.ux(), d.uy(), t0);
            CHECK(std::abs(got - want) <= 1e-9);
        }
    }
}

TEST_CASE("cell profile is nonnegative and matches the summed chord oracle") {
    const SignedRegion c = cell(kBaseTri);
    const auto shadows = shadow_region(c);
    std::uniform_real_distribution<double> angle(0.0, 2 * 3.14159265358979);
    for (int i = 0; i < 10; ++i) {
        const Direction d = Direction::angle(angle(rng));
        const auto prof = region_profile_float(shadows, d);
        std::uniform_real_distribution<double> ts(-1.0, 1.0);
        for (int k = 0; k < 100; ++k) {
            const double t0 = ts(rng);
            const double got = prof.eval_right(t0);
            CHECK(got >= -1e-12);
            CHECK(std::abs(got - region_chord_oracle(shadows, d.ux(), d.uy(), t0)) <= 1e-9);
        }
    }
}

TEST_CASE("peak identity: hat peak equals the chord through the middle vertex") {
    for (int i = 0; i < 40; ++i) {
        const StandardTriangle t = random_triangle(rng);
        for (SpecialDir d : {SpecialDir::Omega0, SpecialDir::Omega1, SpecialDir::NegOmega2}) {
            const Point u = special_unit(d);
            const auto vs = t.vertices();
            std::array<QS3, 3> proj{dot(vs[0], u), dot(vs[1], u), dot(vs[2], u)};
            std::array<int, 3> idx{0, 1, 2};
            std::sort(idx.begin(), idx.end(),
                      [&](int a, int b) { return proj[static_cast<size_t>(a)] < proj[static_cast<size_t>(b)]; });
            const QS3 t1 = proj[static_cast<size_t>(idx[0])], t2 = proj[static_cast<size_t>(idx[1])], t3 = proj[static_cast<size_t>(idx[2])];
            REQUIRE(t1 < t2);
            REQUIRE(t2 < t3);

            // Chord through the middle vertex, directly from the two edges
            // that straddle it.
            const Point a = vs[static_cast<size_t>(idx[0])], b = vs[static_cast<size_t>(idx[1])], cpt = vs[static_cast<size_t>(idx[2])];
            const QS3 lam = (t2 - t1) / (t3 - t1);
            const Point on_ac{a.x + (cpt.x - a.x) * lam, a.y + (cpt.y - a.y) * lam};
            const QS3 chord_sq = squared_norm(on_ac - b);

            const auto prof = triangle_profile_exact(t, d);
            const QS3 peak = prof.eval_right(t2);
            CHECK(peak * peak == chord_sq);
            CHECK(peak == QS3(2) * t.area() / (t3 - t1));
        }
    }
}

TEST_CASE("scale and translation invariance of the Lipschitz constant") {
    const SpecialDir d = SpecialDir::Omega1;  // generic for profiles: not an edge normal
    const auto base = pl_metrics(triangle_profile_exact(kBaseTri, d));
    for (int i = 0; i < 40; ++i) {
        const StandardTriangle t = random_triangle(rng);
        const auto m = pl_metrics(triangle_profile_exact(t, d));
        CHECK(m.lipschitz == base.lipschitz);  // same for both orientations
    }
    // Generic float direction: identical across triangles within round-off.
    const Direction g = Direction::angle(0.83);
    const double ref = pl_metrics(triangle_profile_float(kBaseTri, g)).lipschitz;
    for (int i = 0; i < 40; ++i) {
        const StandardTriangle t = random_triangle(rng);
        const double lip = pl_metrics(triangle_profile_float(t, g)).lipschitz;
        CHECK(lip == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("fubini: profile integral equals region area") {
    for (int i = 0; i < 200; ++i) {
        SignedRegion r;
        std::uniform_int_distribution<int> n_terms(1, 3);
        std::uniform_int_distribution<int> use_cell(0, 1);
        const int n = n_terms(rng);
        for (int k = 0; k < n; ++k) {
            const StandardTriangle t = random_triangle(rng);
            if (use_cell(rng)) {
                r.append(cell(t));
            } else {
                r.add(t, +1);
            }
        }
        const QS3 area = region_area(r);
        // Exact mode at a random special direction.
        const auto prof = region_profile_exact(r, random_special());
        CHECK(pl_metrics(prof).integral == area);
        // Float mode at a random angle.
        std::uniform_real_distribution<double> angle(0.0, 6.28318530717958);
        const auto prof_f = region_profile_float(r, Direction::angle(angle(rng)));
        const double got = pl_metrics(prof_f).integral;
        CHECK(std::abs(got - area.to_double()) <= 1e-12 * std::max(1.0, std::abs(area.to_double())));
    }
}

TEST_CASE("pl_sum matches pointwise addition") {
    for (int i = 0; i < 50; ++i) {
        const StandardTriangle a = random_triangle(rng);
        const StandardTriangle b = random_triangle(rng);
        const SpecialDir d = random_special();
        const auto pa = triangle_profile_exact(a, d);
        const auto pb = triangle_profile_exact(b, d);
        const auto sum = pl_sum(pa, pb, QS3(0));
        for (int k = 0; k < 20; ++k) {
            const QS3 t = random_qs3(rng, 60, 7);
            CHECK(sum.eval_right(t) == pa.eval_right(t) + pb.eval_right(t));
            CHECK(sum.eval_left(t) == pa.eval_left(t) + pb.eval_left(t));
        }
    }
}

TEST_CASE("evenness of the omega_0 profile of the truncation") {
    const Truncation tr = build_truncation(4);
    const auto prof = region_profile_exact(tr.region, SpecialDir::Omega0);
    const auto& bps = prof.breakpoints();
    REQUIRE(!bps.empty());
    // Breakpoint set is symmetric and values mirror exactly.
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const QS3 mirrored = -bps[bps.size() - 1 - i];
        CHECK(bps[i] == mirrored);
    }
    for (int i = 0; i < 200; ++i) {
        const QS3 t = random_qs3(rng, 300, 100);
        CHECK(prof.eval_right(t) == prof.eval_left(-t));
    }
}

TEST_CASE("profiles are invariant under a third-turn of the direction") {
    const Truncation tr = build_truncation(4);
    // The construction is invariant under the clockwise third-turn, so the
    // profile at omega equals the profile at the counterclockwise third-turn
    // of omega.
    CHECK(region_profile_exact(tr.region, SpecialDir::Omega0) ==
          region_profile_exact(tr.region, SpecialDir::Omega2));
    CHECK(region_profile_exact(tr.region, SpecialDir::Omega2) ==
          region_profile_exact(tr.region, SpecialDir::NegOmega1));
    CHECK(region_profile_exact(tr.region, SpecialDir::Omega0Perp) ==
          region_profile_exact(tr.region, SpecialDir::Omega2Perp));
    CHECK(region_profile_exact(tr.region, SpecialDir::Omega1Perp) ==
          region_profile_exact(tr.region, SpecialDir::NegOmega0Perp));

    const auto shadows = shadow_region(tr.region);
    std::uniform_real_distribution<double> angle(0.0, 6.28318530717958);
    for (int i = 0; i < 5; ++i) {
        const double th = angle(rng);
        const auto p1 = region_profile_float(shadows, Direction::angle(th));
        const auto p2 = region_profile_float(shadows, Direction::angle(th + 2 * 3.141592653589793 / 3));
        std::uniform_real_distribution<double> ts(-2.0, 2.0);
        for (int k = 0; k < 200; ++k) {
            const double t0 = ts(rng);
            CHECK(std::abs(p1.eval_right(t0) - p2.eval_right(t0)) <= 1e-12);
        }
    }
}
