#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "plradon/analysis.hpp"

using namespace plradon;

namespace {

const QS3 kR3 = QS3::sqrt3();

}  // namespace

TEST_CASE("reference table values") {
    // Interior of the flat middle interval at level 0.
    CHECK(fj_reference(0, QS3(Rat(-1, 4))) == kR3 * QS3(Rat(3, 14)));
    // Left endpoint of the rising piece.
    CHECK(fj_reference(0, QS3(Rat(-1, 2))) == QS3(0));
    // Level 1 near zero: constant sqrt(3)/8, and [-1/56, 0] is that plateau.
    CHECK(fj_reference(1, QS3(Rat(-1, 56))) == kR3 * QS3(Rat(1, 8)));
    CHECK(fj_reference(1, QS3(Rat(-1, 100))) == kR3 * QS3(Rat(1, 8)));
    CHECK_THROWS_AS(fj_reference(0, QS3(Rat(-3, 4))), std::domain_error);
    CHECK_THROWS_AS(fj_reference(0, QS3(Rat(1, 10))), std::domain_error);
}

TEST_CASE("reference table is continuous at every junction and zero on the left piece") {
    for (int j = 0; j <= 4; ++j) {
        const auto c = fj_interval_endpoints(j);
        // Continuity via the PL form: no jumps except the restriction at 0.
        const auto pl = fj_reference_pl(j);
        const auto js = pl.jumps();
        REQUIRE(js.size() == 1);
        CHECK(js[0].first == QS3(0));
        CHECK(js[0].second == -kR3 * QS3(Rat::pow2(-2 * j) * Rat(1, 2)));
        // Vanishes left of the support.
        if (j >= 1) CHECK(pl.eval_right(QS3(Rat(-2, 5))) == QS3(0));
        // PL form agrees with the case formula at many rational points.
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            for (int n = 1; n <= 7; ++n) {
                const QS3 t = QS3(c[i]) + (QS3(c[i + 1]) - QS3(c[i])) * QS3(Rat(n, 8));
                CHECK(pl.eval_right(t) == fj_reference(j, t));
            }
        }
    }
}

TEST_CASE("geometric profile reproduces the table exactly") {
    for (int j = 0; j <= 3; ++j) {
        const FjReport rep = verify_fj(j, 25);
        CHECK(rep.values_ok);
        CHECK(rep.breakpoints_ok);
        CHECK(rep.continuous_ok);
        CHECK(rep.mismatches.empty());
    }
}

TEST_CASE("partial-sum analysis: constants, cover, and the slope bound") {
    // C_1 = (2/sqrt(3)) * (15/16) = sqrt(3) * 5/8.
    CHECK(fk_tail_constant(1) == QS3(Rat(0), Rat(5, 8)));
    const FkReport rep = verify_Fk(10);
    CHECK(rep.all_ok);
    REQUIRE(rep.per_k.size() == 9);
    for (const auto& cl : rep.per_k) {
        CHECK(cl.restriction_ok);
        CHECK(cl.tail_constant_ok);
        CHECK(cl.head_constant_ok);
        CHECK(cl.cover_ok);
        CHECK(cl.slope_bound_ok);
    }
    CHECK_THROWS_AS(verify_Fk(1), std::invalid_argument);
}

TEST_CASE("cover junction arithmetic") {
    for (int k = 2; k <= 10; ++k) {
        const auto ck = fj_interval_endpoints(k);
        const auto ck1 = fj_interval_endpoints(k - 1);
        // Right end of the head interval meets the left end of the plateau
        // of the previous level: -(2/7)*4^-k == -4^-(k-1)/14.
        CHECK(ck[2] == ck1[5]);
    }
}

TEST_CASE("table partial sums equal the truncation profile on the left half-interval") {
    PLFunction<QS3> partial;
    for (int k = 0; k <= 4; ++k) {
        partial = k == 0 ? fj_reference_pl(0) : pl_sum(partial, fj_reference_pl(k), QS3(0));
        const Truncation tr = build_truncation(2 * k + 1);
        const auto prof = region_profile_exact(tr.region, SpecialDir::Omega0);
        CHECK(pl_equal_on(prof, partial, QS3(Rat(-1, 2)), QS3(0)));
    }
}

TEST_CASE("edge-normal bookkeeping: lone surviving jump at the open frame edge") {
    for (int levels : {3, 4, 5}) {
        const Truncation tr = build_truncation(levels);
        const auto rep = special_direction_check(tr, SpecialDir::Omega0Perp);
        CHECK(rep.ok);
        CHECK(rep.interior_jump_count == 0);
        REQUIRE(rep.jumps.size() == 1);
        // The unmatched edge lies on the next frame's horizontal edge line,
        // and its chord is (6/7) * 2^-levels whichever parity ends the build.
        const Generation& last = tr.generations.back();
        const StandardTriangle next_frame = circumscribe(last.frame, last.foot_side);
        CHECK(abs(rep.jumps[0].first) == next_frame.side * QS3(Rat(0), Rat(1, 6)));
        CHECK(abs(rep.jumps[0].second) == QS3(Rat(6, 7) * Rat::pow2(-levels)));
        CHECK(rep.windowed_lipschitz.sign() > 0);
    }
    // All six edge normals pass at once.
    const Truncation tr = build_truncation(4);
    for (SpecialDir d : {SpecialDir::Omega1Perp, SpecialDir::Omega2Perp,
                         SpecialDir::NegOmega0Perp, SpecialDir::NegOmega1Perp,
                         SpecialDir::NegOmega2Perp}) {
        CHECK(special_direction_check(tr, d).ok);
    }
    CHECK_THROWS_AS(special_direction_check(tr, SpecialDir::Omega0), std::invalid_argument);
}

TEST_CASE("the base cell alone has an uncancelled edge jump") {
    // Non-vacuity control: without the next generation the base cell's
    // horizontal edge jump survives, with the exact chord 6/7 at sqrt(3)/6.
    const StandardTriangle base{Point{QS3(0), QS3(0)}, QS3(1), Orientation::Up};
    const auto prof = region_profile_exact(cell(base), SpecialDir::Omega0Perp);
    const auto js = prof.jumps();
    REQUIRE(js.size() == 1);
    CHECK(js[0].first == QS3(Rat(0), Rat(1, 6)));
    CHECK(abs(js[0].second) == QS3(Rat(6, 7)));
}

TEST_CASE("window radius grows with the level") {
    QS3 prev(-1);
    for (int levels = 2; levels <= 7; ++levels) {
        const Truncation tr = build_truncation(levels);
        const auto rep = special_direction_check(tr, SpecialDir::Omega0Perp);
        CHECK(prev < rep.rho);
        prev = rep.rho;
    }
}

TEST_CASE("direction sweep: finiteness, shared integral, support bound") {
    const int levels = 4;
    const auto table = lip_sweep(uniform_grid(90), levels);
    REQUIRE(table.rows.size() == 90);
    const double area = truncation_area(levels).to_double();
    int specials = 0;
    for (const auto& row : table.rows) {
        // A 90-point grid hits the six edge directions but none of the six
        // edge normals, so every row is finite.
        CHECK(row.lip_finite);
        CHECK(row.integral == doctest::Approx(area).epsilon(1e-12));
        CHECK(row.sup <= 2 * 1.7320508075688772 + 1e-9);
        CHECK(row.support <= table.max_support);
        if (row.special) ++specials;
    }
    CHECK(specials == 6);
    CHECK(table.max_support > 0);
    CHECK(table.max_finite_lip > 0);
}

TEST_CASE("a 720 grid flags all twelve special directions") {
    const auto grid = uniform_grid(720);
    int specials = 0;
    for (const auto& d : grid)
        if (d.is_special()) ++specials;
    CHECK(specials == 12);
}

TEST_CASE("lipschitz blow-up toward an edge normal") {
    const auto lips = perp_refinement_max_lip(SpecialDir::Omega0Perp, {3, 5, 7}, 8);
    REQUIRE(lips.size() == 3);
    CHECK(lips[0] < lips[1]);
    CHECK(lips[1] < lips[2]);
}

TEST_CASE("claim counts stay within the level-dependent bound") {
    const ClaimReport rep = claim_suite(3, 6, 300, 777);
    CHECK(rep.all_ok);
    for (const auto& c : rep.cases) {
        CHECK(c.bound == std::max(c.n, 6));
        CHECK(c.levels == c.n + 4);
        CHECK(c.max_count <= c.bound);
        CHECK(c.max_count >= 1);
    }

    // Control: exactly along omega_1 the family-1 count grows with the level,
    // which is why the edge directions are excluded from the claim.
    const Truncation t6 = build_truncation(6);
    const Truncation t12 = build_truncation(12);
    const int c6 = line_intersection_count_exact(t6, SpecialDir::Omega1, QS3(0), FootFamily::K1);
    const int c12 =
        line_intersection_count_exact(t12, SpecialDir::Omega1, QS3(0), FootFamily::K1);
    CHECK(c6 == 7);
    CHECK(c12 == 13);
    CHECK(c12 > c6);
}
