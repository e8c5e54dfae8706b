#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plradon/construction.hpp"
#include "plradon/piecewise_linear.hpp"
#include "plradon/profile.hpp"

namespace plradon {

// ---------------------------------------------------------------------------
// The six-case reference table for the omega_0 profile of the scaled base
// motif (base cell plus the axis-aligned first foot, shrunk by 4^-j), on
// [-1/2, 0]. Expressed with exact endpoints c_i = 4^-j * c_i(0):
//   [-1/2, c1] : 0
//   [c1, c2]   : sqrt(3) * (t + 4^-j / 2)
//   [c2, c3]   : sqrt(3) * (3/14) * 4^-j
//   [c3, c4]   : sqrt(3) * (3t + (6/7) * 4^-j)
//   [c4, c5]   : sqrt(3) * (t + (4/7) * 4^-j)
//   [c5, 0]    : sqrt(3) * 4^-j / 2
// with c1..c5 = 4^-j * {-1/2, -2/7, -3/14, -1/7, -1/14}.
// ---------------------------------------------------------------------------

// Exact table endpoints for level j, in order {-1/2, c1, c2, c3, c4, c5, 0}.
std::vector<Rat> fj_interval_endpoints(int j);

// Exact evaluation; t must lie in [-1/2, 0].
QS3 fj_reference(int j, const QS3& t);

// The same function as an exact piecewise-linear object supported on
// [-1/2, 0] (the restriction introduces a jump back to zero at t = 0).
PLFunction<QS3> fj_reference_pl(int j);

// The geometric source of the table: cell of the unit triangle plus the foot
// bisected by the omega_0-perp axis, scaled by 4^-j about the origin.
SignedRegion fj_model_region(int j);

struct FjMismatch {
    std::string t;
    std::string expected;
    std::string got;
};

struct FjReport {
    int j = 0;
    bool values_ok = true;
    bool breakpoints_ok = true;
    bool continuous_ok = true;
    std::vector<FjMismatch> mismatches;
    bool ok() const { return values_ok && breakpoints_ok && continuous_ok; }
};

// Exact comparison of the geometric profile against the table at
// samples_per_interval interior rational points per interval plus every
// endpoint, plus an exact breakpoint-set comparison on [-1/2, 0).
FjReport verify_fj(int j, int samples_per_interval);

struct FkClauseReport {
    int k = 0;
    bool restriction_ok = false;   // F_k == F_{k-1} on I0_k
    bool tail_constant_ok = false; // F_k == f_k + C_{k-1} on I5_{k-1}
    bool head_constant_ok = false; // F_k == C_{k-2} + f_{k-1} + f_k on I1_k
    bool cover_ok = false;         // the three intervals cover [-1/2, 0]
    bool slope_bound_ok = false;   // max |slope| <= 3*sqrt(3), attained
    bool ok() const {
        return restriction_ok && tail_constant_ok && head_constant_ok && cover_ok &&
               slope_bound_ok;
    }
};

struct FkReport {
    std::vector<FkClauseReport> per_k;
    bool all_ok = true;
};

// C_m = (2/sqrt(3)) * (1 - 4^-(m+1)), the constant value of f_0 + .. + f_m
// near zero.
QS3 fk_tail_constant(int m);

FkReport verify_Fk(int k_max);

struct SpecialDirectionReport {
    SpecialDir dir;
    int levels = 0;
    QS3 rho;                  // window radius: least |projection| of a last-level outer edge
    int interior_jump_count = 0;
    QS3 windowed_lipschitz;   // max |slope| over pieces meeting (-rho, rho)
    std::vector<std::pair<QS3, QS3>> jumps;  // surviving (t, height) pairs
    bool ok = false;          // no uncancelled jump inside the window
};

// Exact jump bookkeeping for an edge-normal direction: every jump strictly
// inside |t| < rho must cancel; only the last level's unmatched outer edges
// may carry one.
SpecialDirectionReport special_direction_check(const Truncation& tr, SpecialDir dir);

struct SweepRow {
    double omega_rad = 0;
    bool special = false;
    bool lip_finite = true;
    double lip = 0;
    double support = 0;
    double sup = 0;
    double integral = 0;
};

struct SweepTable {
    int levels = 0;
    std::string grid_spec;
    std::vector<SweepRow> rows;
    double max_support = 0;      // the empirical uniform support bound
    double max_finite_lip = 0;
    double sup_bound = 0;        // max over rows of sup
};

std::vector<Direction> uniform_grid(int n);

SweepTable lip_sweep(const std::vector<Direction>& grid, int levels);

// Max Lipschitz constant among directions at angular offsets ~2^-n from the
// given edge normal, one value per requested n. Blow-up near the edge
// normals shows up as growth along this sequence.
std::vector<double> perp_refinement_max_lip(SpecialDir center, const std::vector<int>& ns,
                                            int levels);

struct ClaimCase {
    int n = 0;
    double angle_offset = 0;
    int levels = 0;
    int bound = 0;
    int max_count = 0;
    double argmax_t = 0;
    bool ok = false;
};

struct ClaimReport {
    std::vector<ClaimCase> cases;
    bool all_ok = true;
};

// For each N, takes a direction at angle pi/3 + 1.5*2^-N (so the acute angle
// to omega_1 sits in (2^-N, 2^-N+1]), builds N+4 levels and counts
// family-1 triangles met by sampled lines; the count must stay at or below
// max(N, 6).
ClaimReport claim_suite(int n_min, int n_max, int lines_per_case, std::uint64_t seed);

}  // namespace plradon
