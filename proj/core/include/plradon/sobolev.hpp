#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plradon/construction.hpp"
#include "plradon/profile.hpp"

namespace plradon {

// Shapes the truncated Gagliardo-type energy is evaluated on: the unit-area
// pieces are either a disk or a signed triangle region (a single triangle is
// the one-term case). Points are drawn uniformly by picking a positive term
// with probability proportional to its area and rejecting the subtracted
// holes, so sampling stays efficient even for sparse regions.
struct SobolevShape {
    enum class Kind { Ball, Region } kind = Kind::Ball;
    double radius = 1.0;
    std::vector<ShadowTriangle> shadows;
    std::vector<double> positive_cdf;  // cumulative areas over positive terms
    std::vector<std::size_t> positive_index;
    double area = 0;

    static SobolevShape ball(double radius);
    static SobolevShape triangle(const StandardTriangle& t);
    static SobolevShape region(const SignedRegion& r);

    bool contains(double x, double y) const;
};

struct SeminormEstimate {
    double delta = 0;
    double value = 0;            // estimate of the integral truncated at |x-y| >= delta
    double ci_halfwidth = 0;     // 95% batch-means halfwidth
    long long samples = 0;
    std::string method;
};

// Monte-Carlo estimates of
//   I(delta) = iint_{|x-y| >= delta} |chi(x)-chi(y)|^2 / |x-y|^3 dx dy
// at delta = delta_max / 2^i for i = 0..levels-1. The integral is split into
// the base range [delta_max, inf) plus dyadic shells, each estimated
// independently with nonnegative terms, so the sequence is nondecreasing by
// construction and each level stays unbiased. Sampling: x uniform in the
// shape, y = x + s*e(phi) with s drawn from the density proportional to
// 1/s^2 on the shell. Streams come from a counter-based generator, so the
// result depends only on (seed, samples), not on evaluation order.
std::vector<SeminormEstimate> gagliardo_dyadic(const SobolevShape& shape, double delta_max,
                                               int levels, long long samples_per_shell,
                                               std::uint64_t seed);

// Single truncation level (the base range only).
SeminormEstimate gagliardo_truncated(const SobolevShape& shape, double delta,
                                     long long samples, std::uint64_t seed);

// Deterministic radial quadrature for the ball, used as the oracle for the
// Monte-Carlo path.
double gagliardo_ball_quadrature(double radius, double delta, int n_radial, int n_angular);

struct LogFit {
    double intercept = 0;
    double slope = 0;   // coefficient of log(1/delta)
    double r_squared = 0;
};

// Least-squares fit of value against log(1/delta).
LogFit fit_log_divergence(const std::vector<SeminormEstimate>& estimates);

struct SliceIdentityResult {
    double sigma = 0;
    double lhs = 0;  // ||d_t R f||^2 over S^1 x R for the Gaussian
    double rhs = 0;  // 8 pi^2 times the H^{1/2} seminorm from the Fourier side
    double rel_err = 0;
};

// Both sides of the derivative-slice identity for f = exp(-|x|^2/sigma^2),
// each via its own 1-D quadrature. Fourier convention: F f(xi) =
// int f(x) e^{-i<x,xi>} dx with seminorm (2 pi)^-3 * int |xi| |F f|^2 dxi;
// this is the normalization under which the constant is exactly 8 pi^2.
SliceIdentityResult slice_identity_gaussian(double sigma);

struct ChainInequalityReport {
    int levels = 0;
    int grid_size = 0;
    double lhs = 0;    // quadrature of the profile-derivative energy over directions
    double rhs = 0;    // support bound times quadrature of squared Lipschitz constants
    double m_hat = 0;  // empirical uniform support bound
    bool ok = false;
};

// Integrated form of |d_t profile|^2 <= support * Lip^2, over a uniform grid
// that avoids the twelve special directions.
ChainInequalityReport chain_inequality_check(int levels, int grid_size);

}  // namespace plradon
