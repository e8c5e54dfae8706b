#include "plradon/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace plradon {

namespace {

constexpr double kPi = std::numbers::pi;

// Counter-based stream: splitmix64 over a key mixed from (seed, stream).
struct CounterRng {
    std::uint64_t state;

    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        state = seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0x94d049bb133111ebULL);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
};

bool point_in_shadow(const ShadowTriangle& s, double x, double y) {
    double sgn[3];
    for (int i = 0; i < 3; ++i) {
        const auto& a = s.v[i];
        const auto& b = s.v[(i + 1) % 3];
        sgn[i] = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
    }
    const bool has_pos = sgn[0] > 0 || sgn[1] > 0 || sgn[2] > 0;
    const bool has_neg = sgn[0] < 0 || sgn[1] < 0 || sgn[2] < 0;
    return !(has_pos && has_neg);
}

}  // namespace

SobolevShape SobolevShape::ball(double r) {
    if (r <= 0) throw std::invalid_argument("SobolevShape::ball: radius must be positive");
    SobolevShape s;
    s.kind = Kind::Ball;
    s.radius = r;
    s.area = kPi * r * r;
    return s;
}

SobolevShape SobolevShape::triangle(const StandardTriangle& t) {
    SignedRegion r;
    r.add(t, +1);
    return region(r);
}

SobolevShape SobolevShape::region(const SignedRegion& r) {
    SobolevShape s;
    s.kind = Kind::Region;
    s.shadows = shadow_region(r);
    if (s.shadows.empty()) throw std::invalid_argument("SobolevShape::region: empty region");
    s.area = region_area(r).to_double();
    double cum = 0;
    for (std::size_t i = 0; i < s.shadows.size(); ++i) {
        if (s.shadows[i].weight > 0) {
            cum += s.shadows[i].area;
            s.positive_cdf.push_back(cum);
            s.positive_index.push_back(i);
        }
    }
    if (s.positive_cdf.empty()) throw std::invalid_argument("SobolevShape::region: no positive term");
    return s;
}

bool SobolevShape::contains(double x, double y) const {
    if (kind == Kind::Ball) return x * x + y * y <= radius * radius;
    int w = 0;
    for (const auto& sh : shadows)
        if (point_in_shadow(sh, x, y)) w += sh.weight;
    return w > 0;
}

namespace {

void sample_in_triangle(const ShadowTriangle& t, double u, double v, double& x, double& y) {
    if (u + v > 1) {
        u = 1 - u;
        v = 1 - v;
    }
    x = t.v[0][0] + u * (t.v[1][0] - t.v[0][0]) + v * (t.v[2][0] - t.v[0][0]);
    y = t.v[0][1] + u * (t.v[1][1] - t.v[0][1]) + v * (t.v[2][1] - t.v[0][1]);
}

void sample_inside(const SobolevShape& shape, CounterRng& rng, double& x, double& y) {
    if (shape.kind == SobolevShape::Kind::Ball) {
        const double r = shape.radius * std::sqrt(rng.next_double());
        const double phi = 2 * kPi * rng.next_double();
        x = r * std::cos(phi);
        y = r * std::sin(phi);
        return;
    }
    // Pick a positive term by area, then reject the subtracted holes.
    for (int tries = 0; tries < 100000; ++tries) {
        const double pick = rng.next_double() * shape.positive_cdf.back();
        const auto it =
            std::lower_bound(shape.positive_cdf.begin(), shape.positive_cdf.end(), pick);
        const std::size_t idx =
            shape.positive_index[static_cast<std::size_t>(it - shape.positive_cdf.begin())];
        sample_in_triangle(shape.shadows[idx], rng.next_double(), rng.next_double(), x, y);
        if (shape.contains(x, y)) return;
    }
    throw std::runtime_error("sample_inside: rejection failed");
}

// One shell [s_lo, s_hi) (s_hi may be infinite): estimates
//   2 * int_S int_{y notin S, s_lo <= |x-y| < s_hi} |x-y|^-3 dy dx
// by x uniform in S, phi uniform, s from density ~ 1/s^2 on the shell.
SeminormEstimate estimate_shell(const SobolevShape& shape, double s_lo, double s_hi,
                                long long samples, std::uint64_t seed, std::uint64_t stream) {
    const double inv_span = 1.0 / s_lo - (std::isinf(s_hi) ? 0.0 : 1.0 / s_hi);
    const double factor = 2.0 * shape.area * 2.0 * kPi * inv_span;

    constexpr int kBatches = 32;
    const long long per_batch = std::max<long long>(1, samples / kBatches);
    double batch_means[kBatches];

    for (int b = 0; b < kBatches; ++b) {
        CounterRng rng(seed, (stream << 8) + static_cast<std::uint64_t>(b));
        long long hits = 0;
        for (long long i = 0; i < per_batch; ++i) {
            double x, y;
            sample_inside(shape, rng, x, y);
            const double phi = 2 * kPi * rng.next_double();
            const double u = rng.next_double();
            const double s = 1.0 / (1.0 / s_lo - u * inv_span);
            if (!shape.contains(x + s * std::cos(phi), y + s * std::sin(phi))) ++hits;
        }
        batch_means[b] = factor * static_cast<double>(hits) / static_cast<double>(per_batch);
    }

    double mean = 0;
    for (double bm : batch_means) mean += bm;
    mean /= kBatches;
    double var = 0;
    for (double bm : batch_means) var += (bm - mean) * (bm - mean);
    var /= (kBatches - 1);

    SeminormEstimate est;
    est.value = mean;
    est.ci_halfwidth = 1.96 * std::sqrt(var / kBatches);
    est.samples = per_batch * kBatches;
    est.method = "monte-carlo";
    return est;
}

}  // namespace

std::vector<SeminormEstimate> gagliardo_dyadic(const SobolevShape& shape, double delta_max,
                                               int levels, long long samples_per_shell,
                                               std::uint64_t seed) {
    if (delta_max <= 0) throw std::invalid_argument("gagliardo_dyadic: delta must be positive");
    if (levels < 1) throw std::invalid_argument("gagliardo_dyadic: levels must be >= 1");

    std::vector<SeminormEstimate> out;
    SeminormEstimate base = estimate_shell(
        shape, delta_max, std::numeric_limits<double>::infinity(), samples_per_shell, seed, 1);
    base.delta = delta_max;
    out.push_back(base);

    double running = base.value;
    double var_sum = base.ci_halfwidth * base.ci_halfwidth;
    long long total_samples = base.samples;
    double hi = delta_max;
    for (int i = 1; i < levels; ++i) {
        const double lo = hi / 2;
        const SeminormEstimate shell = estimate_shell(shape, lo, hi, samples_per_shell, seed,
                                                      static_cast<std::uint64_t>(i) + 1);
        running += shell.value;
        var_sum += shell.ci_halfwidth * shell.ci_halfwidth;
        total_samples += shell.samples;
        SeminormEstimate cum;
        cum.delta = lo;
        cum.value = running;
        cum.ci_halfwidth = std::sqrt(var_sum);
        cum.samples = total_samples;
        cum.method = "monte-carlo";
        out.push_back(cum);
        hi = lo;
    }
    return out;
}

SeminormEstimate gagliardo_truncated(const SobolevShape& shape, double delta, long long samples,
                                     std::uint64_t seed) {
    if (delta <= 0) throw std::invalid_argument("gagliardo_truncated: delta must be positive");
    SeminormEstimate est = estimate_shell(shape, delta, std::numeric_limits<double>::infinity(),
                                          samples, seed, 1);
    est.delta = delta;
    return est;
}

double gagliardo_ball_quadrature(double radius, double delta, int n_radial, int n_angular) {
    if (delta <= 0) throw std::invalid_argument("gagliardo_ball_quadrature: delta must be positive");
    // For x at distance rho from the centre, the ray at angle phi exits the
    // disk after chord(rho, phi) = sqrt(r^2 - rho^2 sin^2 phi) - rho cos phi,
    // so the y-integral collapses to dphi / max(delta, chord).
    double total = 0;
    for (int i = 0; i < n_radial; ++i) {
        const double rho = radius * (i + 0.5) / n_radial;
        double inner = 0;
        for (int j = 0; j < n_angular; ++j) {
            const double phi = 2 * kPi * (j + 0.5) / n_angular;
            const double s2 = rho * std::sin(phi);
            const double chord = std::sqrt(radius * radius - s2 * s2) - rho * std::cos(phi);
            inner += 1.0 / std::max(delta, chord);
        }
        inner *= 2 * kPi / n_angular;
        total += 2 * kPi * rho * inner * (radius / n_radial);
    }
    return 2 * total;
}

LogFit fit_log_divergence(const std::vector<SeminormEstimate>& estimates) {
    if (estimates.size() < 3) throw std::invalid_argument("fit_log_divergence: need >= 3 points");
    const double dn = static_cast<double>(estimates.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& e : estimates) {
        const double x = std::log(1.0 / e.delta);
        sx += x;
        sy += e.value;
        sxx += x * x;
        sxy += x * e.value;
    }
    const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / dn;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / dn;
    for (const auto& e : estimates) {
        const double x = std::log(1.0 / e.delta);
        const double fit = intercept + slope * x;
        ss_res += (e.value - fit) * (e.value - fit);
        ss_tot += (e.value - ybar) * (e.value - ybar);
    }
    LogFit f;
    f.intercept = intercept;
    f.slope = slope;
    f.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
    return f;
}

namespace {

template <class F>
double simpson(F f, double a, double b, int n) {
    if (n % 2 == 1) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

SliceIdentityResult slice_identity_gaussian(double sigma) {
    if (sigma <= 0) throw std::invalid_argument("slice_identity_gaussian: sigma must be positive");
    SliceIdentityResult res;
    res.sigma = sigma;

    // Profile of the Gaussian in any direction: sigma*sqrt(pi)*exp(-t^2/sigma^2);
    // |d_t|^2 = (4 pi t^2 / sigma^2) exp(-2 t^2 / sigma^2), integrated over
    // t in R and over the whole circle of directions.
    const auto dlhs = [sigma](double t) {
        return 4 * kPi * t * t / (sigma * sigma) * std::exp(-2 * t * t / (sigma * sigma));
    };
    res.lhs = 2 * kPi * 2 * simpson(dlhs, 0.0, 9.0 * sigma, 1 << 14);

    // Fourier side: F f(xi) = pi sigma^2 exp(-sigma^2 |xi|^2 / 4);
    // 8 pi^2 (2 pi)^-3 int |xi| |F f|^2 dxi = (1/pi) * 2 pi * int s^2 |amp|^2 ds.
    const auto drhs = [sigma](double s) {
        const double amp = kPi * sigma * sigma * std::exp(-sigma * sigma * s * s / 4);
        return s * s * amp * amp;
    };
    res.rhs = (1.0 / kPi) * 2 * kPi * simpson(drhs, 0.0, 44.0 / sigma, 1 << 14);

    res.rel_err = std::abs(res.lhs - res.rhs) / res.rhs;
    return res;
}

ChainInequalityReport chain_inequality_check(int levels, int grid_size) {
    ChainInequalityReport rep;
    rep.levels = levels;
    rep.grid_size = grid_size;

    const Truncation tr = build_truncation(levels);
    const auto shadows = shadow_region(tr.region);
    const double w = 2 * kPi / grid_size;

    double lip_sq_integral = 0;
    for (int i = 0; i < grid_size; ++i) {
        // Half-step offset keeps the grid clear of the special directions.
        const Direction d = Direction::angle(2 * kPi * (i + 0.5) / grid_size);
        const auto m = pl_metrics(region_profile_float(shadows, d));
        rep.lhs += w * m.derivative_l2_sq;
        lip_sq_integral += w * m.lipschitz * m.lipschitz;
        rep.m_hat = std::max(rep.m_hat, m.support_measure);
    }
    rep.rhs = rep.m_hat * lip_sq_integral;
    rep.ok = rep.lhs <= rep.rhs;
    return rep;
}

}  // namespace plradon
