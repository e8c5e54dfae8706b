#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace plradon {

// Compactly supported piecewise-linear function with recorded jump
// discontinuities, closed under signed sums. T is QS3 (exact mode) or double
// (float mode). Stored canonically: a breakpoint survives only if it carries
// a nonzero jump or a slope change, so equal functions compare equal.
//
// At a jump the pointwise value is taken to be the right limit; all metrics
// here are insensitive to that convention.

template <class T>
struct PLEvent {
    T t;
    T jump;    // right limit minus left limit at t
    T dslope;  // slope change across t
};

// Accumulator type for value scans: exact types accumulate as themselves,
// binary64 in extended precision so long event chains keep full accuracy.
template <class T>
struct PLAccum {
    using type = T;
};
template <>
struct PLAccum<double> {
    using type = long double;
};

template <class T>
class PLFunction {
public:
    PLFunction() = default;

    // Builds from events, merging breakpoints closer than merge_eps (exact
    // equality when merge_eps is zero) and dropping no-op breakpoints.
    static PLFunction from_events(std::vector<PLEvent<T>> events, const T& merge_eps) {
        PLFunction f;
        if (events.empty()) return f;
        std::sort(events.begin(), events.end(),
                  [](const PLEvent<T>& a, const PLEvent<T>& b) { return a.t < b.t; });

        std::vector<PLEvent<T>> merged;
        for (auto& e : events) {
            if (!merged.empty() && !(merge_eps < e.t - merged.back().t)) {
                merged.back().jump += e.jump;
                merged.back().dslope += e.dslope;
            } else {
                merged.push_back(e);
            }
        }
        std::erase_if(merged, [](const PLEvent<T>& e) {
            return e.jump == T(0) && e.dslope == T(0);
        });
        if (merged.empty()) return f;

        const std::size_t n = merged.size();
        f.ts_.reserve(n);
        f.left_.reserve(n);
        f.right_.reserve(n);
        f.slopes_.reserve(n > 0 ? n - 1 : 0);
        using Acc = typename PLAccum<T>::type;
        Acc value(0);
        Acc slope(0);
        for (std::size_t i = 0; i < n; ++i) {
            f.ts_.push_back(merged[i].t);
            f.left_.push_back(static_cast<T>(value));
            value += Acc(merged[i].jump);
            f.right_.push_back(static_cast<T>(value));
            slope += Acc(merged[i].dslope);
            if (i + 1 < n) {
                f.slopes_.push_back(static_cast<T>(slope));
                value += slope * Acc(merged[i + 1].t - merged[i].t);
            }
        }
        return f;
    }

    // Builds from per-breakpoint one-sided values and per-piece slopes
    // (already sorted and distinct), dropping breakpoints that carry neither
    // a jump nor a slope change so the representation stays canonical.
    static PLFunction from_values(std::vector<T> ts, std::vector<T> left, std::vector<T> right,
                                  std::vector<T> slopes) {
        PLFunction f;
        const std::size_t n = ts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const T before = f.slopes_.empty() ? T(0) : f.slopes_.back();
            const T after = i + 1 < n ? slopes[i] : T(0);
            const bool keep = !(right[i] - left[i] == T(0)) || !(after - before == T(0));
            if (keep) {
                f.ts_.push_back(std::move(ts[i]));
                f.left_.push_back(std::move(left[i]));
                f.right_.push_back(std::move(right[i]));
                if (i + 1 < n) f.slopes_.push_back(after);
            } else if (!f.ts_.empty() && i + 1 == n && !f.slopes_.empty()) {
                // dropped a trailing no-op breakpoint: the previous piece
                // extends to nothing, so the trailing slope must go too
                f.slopes_.pop_back();
            }
        }
        // A kept final breakpoint may still carry a dangling slope slot.
        while (f.slopes_.size() >= f.ts_.size() && !f.slopes_.empty()) f.slopes_.pop_back();
        return f;
    }

    std::vector<PLEvent<T>> to_events() const {
        std::vector<PLEvent<T>> evs;
        evs.reserve(ts_.size());
        T prev_slope(0);
        for (std::size_t i = 0; i < ts_.size(); ++i) {
            const T next_slope = i + 1 < ts_.size() ? slopes_[i] : T(0);
            evs.push_back({ts_[i], right_[i] - left_[i], next_slope - prev_slope});
            prev_slope = next_slope;
        }
        return evs;
    }

    bool empty() const { return ts_.empty(); }
    std::size_t size() const { return ts_.size(); }
    const std::vector<T>& breakpoints() const { return ts_; }
    const T& left_value(std::size_t i) const { return left_[i]; }
    const T& right_value(std::size_t i) const { return right_[i]; }
    // Slope on the open interval (ts[i], ts[i+1]).
    const T& slope(std::size_t i) const { return slopes_[i]; }

    T eval_left(const T& t) const { return eval(t, /*from_left=*/true); }
    T eval_right(const T& t) const { return eval(t, /*from_left=*/false); }

    // Slope of the piece containing t (the right-hand piece at a breakpoint,
    // zero outside the support).
    T slope_at(const T& t) const {
        auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
        if (it == ts_.begin() || it == ts_.end()) return T(0);
        return slopes_[static_cast<std::size_t>(it - ts_.begin()) - 1];
    }

    // Breakpoints carrying a genuine discontinuity, as (t, jump) pairs.
    std::vector<std::pair<T, T>> jumps() const {
        std::vector<std::pair<T, T>> out;
        for (std::size_t i = 0; i < ts_.size(); ++i)
            if (!(right_[i] - left_[i] == T(0))) out.emplace_back(ts_[i], right_[i] - left_[i]);
        return out;
    }

    bool operator==(const PLFunction& o) const {
        return ts_ == o.ts_ && left_ == o.left_ && right_ == o.right_ && slopes_ == o.slopes_;
    }

private:
    T eval(const T& t, bool from_left) const {
        if (ts_.empty()) return T(0);
        // First breakpoint strictly greater than t.
        auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
        if (it == ts_.begin()) return T(0);
        const std::size_t i = static_cast<std::size_t>(it - ts_.begin()) - 1;
        if (ts_[i] == t) {
            if (from_left) return left_[i];
            return right_[i];
        }
        if (i + 1 >= ts_.size()) return T(0);
        return right_[i] + slopes_[i] * (t - ts_[i]);
    }

    std::vector<T> ts_;
    std::vector<T> left_;
    std::vector<T> right_;
    std::vector<T> slopes_;
};

// Pointwise sum via value-space merging. Values at merged breakpoints come
// from local interpolation inside each summand, so a summand contributes
// exact zeros outside its own support; long gaps between far-apart pieces
// stay identically zero instead of accumulating slope round-off.
template <class T>
PLFunction<T> pl_sum(const PLFunction<T>& a, const PLFunction<T>& b, const T& merge_eps) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<T> pts;
    pts.reserve(a.size() + b.size());
    std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
               b.breakpoints().end(), std::back_inserter(pts));
    std::vector<T> merged;
    for (const T& t : pts) {
        if (merged.empty() || merge_eps < t - merged.back()) merged.push_back(t);
    }
    const std::size_t n = merged.size();
    std::vector<T> left(n), right(n), slopes(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        left[i] = a.eval_left(merged[i]) + b.eval_left(merged[i]);
        right[i] = a.eval_right(merged[i]) + b.eval_right(merged[i]);
        if (i + 1 < n) {
            const T mid = (merged[i] + merged[i + 1]) / T(2);
            slopes[i] = a.slope_at(mid) + b.slope_at(mid);
        }
    }
    return PLFunction<T>::from_values(std::move(merged), std::move(left), std::move(right),
                                      std::move(slopes));
}

template <class T>
PLFunction<T> pl_sum_many(std::vector<PLFunction<T>> parts, const T& merge_eps) {
    if (parts.empty()) return PLFunction<T>();
    // Balanced fold keeps interpolation error logarithmic in the term count.
    while (parts.size() > 1) {
        std::vector<PLFunction<T>> next;
        next.reserve(parts.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(pl_sum(parts[i], parts[i + 1], merge_eps));
        if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts.front());
}

template <class T>
struct ProfileMetrics {
    bool lipschitz_finite = true;
    T lipschitz{0};        // valid when lipschitz_finite
    T integral{0};
    T sup{0};
    T support_measure{0};
    bool derivative_finite = true;
    T derivative_l2_sq{0};  // valid when derivative_finite
};

template <class T>
T pl_abs(const T& x) {
    return x < T(0) ? -x : x;
}

template <class T>
ProfileMetrics<T> pl_metrics(const PLFunction<T>& f) {
    ProfileMetrics<T> m;
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(f.right_value(i) - f.left_value(i) == T(0))) {
            m.lipschitz_finite = false;
            m.derivative_finite = false;
        }
        m.sup = std::max(m.sup, std::max(f.left_value(i), f.right_value(i)));
    }
    using Acc = typename PLAccum<T>::type;
    Acc integral(0);
    Acc deriv(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const T len = f.breakpoints()[i + 1] - f.breakpoints()[i];
        integral += Acc(f.right_value(i) + f.left_value(i + 1)) * Acc(len) / Acc(2);
        if (m.lipschitz_finite) m.lipschitz = std::max(m.lipschitz, pl_abs(f.slope(i)));
        if (m.derivative_finite) deriv += Acc(f.slope(i)) * Acc(f.slope(i)) * Acc(len);
        const bool identically_zero =
            f.right_value(i) == T(0) && f.left_value(i + 1) == T(0);
        if (!identically_zero) m.support_measure += len;
    }
    m.integral = static_cast<T>(integral);
    if (!m.lipschitz_finite) m.lipschitz = T(0);
    m.derivative_l2_sq = m.derivative_finite ? static_cast<T>(deriv) : T(0);
    return m;
}

// True when f == g as functions on [a, b], comparing one-sided limits at every
// breakpoint of either function inside the interval plus the endpoints
// (right limit at a, left limit at b).
template <class T>
bool pl_equal_on(const PLFunction<T>& f, const PLFunction<T>& g, const T& a, const T& b) {
    if (b < a) throw std::invalid_argument("pl_equal_on: empty interval");
    std::vector<T> pts{a, b};
    for (const auto& fn : {&f, &g})
        for (const T& t : fn->breakpoints())
            if (a < t && t < b) pts.push_back(t);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const T& t = pts[i];
        if (i > 0 && !(f.eval_left(t) == g.eval_left(t))) return false;
        if (i + 1 < pts.size() && !(f.eval_right(t) == g.eval_right(t))) return false;
        // Midpoint agreement pins the affine piece between consecutive points.
        if (i + 1 < pts.size()) {
            const T mid = (t + pts[i + 1]) / T(2);
            if (!(f.eval_right(mid) == g.eval_right(mid))) return false;
        }
    }
    return true;
}

}  // namespace plradon
