#pragma once

#include <string>

#include "plradon/rational.hpp"

namespace plradon {

// Element of the quadratic field Q(sqrt(3)): value a + b*sqrt(3) with a, b
// rational. The representation is unique because sqrt(3) is irrational, so
// equality and sign are exactly decidable. All arithmetic is closed:
//   (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3,
// and division goes through the conjugate a - b√3.
class QS3 {
public:
    QS3() = default;
    QS3(long n) : a_(n) {}               // NOLINT: implicit by design
    QS3(const Rat& a) : a_(a) {}         // NOLINT: implicit by design
    QS3(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static QS3 sqrt3() { return QS3(Rat(0), Rat(1)); }

    const Rat& rat_part() const { return a_; }
    const Rat& sqrt3_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QS3 operator-() const { return QS3(-a_, -b_); }
    QS3 operator+(const QS3& o) const { return QS3(a_ + o.a_, b_ + o.b_); }
    QS3 operator-(const QS3& o) const { return QS3(a_ - o.a_, b_ - o.b_); }
    QS3 operator*(const QS3& o) const {
        return QS3(a_ * o.a_ + Rat(3) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QS3 operator/(const QS3& o) const {
        if (o.is_zero()) throw std::domain_error("QS3: division by zero");
        // 1/(c + d√3) = (c - d√3)/(c² - 3d²); the norm is nonzero for o != 0.
        Rat norm = o.a_ * o.a_ - Rat(3) * o.b_ * o.b_;
        return QS3((a_ * o.a_ - Rat(3) * b_ * o.b_) / norm, (b_ * o.a_ - a_ * o.b_) / norm);
    }

    QS3& operator+=(const QS3& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QS3& operator-=(const QS3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QS3& operator*=(const QS3& o) { *this = *this * o; return *this; }
    QS3& operator/=(const QS3& o) { *this = *this / o; return *this; }

    // Exact sign of a + b√3, via case analysis on the signs of a and b and,
    // when they disagree, the comparison of a² with 3b².
    int sign() const;

    // Nearest binary64. Evaluated in GMP floating point at a precision chosen
    // from the operand bit sizes so that even a catastrophically cancelling
    // a + b√3 is resolved; relative error is below 2^-50 for any input whose
    // numerators and denominators are below 2^500.
    double to_double() const;

    std::string to_string() const;

    bool operator==(const QS3& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QS3& o) const { return !(*this == o); }
    bool operator<(const QS3& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QS3& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QS3& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QS3& o) const { return (*this - o).sign() >= 0; }

private:
    Rat a_;
    Rat b_;
};

inline QS3 abs(const QS3& x) { return x.sign() < 0 ? -x : x; }
inline QS3 min(const QS3& a, const QS3& b) { return a < b ? a : b; }
inline QS3 max(const QS3& a, const QS3& b) { return a < b ? b : a; }

}  // namespace plradon
