#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plradon {

// Exact rational, GMP-backed. Always stored canonically: lowest terms,
// denominator > 0, zero as 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}           // NOLINT: implicit by design
    Rat(long num, long den) : v_(num, den) { require_nonzero_den(); v_.canonicalize(); }
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        require_nonzero_den();
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat pow2(long e) {
        // 2^e for any sign of e
        mpz_class p = 1;
        p <<= static_cast<unsigned long>(e < 0 ? -e : e);
        return e < 0 ? Rat(mpz_class(1), p) : Rat(p, mpz_class(1));
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

private:
    void require_nonzero_den() {
        if (sgn(v_.get_den()) == 0) throw std::domain_error("Rat: zero denominator");
    }

    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace plradon
