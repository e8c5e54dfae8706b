#include "plradon/qsqrt3.hpp"

#include <cmath>
#include <stdexcept>

namespace plradon {

int QS3::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs disagree: |a| vs |b|√3 decides, i.e. a² vs 3b².
    const Rat lhs = a_ * a_;
    const Rat rhs = Rat(3) * b_ * b_;
    if (lhs == rhs) {
        // a² = 3b² with a, b nonzero would make √3 rational.
        throw std::logic_error("QS3: impossible a^2 == 3b^2 with nonzero parts");
    }
    return lhs > rhs ? sa : sb;
}

namespace {

mp_bitcnt_t value_bits(const Rat& r) {
    return mpz_sizeinbase(r.num().get_mpz_t(), 2) + mpz_sizeinbase(r.den().get_mpz_t(), 2);
}

}  // namespace

double QS3::to_double() const {
    if (b_.is_zero()) return a_.to_double();
    // Cancellation in a + b√3 is bounded: if a = p/q, b = r/s then
    // |a + b√3| >= 1 / (qs(|ps| + 2|rq|)), so doubling the operand bit count
    // plus slack is always enough working precision.
    const mp_bitcnt_t prec = 2 * (value_bits(a_) + value_bits(b_)) + 64;
    mpf_class fa(0, prec), fb(0, prec), three(3, prec);
    fa = a_.raw();
    fb = b_.raw();
    mpf_class root(0, prec);
    root = sqrt(three);
    mpf_class result(0, prec);
    result = fa + fb * root;
    const double d = result.get_d();
    if (std::isinf(d) || std::isnan(d)) throw std::overflow_error("QS3: magnitude overflows binary64");
    return d;
}

std::string QS3::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    return a_.to_string() + " + " + b_.to_string() + "*sqrt(3)";
}

}  // namespace plradon
