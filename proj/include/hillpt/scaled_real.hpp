#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace hillpt {

// Real number stored as mantissa * 2^exponent with the mantissa kept in
// +-[1, 2) (or exactly 0).  The series coefficients h_n decay roughly like
// n^{-n/3}, far below the double range for the n ~ 4000 needed by the
// asymptotic fits, so the exponent lives in a separate int64.
class ScaledReal {
  public:
    ScaledReal() = default;

    explicit ScaledReal(double v) { assign_normalized(v, 0); }

    static ScaledReal from_parts(double mantissa, std::int64_t exponent) {
        ScaledReal r;
        r.assign_normalized(mantissa, exponent);
        return r;
    }

    double mantissa() const { return mantissa_; }
    std::int64_t exponent() const { return exponent_; }
    bool is_zero() const { return mantissa_ == 0.0; }
    int sign() const { return mantissa_ > 0.0 ? 1 : (mantissa_ < 0.0 ? -1 : 0); }

    // Saturates to +-inf (or flushes to 0) when the exponent leaves double range.
    double to_double() const {
        if (mantissa_ == 0.0) return 0.0;
        if (exponent_ > 1100) return mantissa_ > 0.0 ? std::numeric_limits<double>::infinity()
                                                     : -std::numeric_limits<double>::infinity();
        if (exponent_ < -1140) return mantissa_ > 0.0 ? 0.0 : -0.0;
        return std::ldexp(mantissa_, static_cast<int>(exponent_));
    }

    // Natural log of |value|; -inf for zero.
    double log_abs() const {
        if (mantissa_ == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(mantissa_)) + static_cast<double>(exponent_) * ln2_;
    }

    ScaledReal operator-() const {
        ScaledReal r = *this;
        r.mantissa_ = -r.mantissa_;
        return r;
    }

    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
        if (a.mantissa_ == 0.0) return b;
        if (b.mantissa_ == 0.0) return a;
        const ScaledReal& big = (a.exponent_ >= b.exponent_) ? a : b;
        const ScaledReal& small = (a.exponent_ >= b.exponent_) ? b : a;
        const std::int64_t gap = big.exponent_ - small.exponent_;
        if (gap > 1074) return big;
        ScaledReal r;
        r.assign_normalized(big.mantissa_ + std::ldexp(small.mantissa_, static_cast<int>(-gap)),
                            big.exponent_);
        return r;
    }

    friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
        if (a.mantissa_ == 0.0 || b.mantissa_ == 0.0) return ScaledReal();
        ScaledReal r;
        r.assign_normalized(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
        return r;
    }

    friend ScaledReal operator*(const ScaledReal& a, double d) { return a * ScaledReal(d); }
    friend ScaledReal operator*(double d, const ScaledReal& a) { return a * ScaledReal(d); }

    friend ScaledReal operator/(const ScaledReal& a, double d) {
        if (a.mantissa_ == 0.0) return ScaledReal();
        ScaledReal s(d);
        ScaledReal r;
        r.assign_normalized(a.mantissa_ / s.mantissa_, a.exponent_ - s.exponent_);
        return r;
    }

    ScaledReal& operator+=(const ScaledReal& b) { return *this = *this + b; }
    ScaledReal& operator*=(const ScaledReal& b) { return *this = *this * b; }

  private:
    static constexpr double ln2_ = 0.6931471805599453094;

    void assign_normalized(double m, std::int64_t e) {
        if (m == 0.0 || !std::isfinite(m)) {
            mantissa_ = m == 0.0 ? 0.0 : m;  // propagate inf/nan mantissas as-is
            exponent_ = 0;
            return;
        }
        int fe = 0;
        const double fm = std::frexp(m, &fe);  // fm in +-[0.5, 1)
        mantissa_ = fm * 2.0;
        exponent_ = e + fe - 1;
    }

    double mantissa_ = 0.0;
    std::int64_t exponent_ = 0;
};

}  // namespace hillpt
