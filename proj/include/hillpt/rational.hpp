#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hillpt/oscillator.hpp"

namespace hillpt {

// Arbitrary-precision signed integer over base-2^32 limbs, little endian.
// Covers exactly what the exact determinant checks need: ring arithmetic,
// gcd, and decimal/double conversion for reporting.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_even() const { return sign_ == 0 || (mag_[0] & 1u) == 0; }

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division: q rounds toward zero, r has the sign of a.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt shifted_left(std::size_t bits) const;
    BigInt shifted_right(std::size_t bits) const;
    std::size_t trailing_zero_bits() const;  // undefined for zero

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    double to_double() const;
    std::string to_string() const;

    friend BigInt gcd(BigInt a, BigInt b);  // nonnegative result, gcd(0, 0) = 0

  private:
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;
};

BigInt factorial(int n);

// Always reduced, denominator positive, zero canonicalized to 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on b = 0

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a - b).sign() < 0;
    }

    double to_double() const;
    std::string to_string() const;

  private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double v);

inline OscillatorParamsT<Rational> exact_params(const OscillatorParams& p) {
    validate_params(p);
    return {to_rational(p.beta), to_rational(p.c), to_rational(p.delta), to_rational(p.s)};
}

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace hillpt

namespace Eigen {
template <>
struct NumTraits<hillpt::Rational> : GenericNumTraits<hillpt::Rational> {
    using Real = hillpt::Rational;
    using NonInteger = hillpt::Rational;
    using Nested = hillpt::Rational;
    using Literal = std::int64_t;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 128,
        MulCost = 128,
    };
};
}  // namespace Eigen
