#include "hillpt/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hillpt {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1u;
    while (m != 0) {
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.mag_.size() != b.mag_.size()) return a.mag_.size() < b.mag_.size() ? -1 : 1;
    for (std::size_t i = a.mag_.size(); i-- > 0;) {
        if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const std::vector<std::uint32_t>& lo = a.size() < b.size() ? a : b;
    const std::vector<std::uint32_t>& hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> out(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
        borrow = d < 0 ? 1 : 0;
        if (d < 0) d += (std::int64_t{1} << 32);
        out[i] = static_cast<std::uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.sign_ = big.sign_;
        r.mag_ = BigInt::sub_mag(big.mag_, small.mag_);
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.mag_.size(); ++j) {
            std::uint64_t cur = r.mag_[i + j] + carry +
                                static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j];
            r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.mag_.size();
        while (carry != 0) {
            std::uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::shifted_left(std::size_t bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    const std::size_t limbs = bits / 32, rem = bits % 32;
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() + limbs + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(mag_[i]) << rem;
        r.mag_[i + limbs] |= static_cast<std::uint32_t>(v & 0xffffffffu);
        r.mag_[i + limbs + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigInt BigInt::shifted_right(std::size_t bits) const {
    if (sign_ == 0) return *this;
    const std::size_t limbs = bits / 32, rem = bits % 32;
    if (limbs >= mag_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() - limbs, 0);
    for (std::size_t i = 0; i < r.mag_.size(); ++i) {
        std::uint64_t v = mag_[i + limbs] >> rem;
        if (rem != 0 && i + limbs + 1 < mag_.size())
            v |= static_cast<std::uint64_t>(mag_[i + limbs + 1]) << (32 - rem);
        r.mag_[i] = static_cast<std::uint32_t>(v);
    }
    r.trim();
    return r;
}

std::size_t BigInt::trailing_zero_bits() const {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        if (mag_[i] == 0) {
            bits += 32;
        } else {
            std::uint32_t v = mag_[i];
            while ((v & 1u) == 0) {
                ++bits;
                v >>= 1;
            }
            break;
        }
    }
    return bits;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a, b);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

// Bit-by-bit long division; only used for decimal printing and small checks,
// never inside the elimination hot path.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("division by zero");
    q = BigInt();
    r = BigInt();
    const std::size_t total_bits = a.mag_.size() * 32;
    for (std::size_t i = total_bits; i-- > 0;) {
        r = r.shifted_left(1);
        if ((a.mag_[i / 32] >> (i % 32)) & 1u) {
            if (r.sign_ == 0) {
                r.sign_ = 1;
                r.mag_.assign(1, 1);
            } else {
                r.mag_ = add_mag(r.mag_, {1u});
            }
        }
        if (cmp_mag(r, b) >= 0 && r.sign_ != 0) {
            r.mag_ = sub_mag(r.mag_, b.mag_);
            r.trim();
            BigInt bit;
            bit.sign_ = 1;
            bit.mag_.assign(1, 1);
            q = q.shifted_left(1) + bit;
        } else {
            q = q.shifted_left(1);
        }
    }
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    q.trim();
    r.trim();
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    double v = 0.0;
    std::size_t top = mag_.size();
    std::size_t used = std::min<std::size_t>(top, 3);
    for (std::size_t i = 0; i < used; ++i)
        v = v * 4294967296.0 + static_cast<double>(mag_[top - 1 - i]);
    const double scaled = std::ldexp(v, static_cast<int>(32 * (top - used)));
    return sign_ > 0 ? scaled : -scaled;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// Stein's binary gcd: shift/subtract only, no division.
BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.sign_ == 0 ? 0 : 1;
    b.sign_ = b.sign_ == 0 ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t za = a.trailing_zero_bits();
    const std::size_t zb = b.trailing_zero_bits();
    const std::size_t shift = std::min(za, zb);
    a = a.shifted_right(za);
    for (;;) {
        b = b.shifted_right(b.trailing_zero_bits());
        if (BigInt::cmp_mag(a, b) > 0) std::swap(a, b);
        b = b - a;
        if (b.is_zero()) return a.shifted_left(shift);
    }
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r = r * BigInt(i);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (!(g == BigInt(1))) {
        BigInt q, r;
        BigInt::divmod(num_, g, q, r);
        num_ = q;
        BigInt::divmod(den_, g, q, r);
        den_ = q;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational to_rational(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot convert non-finite double");
    if (v == 0.0) return Rational(0);
    int e = 0;
    const double m = std::frexp(v, &e);           // v = m * 2^e, |m| in [0.5, 1)
    const auto mi = static_cast<std::int64_t>(std::ldexp(m, 53));  // integer, exact
    const int shift = e - 53;
    if (shift >= 0) return Rational(BigInt(mi).shifted_left(static_cast<std::size_t>(shift)), BigInt(1));
    return Rational(BigInt(mi), BigInt(1).shifted_left(static_cast<std::size_t>(-shift)));
}

}  // namespace hillpt
