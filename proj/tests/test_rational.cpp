#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <hillpt/rational.hpp>

using namespace hillpt;

TEST_CASE("big integer ring arithmetic agrees with 64-bit arithmetic") {
    std::mt19937_64 rng(11);
    auto draw = [&] { return std::int64_t(rng() % 2000000001ull) - 1000000000; };
    for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t a = draw();
        const std::int64_t b = draw();
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_string() == std::to_string(a / b));
            CHECK(r.to_string() == std::to_string(a % b));
        }
    }
}

TEST_CASE("division truncates toward zero with remainder signed like the dividend") {
    BigInt q, r;
    BigInt::divmod(BigInt(7), BigInt(-2), q, r);
    CHECK(q.to_string() == "-3");
    CHECK(r.to_string() == "1");
    BigInt::divmod(BigInt(-7), BigInt(2), q, r);
    CHECK(q.to_string() == "-3");
    CHECK(r.to_string() == "-1");
}

TEST_CASE("construction handles the extreme 64-bit values") {
    CHECK(BigInt(INT64_MIN).to_string() == "-9223372036854775808");
    CHECK(BigInt(INT64_MAX).to_string() == "9223372036854775807");
    CHECK((BigInt(INT64_MIN) + BigInt(INT64_MAX)).to_string() == "-1");
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("shifts and multiplication build exact powers of two") {
    CHECK(BigInt(1).shifted_left(128).to_string() == "340282366920938463463374607431768211456");
    CHECK(BigInt(1).shifted_left(200).shifted_right(200).to_string() == "1");
    CHECK(BigInt(12).trailing_zero_bits() == 2);
    CHECK(BigInt(1).shifted_left(75).trailing_zero_bits() == 75);
    const BigInt big = BigInt(1000000007) * BigInt(998244353) * BigInt(1000000007);
    CHECK(big.to_string() == "998244366975420990913973297");
}

TEST_CASE("gcd is nonnegative and handles zero operands") {
    CHECK(gcd(BigInt(48), BigInt(-18)).to_string() == "6");
    CHECK(gcd(BigInt(-48), BigInt(-18)).to_string() == "6");
    CHECK(gcd(BigInt(0), BigInt(5)).to_string() == "5");
    CHECK(gcd(BigInt(5), BigInt(0)).to_string() == "5");
    CHECK(gcd(BigInt(0), BigInt(0)).is_zero());
    CHECK(gcd(BigInt(1).shifted_left(100), BigInt(1).shifted_left(60)).to_string() ==
          BigInt(1).shifted_left(60).to_string());
}

TEST_CASE("factorials are exact") {
    CHECK(factorial(0).to_string() == "1");
    CHECK(factorial(1).to_string() == "1");
    CHECK(factorial(12).to_string() == "479001600");
    CHECK(factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("double conversion of big integers tracks magnitude") {
    CHECK(BigInt(123456789).to_double() == 123456789.0);
    CHECK(BigInt(1).shifted_left(100).to_double() == doctest::Approx(std::ldexp(1.0, 100)));
    CHECK(BigInt(-3).to_double() == -3.0);
}

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK(Rational(7, 3).num().to_string() == "7");
    CHECK(Rational(7, 3).den().to_string() == "3");
}

TEST_CASE("rational field arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK((-Rational(5, 7)).to_string() == "-5/7");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);

    Rational acc(0);
    for (int k = 1; k <= 50; ++k) acc += Rational(1, k) - Rational(1, k + 1);
    CHECK(acc == Rational(50, 51));  // telescoping sum
}

TEST_CASE("every finite double converts to an exact dyadic rational") {
    CHECK(to_rational(0.75) == Rational(3, 4));
    CHECK(to_rational(-2.5) == Rational(-5, 2));
    CHECK(to_rational(3.0) == Rational(3));
    CHECK(to_rational(0.0) == Rational(0));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const double frac = double(rng() >> 11) * 0x1p-53 * 2.0 - 1.0;
        const double v = std::ldexp(frac, int(rng() % 600) - 300);
        CHECK(to_rational(v).to_double() == v);
    }
    CHECK_THROWS_AS(to_rational(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("exact parameter lifting preserves every coupling") {
    const OscillatorParams p{1.0, 1.0, 1.0, 2.0};
    const OscillatorParamsT<Rational> q = exact_params(p);
    CHECK(q.beta == Rational(1));
    CHECK(q.c == Rational(1));
    CHECK(q.delta == Rational(1));
    CHECK(q.s == Rational(2));
    CHECK(exact_params({0.5, 0.25, -0.75, 1.5}).s == Rational(3, 2));
}

TEST_CASE("rational matrices support exact linear algebra") {
    RationalMatrix m(2, 2);
    m << Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5);
    const RationalMatrix sum = m + m;
    CHECK(sum(0, 0) == Rational(1));
    CHECK(sum(1, 1) == Rational(2, 5));
    const RationalMatrix prod = m * m;
    CHECK(prod(0, 0) == Rational(1, 4) + Rational(1, 12));
}
