#include "uniairy/precision.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("complex arithmetic basics") {
    ScopedPrecision sp(50);
    Complex a(Real(1), Real(2)), b(Real(3), Real(4));
    Complex p = a * b;
    CHECK(p.re == Real(-5));
    CHECK(p.im == Real(10));
    Complex q = p / b;
    CHECK(abs(q - a) < pow10(-45));
    CHECK(conj(a).im == Real(-2));
    CHECK(norm(a) == Real(5));
}

TEST_CASE("exp/log/sqrt principal branches") {
    ScopedPrecision sp(60);
    Real pi = pi_const();
    // exp(i pi) = -1
    Complex e = exp(Complex(Real(0), pi));
    CHECK(abs(e - Complex(Real(-1))) < pow10(-55));
    // principal sqrt of -1 is +i
    Complex s = sqrt(Complex(Real(-1), Real(0)));
    CHECK(abs(s - Complex(Real(0), Real(1))) < pow10(-55));
    // log is principal: arg in (-pi, pi]
    CHECK(abs(log(Complex(Real(-2), Real(0))).im - pi) < pow10(-55));
    // log(exp(w)) = w for |Im w| < pi
    Complex w(Real("0.3"), Real("-1.2"));
    CHECK(abs(log(exp(w)) - w) < pow10(-55));
}

TEST_CASE("pow_int and hyperbolics") {
    ScopedPrecision sp(50);
    Complex z(Real(2), Real(1));
    CHECK(abs(pow_int(z, 3) - z * z * z) < pow10(-45));
    CHECK(abs(pow_int(z, -2) * z * z - Complex(Real(1))) < pow10(-45));
    // cosh^2 - sinh^2 = 1
    Complex c = cosh(z), s = sinh(z);
    CHECK(abs(c * c - s * s - Complex(Real(1))) < pow10(-45));
}

TEST_CASE("scoped precision is restored") {
    unsigned before = Real::default_precision();
    {
        ScopedPrecision sp(123);
        CHECK(Real::default_precision() == 123);
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("precision context validates digits") {
    CHECK_THROWS_AS(PrecisionContext(10), std::domain_error);
    PrecisionContext ctx(30);
    CHECK(ctx.working_digits() > ctx.digits);
}

TEST_CASE("to_string gives 17-digit scientific form") {
    ScopedPrecision sp(40);
    std::string s = to_string(Real(1) / 3);
    CHECK(s.find('e') != std::string::npos);
    CHECK(s.substr(0, 6) == "3.3333");
    // values far outside double range must not collapse to inf
    Real huge = pow(Real(10), 100000);
    std::string h = to_string(huge);
    CHECK(h.find("inf") == std::string::npos);
    CHECK(h.find("e+100000") != std::string::npos);
}
