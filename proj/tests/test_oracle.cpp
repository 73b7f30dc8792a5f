#include "uniairy/oracle.hpp"
#include "uniairy/special.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("bessel J special values") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Real tol = pow10(-38);

    OracleValue j0 = bessel_J(Real(0), Complex(Real("1e-50")), ctx);
    CHECK(abs(j0.value - Complex(Real(1))) < pow10(-30));

    OracleValue j1 = bessel_J(Real(1), Complex(Real(2)), ctx);
    CHECK(abs(j1.value - Complex(Real("0.5767248077568733872024482422691370869203"))) < tol);
    CHECK(j1.est_correct_digits >= (long)ctx.digits);

    OracleValue j1c = bessel_J(Real(1), Complex(Real(2), Real(1)), ctx);
    Complex ref(Real("0.7906233925534283360794576590957144279037"),
                Real("-0.07993269416777605386699494996306006236261"));
    CHECK(abs(j1c.value - ref) < tol);

    // half-integer order closed form: J_{1/2}(x) = sqrt(2/(pi x)) sin x
    OracleValue jh = bessel_J(Real(1) / 2, Complex(Real(2)), ctx);
    Real want = sqrt(Real(1) / pi_const()) * sin(Real(2));
    CHECK(abs(jh.value - Complex(want)) < tol);
}

TEST_CASE("bessel Y and H1 values") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Real tol = pow10(-38);
    OracleValue y0 = bessel_Y(0, Complex(Real(1)), ctx);
    CHECK(abs(y0.value - Complex(Real("0.08825696421567695798292676602351516282782"))) < tol);

    OracleValue h = bessel_H1(Real(1) / 3, Complex(Real(2)), ctx);
    Complex ref(Real("0.4429398181485762122504224177359511644234"),
                Real("0.3431999662603443422614991773131130248723"));
    CHECK(abs(h.value - ref) < tol);
}

TEST_CASE("bessel recurrence and wronskian") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Complex x(Real(2), Real("0.5"));
    Real nu(3);
    Complex jm = bessel_J(nu - 1, x, ctx).value;
    Complex j = bessel_J(nu, x, ctx).value;
    Complex jp = bessel_J(nu + 1, x, ctx).value;
    CHECK(abs(jm + jp - Complex(2 * nu) * j / x) < pow10(-36));

    // W{J_nu, H1_nu} = J H1' - J' H1 = 2i / (pi x), derivatives via recurrence
    Real mu = Real(1) / 3;
    Complex J = bessel_J(mu, x, ctx).value;
    Complex Jp = (bessel_J(mu - 1, x, ctx).value - bessel_J(mu + 1, x, ctx).value) / Real(2);
    Complex H = bessel_H1(mu, x, ctx).value;
    Complex Hp = (bessel_H1(mu - 1, x, ctx).value - bessel_H1(mu + 1, x, ctx).value) / Real(2);
    Complex w = J * Hp - Jp * H;
    CHECK(abs(w - Complex(Real(0), Real(2)) / (pi_const() * x)) < pow10(-36));
}

TEST_CASE("airy oracle values") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Real tol = pow10(-38);
    // Ai(0) = 3^{-2/3} / Gamma(2/3), Ai'(0) = -3^{-1/3} / Gamma(1/3)
    Complex ai0 = airy_oracle(Complex(), AiryKind::Ai, 0, ctx).value;
    CHECK(abs(ai0 - Complex(Real("0.355028053887817239260063186004183176398"))) < tol);
    CHECK(abs(ai0 - Complex(pow(Real(3), Real(-2) / 3) / gamma_fn(Real(2) / 3, ctx))) < tol);
    Complex aip0 = airy_oracle(Complex(), AiryKind::AiPrime, 0, ctx).value;
    CHECK(abs(aip0 + Complex(pow(Real(3), Real(-1) / 3) / gamma_fn(Real(1) / 3, ctx))) < tol);

    Complex x(Real(2), Real(1));
    Complex ai = airy_oracle(x, AiryKind::Ai, 0, ctx).value;
    CHECK(abs(ai - Complex(Real("0.001697766857265456822764848552867105171838"),
                           Real("-0.04071801705322398123430126958390999202634"))) < tol);
    Complex aip = airy_oracle(x, AiryKind::AiPrime, 0, ctx).value;
    CHECK(abs(aip - Complex(Real("-0.01511027928322695793040823595514619963359"),
                            Real("0.06245895471360013815519459166930613386421"))) < tol);

    // Ai_0 + e^{2 pi i/3} Ai_{-1} + e^{-2 pi i/3} Ai_1 = 0
    Complex rot = exp(Complex(Real(0), 2 * pi_const() / 3));
    Complex s = airy_oracle(x, AiryKind::Ai, 0, ctx).value +
                rot * airy_oracle(x, AiryKind::Ai, -1, ctx).value +
                conj(rot) * airy_oracle(x, AiryKind::Ai, 1, ctx).value;
    CHECK(abs(s) < pow10(-36));
}

TEST_CASE("exact AB conjugate symmetry") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    Complex z(Real("0.6"), Real("0.2"));
    ExactABResult up = exact_AB(Real(10), z, 2, ctx);
    ExactABResult dn = exact_AB(Real(10), conj(z), 2, ctx);
    CHECK(abs(dn.A - conj(up.A)) < pow10(-24) * abs(up.A));
    CHECK(abs(dn.B - conj(up.B)) < pow10(-24) * abs(up.B));
}
