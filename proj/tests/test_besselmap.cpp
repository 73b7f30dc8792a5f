#include "uniairy/besselmap.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("xi and zeta on the principal interval") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Complex xi, zeta;
    bessel_xi_zeta(Complex(Real("0.5")), xi, zeta, ctx);
    CHECK(abs(xi - Complex(Real("0.4509324931403780618613231765550322605556"))) < pow10(-35));
    CHECK(abs(zeta - Complex(Real("0.7705518364338154736721680382239424799323"))) < pow10(-35));
    CHECK(xi.im.is_zero());

    // beyond the turning point xi is positive imaginary, zeta negative real
    bessel_xi_zeta(Complex(Real(2)), xi, zeta, ctx);
    CHECK(xi.re.is_zero());
    CHECK(abs(xi.im - Real("0.6848532563722795473732318804127047388771")) < pow10(-35));
    CHECK(zeta.re < 0);
    CHECK(zeta.im.is_zero());

    // turning point maps to zero
    bessel_xi_zeta(Complex(Real(1)), xi, zeta, ctx);
    CHECK(abs(xi).is_zero());
    CHECK(abs(zeta).is_zero());
}

TEST_CASE("xi respects conjugation and rejects the cut") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Complex z(Real("0.7"), Real("0.3"));
    Complex xi1, zeta1, xi2, zeta2;
    bessel_xi_zeta(z, xi1, zeta1, ctx);
    bessel_xi_zeta(conj(z), xi2, zeta2, ctx);
    CHECK(abs(xi2 - conj(xi1)) < pow10(-35));
    CHECK(abs(zeta2 - conj(zeta1)) < pow10(-35));
    CHECK_THROWS_AS(bessel_xi_zeta(Complex(Real(-1)), xi1, zeta1, ctx), std::domain_error);
}

TEST_CASE("first coefficient functions") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    // Fhat_1 = z^2 (z^2 + 4) / (8 (z^2 - 1)^3): at z = 3 this is 117/4096
    Complex z{Real(3)};
    Complex w(Real(0), -sqrt(Real(8)));
    Complex v = model.fhat(1).eval_with_surd(z, w);
    CHECK(abs(v - Complex(Real(117) / 4096)) < pow10(-34));

    // Ehat_s at the references: rational C_s at the origin, 0 at -+ i inf
    auto st = StirlingTable::build(9);
    for (int s = 1; s <= 9; ++s) {
        CHECK(model.ehat_reference(s, 0) == st.at(s));
        CHECK(model.ehat_reference(s, 1) == Rational(0));
        CHECK(model.ehat_reference(s, -1) == Rational(0));
    }
}

TEST_CASE("script E includes the xi tail with alternating sign") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Complex z{Real("0.5")};
    Complex xi, zeta;
    bessel_xi_zeta(z, xi, zeta, ctx);
    for (int s : {1, 2, 3}) {
        Complex eh = model.ehat(s, z, ctx);
        Complex want = eh + (s % 2 ? Real(-1) : Real(1)) * Real(model.seq().at(s)) /
                                (Real(s) * pow_int(xi, s));
        CHECK(abs(model.script_E(s, z, false, ctx) - want) < pow10(-34));
        Complex want_t = eh + (s % 2 ? Real(-1) : Real(1)) * Real(model.seq().at_tilde(s)) /
                                  (Real(s) * pow_int(xi, s));
        CHECK(abs(model.script_E(s, z, true, ctx) - want_t) < pow10(-34));
    }
}

TEST_CASE("sector classification") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Complex u{Real(100)};
    SectorLabel a = model.classify_sector(Complex(Real("0.5")), u, ctx);
    CHECK(a.j == 0);
    SectorLabel b = model.classify_sector(Complex(Real(0), Real(3)), u, ctx);
    CHECK(b.j == -1);
    SectorLabel c = model.classify_sector(Complex(Real(2)), u, ctx);
    CHECK(c.j == -1);
    CHECK(c.k == 1);
    SectorLabel d = model.classify_sector(Complex(Real(0), Real(-3)), u, ctx);
    CHECK(d.j == 1);
}

TEST_CASE("connection constants and delta decay") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    ConnectionData cd = model.connection(Real(100), ctx);
    // delta_{n,+-1} is tiny at nu = 100 and shrinks with n up to the optimal order
    Real d6 = cd.delta(6, ctx), d12 = cd.delta(12, ctx);
    CHECK(d6 < pow10(-10));
    CHECK(d12 < d6);
    CHECK(abs(d12 / Real("6.407303e-29") - 1) < Real("1e-5"));
    // mu_n -> 1 for large nu
    CHECK(abs(cd.mu(6, ctx) - 1) < pow10(-2));
}
