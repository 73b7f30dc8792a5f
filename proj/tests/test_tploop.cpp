#include "uniairy/oracle.hpp"
#include "uniairy/tploop.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("loop kernel l0") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    Complex z0{Real(1)};
    Real r0("0.5");
    // center value is exactly 2 pi
    CHECK(abs(l0_kernel(z0, z0, r0, ctx) - 2 * pi_const()) < pow10(-27));

    // closed form vs direct quadrature of |dt| / |t - z|
    Complex z(Real("1.1"), Real("0.15"));
    ContourSpec circ;
    circ.segments.push_back(ArcSegment{z0, r0, Real(0), 2 * pi_const()});
    Real quad = integrate_contour(
        [&](const Complex& t) { return Real(1) / abs(t - z); }, circ,
        QuadratureMode::adaptive(pow10(-25)), ctx);
    CHECK(abs(l0_kernel(z, z0, r0, ctx) - quad) < pow10(-20));

    // grows toward the rim, rejects the rim and beyond
    Real near_rim = l0_kernel(z0 + Complex(Real("0.4999")), z0, r0, ctx);
    CHECK(near_rim > l0_kernel(z0 + Complex(Real("0.4")), z0, r0, ctx));
    CHECK(near_rim > 20);
    CHECK_THROWS_AS(l0_kernel(z0 + Complex(r0), z0, r0, ctx), std::domain_error);
    CHECK_THROWS_AS(l0_kernel(z0 + Complex(Real("0.7")), z0, r0, ctx), std::domain_error);
}

TEST_CASE("loop data construction") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Real nu(50), r0("0.5");
    LoopData loop = build_loop_data(model, nu, 6, r0, ctx);

    CHECK(loop.gamma_paths.size() == 6);
    CHECK(loop.gamma_labels.size() == 6);
    CHECK(loop.rho > 0);
    CHECK(loop.Upsilon > 0);
    CHECK(loop.Upsilon_tilde > 0);
    CHECK(loop.omega_n_loop > 0);
    CHECK(loop.varpi_n_loop > 0);
    CHECK(loop.e_n > 0);
    CHECK(loop.d_2m2 >= loop.e_n);

    // suprema dominate sampled values of Re E_s on the circle
    for (int s = 1; s < 6; ++s) {
        if (s % 2 == 0) CHECK(loop.N[s] == loop.M[s]); // even s: (-1)^s drops out
        for (int k = 0; k < 16; ++k) {
            Complex t = loop.center + polar(r0, 2 * pi_const() * k / 16 + Real("0.01"));
            Real re = model.script_E(s, t, false, ctx).re;
            CHECK(re <= loop.M[s] * (1 + pow10(-20)) + pow10(-20));
            Real ret = model.script_E(s, t, true, ctx).re;
            CHECK(ret <= loop.M_tilde[s] * (1 + pow10(-20)) + pow10(-20));
        }
    }
}

TEST_CASE("cauchy loop integral vs exact coefficients") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Real nu(50), r0("0.5");
    int m = 2;
    LoopData loop = build_loop_data(model, nu, 2 * m + 2, r0, ctx);

    for (Real zr : {Real(1), Real("0.8"), Real("1.2")}) {
        Complex z{zr};
        ExpansionValue A = cauchy_AB(model, z, nu, m, ABKind::ScriptA, loop, ctx);
        ExpansionValue B = cauchy_AB(model, z, nu, m, ABKind::ScriptB, loop, ctx);
        ExactABResult ex = exact_AB(nu, z, m, ctx);
        CHECK(abs(A.value - ex.A) <= A.certified_bound);
        CHECK(abs(B.value - ex.B) <= B.certified_bound);
        CHECK(A.certified_bound < 1);
    }

    // order mismatch and out-of-disk evaluation are rejected
    CHECK_THROWS_AS(cauchy_AB(model, Complex(Real(1)), nu, 3, ABKind::ScriptA, loop, ctx),
                    std::invalid_argument);
    CHECK_THROWS_AS(cauchy_AB(model, Complex(Real("1.45")), nu, m, ABKind::ScriptA, loop, ctx),
                    std::domain_error);
}

TEST_CASE("trapezoid start point does not matter") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Real nu(50), r0("0.5");
    Complex z{Real("1.1")};
    Complex a = cauchy_trapezoid(model, z, nu, 2, ABKind::ScriptA, r0, 1024, Real(0), ctx);
    Complex b = cauchy_trapezoid(model, z, nu, 2, ABKind::ScriptA, r0, 1024, pi_const(), ctx);
    CHECK(abs(a - b) < pow10(-25) * abs(a));
}
