#include "uniairy/lgbounds.hpp"
#include "uniairy/oracle.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("eta_lg_bound formula") {
    ScopedPrecision sp(40);
    LGBoundTerms t{Real("2.5"), Real("0.4")};
    Real u(50);
    Real expect = Real("2.5") / pow(u, 4) * exp(Real("0.4") / u + Real("2.5") / pow(u, 4));
    CHECK(abs(eta_lg_bound(t, u, 4) - expect) < pow10(-35));
}

TEST_CASE("lg bound terms at a reference point") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    auto mode = QuadratureMode::adaptive(pow10(-25));
    LGBoundTerms t = lg_bound_terms(model, Complex(Real("0.5")), 0, 12, Real(100), mode, ctx);
    CHECK(t.omega > 0);
    CHECK(t.varpi > 0);
    CHECK(abs(t.omega / Real("4.2618091029e7") - 1) < Real("1e-6"));
    CHECK(abs(t.varpi / Real("0.3788") - 1) < Real("1e-3"));
    // lower order gives a smaller omega
    LGBoundTerms t4 = lg_bound_terms(model, Complex(Real("0.5")), 0, 4, Real(100), mode, ctx);
    CHECK(t4.omega < t.omega);
}

TEST_CASE("script AB matches the exact coefficient functions") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Real nu(10);
    Complex z{Real("0.5")};
    ScriptABResult r = script_AB_pair(model, z, nu, 2, ctx);
    ExactABResult ex = exact_AB(nu, z, 2, ctx);
    CHECK(abs(r.A.value - ex.A) <= r.A.certified_bound);
    CHECK(abs(r.B.value - ex.B) <= r.B.certified_bound);
    CHECK(r.A.certified_bound < pow10(-2));
    // script_AB agrees with the pair version
    ExpansionValue a = script_AB(model, z, nu, 2, ABKind::ScriptA, ctx);
    CHECK(abs(a.value - r.A.value) < pow10(-25));
}

TEST_CASE("script AB conjugate symmetry and cut rejection") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Real nu(20);
    Complex z(Real("0.6"), Real("0.25"));
    ScriptABResult up = script_AB_pair(model, z, nu, 2, ctx);
    ScriptABResult dn = script_AB_pair(model, conj(z), nu, 2, ctx);
    CHECK(abs(dn.A.value - conj(up.A.value)) < pow10(-24) * abs(up.A.value));
    CHECK(abs(dn.B.value - conj(up.B.value)) < pow10(-24) * abs(up.B.value));
    CHECK_THROWS_AS(script_AB_pair(model, Complex(Real(-2)), nu, 2, ctx), std::domain_error);
}

TEST_CASE("matching constant enclosure") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    MatchingConstant c = matching_constant_c(model, Real(10), 5, ctx);
    CHECK(abs(c.value - Real("0.65641978794547")) <= c.halfwidth + Real("1e-13"));
    CHECK(c.halfwidth < Real("1e-8"));
}

TEST_CASE("LG solution obeys its own eta bound") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    BesselModel model(13);
    Real nu(50);
    // on (0,1) the j=0 solution is proportional to H^(1); check via the bound
    Complex z(Real("0.4"), Real("0.1"));
    LGSolution w8 = lg_solution_W(model, z, 0, 8, nu, ctx);
    LGSolution w4 = lg_solution_W(model, z, 0, 4, nu, ctx);
    CHECK(w8.eta_bound < w4.eta_bound);
    CHECK(w8.eta_bound < pow10(-8));
    // values of different truncation orders agree within the combined bounds
    CHECK(abs(w8.value / w4.value - Complex(Real(1))) <= w4.eta_bound + w8.eta_bound +
                                                             w4.eta_bound * w8.eta_bound);
}
