#include "uniairy/airylg.hpp"
#include "uniairy/oracle.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("eta_bound formula") {
    ScopedPrecision sp(40);
    Real g("0.01"), b("0.5"), u(10);
    Real expect = g / pow(u, 3) * exp(b / u + g / pow(u, 3));
    CHECK(abs(eta_bound(g, b, u, 3) - expect) < pow10(-35));
}

TEST_CASE("bound inputs match the hand-evaluated n=2 formulas") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    Complex u{Real(10)}, xi{Real(1)};
    AiryBoundInputs bi = bound_inputs(u, xi, 2, ctx);
    // gamma_2 = 2 a_2 Lambda_3 + (1/u) Lambda_4 a_1^2, beta_2 = 4 a_1 Lambda_2
    Real a1 = Real(5) / 72;
    Real g_expect = 2 * a1 + pi_const() / 4 * a1 * a1 / 10; // Lambda_3 = 1, Lambda_4 = pi/4
    CHECK(abs(bi.gamma_n - g_expect) < pow10(-30));
    Real b_expect = 4 * a1 * lambda_cap(2, ctx);
    CHECK(abs(bi.beta_n - b_expect) < pow10(-30));
    // tilde versions use |a~_s| = 7/72
    Real at = Real(7) / 72;
    CHECK(abs(bi.gamma_tilde_n - (2 * at + pi_const() / 4 * at * at / 10)) < pow10(-30));
    CHECK(abs(bi.beta_tilde_n - 4 * at * lambda_cap(2, ctx)) < pow10(-30));
}

TEST_CASE("airy LG expansion vs oracle, branch 0") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    Complex u{Real(10)}, xi{Real(1)};
    Complex zeta = pow(Real(1.5) * xi, Real(2) / 3);
    Complex x = pow(Real(10), Real(2) / 3) * zeta;
    for (AiryKind which : {AiryKind::Ai, AiryKind::AiPrime}) {
        Complex ref = airy_oracle(x, which, 0, ctx).value;
        for (int n : {3, 6}) {
            AiryExpansionResult r = airy_lg(u, xi, n, which, 0, ctx);
            Real eta = abs(ref / r.value - Complex(Real(1)));
            CHECK(eta <= r.bound);
            CHECK(r.bound < pow10(-2)); // bound itself is small here
        }
    }
}

TEST_CASE("airy LG expansion vs oracle, rotated branches") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    Complex u{Real(8)};
    for (int branch : {1, -1}) {
        // keep u^{2/3} zeta inside the validity sector of T_j
        Complex xi = polar(Real(2), Real(branch) * Real("2.5"));
        Complex zeta = pow(Real(1.5) * xi, Real(2) / 3);
        Complex x = pow(Real(8), Real(2) / 3) * zeta;
        Complex ref = airy_oracle(x, AiryKind::Ai, branch, ctx).value;
        AiryExpansionResult r = airy_lg(u, xi, 5, AiryKind::Ai, branch, ctx);
        Real eta = abs(ref / r.value - Complex(Real(1)));
        CHECK(eta <= r.bound);
    }
}

TEST_CASE("airy LG rejects invalid input") {
    PrecisionContext ctx(30);
    ScopedPrecision sp(ctx);
    CHECK_THROWS_AS(airy_lg(Complex(Real(10)), Complex(), 4, AiryKind::Ai, 0, ctx),
                    std::domain_error);
    CHECK_THROWS_AS(airy_lg(Complex(Real(10)), Complex(Real(1)), 1, AiryKind::Ai, 0, ctx),
                    std::domain_error);
    CHECK_THROWS_AS(airy_lg(Complex(Real(10)), Complex(Real(1)), 4, AiryKind::Ai, 2, ctx),
                    std::domain_error);
    // rotated u pushes u^{2/3} zeta out of the branch-0 sector
    CHECK_THROWS_AS(airy_lg(polar(Real(10), Real("1.4")), polar(Real(1), Real("2.5")), 4,
                            AiryKind::Ai, 0, ctx),
                    std::domain_error);
}
