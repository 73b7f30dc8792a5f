#include "uniairy/seqcoeff.hpp"

#include <doctest.h>

using namespace uniairy;

TEST_CASE("airy sequence first terms") {
    auto seq = AirySeqTable::build(12);
    CHECK(seq.at(1) == Rational(5, 72));
    CHECK(seq.at(2) == Rational(5, 72));
    CHECK(seq.at(3) == Rational(1105, 10368));
    CHECK(seq.at_tilde(1) == Rational(-7, 72));
    CHECK(seq.at_tilde(2) == Rational(-7, 72));
    CHECK(seq.at_tilde(3) == Rational(-1463, 10368));
    // high-order magnitudes (decimal checks of the exact rationals)
    ScopedPrecision sp(30);
    CHECK(abs(Real(seq.at(12)) / Real("1.8136050419e4") - 1) < Real("1e-9"));
    CHECK(abs(Real(seq.at_tilde(12)) / Real("-1.9301095748e4") - 1) < Real("1e-9"));
}

TEST_CASE("extend_sequence recursion by hand") {
    // b3 = 3 b2 / 2 + b1^2 / 2
    auto b = extend_sequence(Rational(1), Rational(1), 3);
    CHECK(b[2] == Rational(2));
    auto c = extend_sequence(Rational(1, 2), Rational(1, 3), 4);
    CHECK(c[2] == Rational(3, 2) * Rational(1, 3) + Rational(1, 2) * Rational(1, 4));
}

TEST_CASE("bernoulli numbers") {
    auto B = bernoulli_numbers(8);
    CHECK(B[0] == Rational(1));
    CHECK(B[1] == Rational(1, 2)); // B_1^+ convention; only even indices are used downstream
    CHECK(B[2] == Rational(1, 6));
    CHECK(B[3] == Rational(0));
    CHECK(B[4] == Rational(-1, 30));
    CHECK(B[6] == Rational(1, 42));
    CHECK(B[8] == Rational(-1, 30));
}

TEST_CASE("stirling constants") {
    auto st = StirlingTable::build(9);
    CHECK(st.at(1) == Rational(1, 12));
    CHECK(st.at(2) == Rational(0));
    CHECK(st.at(3) == Rational(-1, 360));
    CHECK(st.at(5) == Rational(1, 1260));
    CHECK(st.at(7) == Rational(-1, 1680));
}

TEST_CASE("lambda caps") {
    PrecisionContext ctx(40);
    ScopedPrecision sp(ctx);
    CHECK(abs(lambda_cap(3, ctx) - 1) < pow10(-35));
    CHECK(abs(lambda_cap(4, ctx) - pi_const() / 4) < pow10(-35));
    // Gamma recurrence: Lambda_{p+2} = Lambda_p (p-1)/p
    for (int p = 2; p <= 20; ++p)
        CHECK(abs(lambda_cap(p + 2, ctx) - lambda_cap(p, ctx) * (p - 1) / p) < pow10(-30));
    auto tab = LambdaTable::build(64, ctx);
    for (int p = 2; p <= 64; ++p) CHECK(tab.at(p) > Real(1) / (p - 1));
}

TEST_CASE("formal series exp/log round trip") {
    FormalSeries s = FormalSeries::zero(6);
    for (int i = 1; i <= 6; ++i) s.c[i] = Rational(i, i + 3);
    FormalSeries e = exp_series(s);
    CHECK(e.c[0] == Rational(1));
    FormalSeries back = log_series(e);
    for (int i = 0; i <= 6; ++i) CHECK(back.c[i] == s.c[i]);
    FormalSeries alt = neg_alternate(s);
    CHECK(alt.c[1] == -s.c[1]);
    CHECK(alt.c[2] == s.c[2]);
}

TEST_CASE("dlmf 9.7 coefficients") {
    auto u = dlmf97_u(4), v = dlmf97_v(4);
    CHECK(u[0] == Rational(1));
    CHECK(u[1] == Rational(5, 72));
    CHECK(v[1] == Rational(-7, 72));
    // v_k = -(6k+1)/(6k-1) u_k
    for (int k = 1; k <= 4; ++k) CHECK(v[k] == Rational(-(6 * k + 1), 6 * k - 1) * u[k]);
}
