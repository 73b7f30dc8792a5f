#pragma once

#include "uniairy/precision.hpp"

#include <vector>

namespace uniairy {

// b[s] for s = 1..S (stored 0-based: result[s-1] = b_s) from
// b_{s+1} = (s+1) b_s / 2 + (1/2) sum_{j=1}^{s-1} b_j b_{s-j}.
std::vector<Rational> extend_sequence(const Rational& b1, const Rational& b2, int S);

struct AirySeqTable {
    std::vector<Rational> a;       // a_s, 1-based via a[s-1]
    std::vector<Rational> a_tilde; // same indexing

    static AirySeqTable build(int S);
    const Rational& at(int s) const { return a.at(s - 1); }
    const Rational& at_tilde(int s) const { return a_tilde.at(s - 1); }
};

// Bernoulli numbers B_0..B_N (Akiyama–Tanigawa, exact).
std::vector<Rational> bernoulli_numbers(int N);

struct StirlingTable {
    // C[s] for s = 1..J via C.at(s); C[0] unused (zero).
    std::vector<Rational> C;

    static StirlingTable build(int J);
    const Rational& at(int s) const { return C.at(s); }
};

// Lambda_p = sqrt(pi) Gamma(p/2 - 1/2) / (2 Gamma(p/2)), p >= 2.
Real lambda_cap(int p, const PrecisionContext& ctx);

struct LambdaTable {
    std::vector<Real> values; // values[p-2] = Lambda_p, p = 2..P

    static LambdaTable build(int P, const PrecisionContext& ctx);
    const Real& at(int p) const { return values.at(p - 2); }
};

// Truncated power series in 1/x over exact rationals: c[0] + c[1]/x + ... + c[N]/x^N.
struct FormalSeries {
    std::vector<Rational> c; // size = order + 1

    int order() const { return (int)c.size() - 1; }
    const Rational& operator[](int i) const { return c[i]; }

    static FormalSeries zero(int order) { return {std::vector<Rational>(order + 1, Rational(0))}; }
};

FormalSeries mul_series(const FormalSeries& a, const FormalSeries& b);
FormalSeries add_series(const FormalSeries& a, const FormalSeries& b);
FormalSeries exp_series(const FormalSeries& s);                 // requires c[0] = 0 or any constant
FormalSeries log_series(const FormalSeries& s);                 // requires c[0] = 1
FormalSeries neg_alternate(const FormalSeries& s);              // flip sign of odd-index coefficients

// Classical DLMF 9.7 Airy Poincare coefficients (independent oracle for tests):
// u_0 = v_0 = 1, u_k = (6k-5)(6k-3)(6k-1)/((2k-1)216 k) u_{k-1}, v_k = -(6k+1)/(6k-1) u_k.
std::vector<Rational> dlmf97_u(int K);
std::vector<Rational> dlmf97_v(int K);

} // namespace uniairy
