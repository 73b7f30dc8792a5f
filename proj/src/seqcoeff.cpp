#include "uniairy/seqcoeff.hpp"

#include "uniairy/special.hpp"

namespace uniairy {

std::vector<Rational> extend_sequence(const Rational& b1, const Rational& b2, int S) {
    if (S < 2) throw std::domain_error("extend_sequence: need S >= 2");
    std::vector<Rational> b{b1, b2};
    b.reserve(S);
    for (int s = 2; s < S; ++s) {
        // computes b_{s+1} from b_1..b_s (b[i] holds b_{i+1})
        Rational acc = Rational(s + 1) * b[s - 1] / 2;
        Rational conv(0);
        for (int j = 1; j <= s - 1; ++j) conv += b[j - 1] * b[s - j - 1];
        b.push_back(acc + conv / 2);
    }
    return b;
}

AirySeqTable AirySeqTable::build(int S) {
    AirySeqTable t;
    t.a = extend_sequence(Rational(5, 72), Rational(5, 72), S);
    t.a_tilde = extend_sequence(Rational(-7, 72), Rational(-7, 72), S);
    return t;
}

std::vector<Rational> bernoulli_numbers(int N) {
    std::vector<Rational> row(N + 1), B(N + 1);
    for (int n = 0; n <= N; ++n) {
        row[n] = Rational(1, n + 1);
        for (int j = n; j >= 1; --j) row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        B[n] = row[0];
    }
    return B;
}

StirlingTable StirlingTable::build(int J) {
    if (J < 1) throw std::domain_error("stirling_constants: need J >= 1");
    auto B = bernoulli_numbers(J + 1);
    StirlingTable t;
    t.C.assign(J + 1, Rational(0));
    for (int s = 1; s <= J; s += 2) {
        // C_{2j+1} = B_{2j+2} / ((2j+2)(2j+1)) with s = 2j+1
        t.C[s] = B[s + 1] / Rational((s + 1) * s);
    }
    return t;
}

Real lambda_cap(int p, const PrecisionContext& ctx) {
    if (p < 2) throw std::domain_error("lambda_cap: need p >= 2");
    ScopedPrecision sp(ctx);
    Real ph = Real(p) / 2;
    return sqrt(pi_const()) * gamma_fn(ph - Real(0.5), ctx) / (2 * gamma_fn(ph, ctx));
}

LambdaTable LambdaTable::build(int P, const PrecisionContext& ctx) {
    LambdaTable t;
    for (int p = 2; p <= P; ++p) t.values.push_back(lambda_cap(p, ctx));
    return t;
}

FormalSeries mul_series(const FormalSeries& a, const FormalSeries& b) {
    int n = std::min(a.order(), b.order());
    FormalSeries r = FormalSeries::zero(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j <= b.order(); ++j)
            if (i <= a.order()) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

FormalSeries add_series(const FormalSeries& a, const FormalSeries& b) {
    int n = std::min(a.order(), b.order());
    FormalSeries r = FormalSeries::zero(n);
    for (int i = 0; i <= n; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

FormalSeries exp_series(const FormalSeries& s) {
    if (s.c.empty() || s.c[0] != 0)
        throw std::domain_error("exp_series: constant term must be zero");
    int n = s.order();
    FormalSeries e = FormalSeries::zero(n);
    e.c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += Rational(j) * s.c[j] * e.c[k - j];
        e.c[k] = acc / k;
    }
    return e;
}

FormalSeries log_series(const FormalSeries& s) {
    if (s.c.empty() || s.c[0] != 1)
        throw std::domain_error("log_series: constant term must be one");
    int n = s.order();
    FormalSeries l = FormalSeries::zero(n);
    for (int k = 1; k <= n; ++k) {
        Rational acc = Rational(k) * s.c[k];
        for (int j = 1; j < k; ++j) acc -= Rational(j) * l.c[j] * s.c[k - j];
        l.c[k] = acc / k;
    }
    return l;
}

FormalSeries neg_alternate(const FormalSeries& s) {
    FormalSeries r = s;
    for (int i = 1; i <= r.order(); i += 2) r.c[i] = -r.c[i];
    return r;
}

std::vector<Rational> dlmf97_u(int K) {
    std::vector<Rational> u(K + 1);
    u[0] = 1;
    for (int k = 1; k <= K; ++k)
        u[k] = u[k - 1] * Rational((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) /
               Rational((2 * k - 1) * 216 * k);
    return u;
}

std::vector<Rational> dlmf97_v(int K) {
    auto u = dlmf97_u(K);
    std::vector<Rational> v(K + 1);
    v[0] = 1;
    for (int k = 1; k <= K; ++k) v[k] = -Rational(6 * k + 1) * u[k] / Rational(6 * k - 1);
    return v;
}

} // namespace uniairy
