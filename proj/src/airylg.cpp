#include "uniairy/airylg.hpp"

namespace uniairy {

AiryBoundInputs bound_inputs(const Complex& u, const Complex& xi, int n,
                             const PrecisionContext& ctx) {
    if (n < 2) throw std::domain_error("bound_inputs: need n >= 2");
    ScopedPrecision sp(ctx);
    if (abs(xi).is_zero()) throw std::domain_error("bound_inputs: xi must be nonzero");

    auto seq = AirySeqTable::build(n);
    auto lam = LambdaTable::build(2 * n + 1, ctx);
    Real au = abs(u), axi = abs(xi), auxi = au * axi;

    auto assemble = [&](const std::vector<Rational>& a, Real& gamma, Real& beta) {
        auto av = [&](int s) { return abs(Real(a[s - 1])); };
        gamma = 2 * av(n) * lam.at(n + 1) / pow(axi, n);
        Real inner(0);
        for (int s = 0; s <= n - 2; ++s) {
            Real coeff(0);
            for (int k = s + 1; k <= n - 1; ++k) coeff += av(k) * av(s + n - k);
            inner += lam.at(n + s + 2) * coeff / pow(auxi, s);
        }
        gamma += inner / (au * pow(axi, n + 1));
        beta = Real(0);
        for (int s = 0; s <= n - 2; ++s) beta += av(s + 1) * lam.at(s + 2) / pow(auxi, s);
        beta *= 4 / axi;
    };

    AiryBoundInputs out;
    assemble(seq.a, out.gamma_n, out.beta_n);
    assemble(seq.a_tilde, out.gamma_tilde_n, out.beta_tilde_n);
    return out;
}

Real eta_bound(const Real& gamma, const Real& beta, const Real& abs_u, int n) {
    Real g = gamma / pow(abs_u, n);
    return g * exp(beta / abs_u + g);
}

AiryExpansionResult airy_lg(const Complex& u, const Complex& xi, int n, AiryKind which,
                            int branch, const PrecisionContext& ctx) {
    if (n < 2) throw std::domain_error("airy_lg: need n >= 2");
    if (branch != 0 && branch != 1 && branch != -1)
        throw std::domain_error("airy_lg: branch must be 0 or +-1");
    ScopedPrecision sp(ctx);
    if (abs(xi).is_zero())
        throw std::domain_error("airy_lg: xi = 0 is singular (turning point)");

    const Real pi = pi_const();
    Complex zeta = pow(Real(1.5) * xi, Real(2) / 3);
    Complex c = pow(u, Real(2) / 3) * zeta;
    // sector check: |arg(u^{2/3} zeta e^{-2 pi i j / 3})| <= 2 pi / 3 (+ slack)
    Real ang = arg(c) - branch * 2 * pi / 3;
    while (ang > pi) ang -= 2 * pi;
    while (ang < -pi) ang += 2 * pi;
    if (abs(ang) > 2 * pi / 3 + pow10(-(long)ctx.digits / 2))
        throw std::domain_error("airy_lg: argument outside validity sector for this branch");

    auto seq = AirySeqTable::build(n);
    const auto& a = (which == AiryKind::Ai) ? seq.a : seq.a_tilde;

    Complex series(Real(0));
    Complex inv_uxi = Complex(Real(1)) / (u * xi);
    Complex p = inv_uxi;
    for (int s = 1; s <= n - 1; ++s) {
        Complex term = Real(a[s - 1]) / Real(s) * p;
        if (branch == 0 && (s % 2)) term = -term;
        series += term;
        p *= inv_uxi;
    }
    Complex expo = (branch == 0 ? -(u * xi) : u * xi) + series;

    Complex root = pow(u, Real(1) / 6) * pow(zeta, Real(0.25));
    Complex pref;
    if (which == AiryKind::Ai)
        pref = Complex(Real(1)) / (2 * sqrt(pi) * root);
    else
        pref = (branch == 0 ? Real(-1) : Real(1)) * root / (2 * sqrt(pi));
    if (branch != 0) pref *= exp(Complex(Real(0), branch * pi / 6));

    AiryExpansionResult res;
    res.value = pref * exp(expo);
    res.n = n;
    res.branch = branch;

    auto bi = bound_inputs(u, xi, n, ctx);
    Real au = abs(u);
    res.bound = (which == AiryKind::Ai) ? eta_bound(bi.gamma_n, bi.beta_n, au, n)
                                        : eta_bound(bi.gamma_tilde_n, bi.beta_tilde_n, au, n);
    return res;
}

} // namespace uniairy
