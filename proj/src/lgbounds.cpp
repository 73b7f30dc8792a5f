#include "uniairy/lgbounds.hpp"

#include "uniairy/special.hpp"

namespace uniairy {

namespace {

// Re(u xi) must vary monotonically along a progressive path; sampled check.
void check_progressive(const TurningPointModel& model, const ContourSpec& path, const Real& u,
                       const PrecisionContext& ctx) {
    const int N = 64;
    std::vector<Real> v;
    v.reserve(N);
    for (const auto& seg : path.segments) {
        bool ray = std::holds_alternative<RaySegment>(seg);
        for (int i = 0; i < N; ++i) {
            Real t = (Real(i) + Real(0.5)) / N;
            if (ray) t = t / (1 - t); // arclength parameter on [0, inf)
            Complex xi, zeta;
            model.xi_zeta(segment_point(seg, t), xi, zeta, ctx);
            v.push_back(u * xi.re); // real u throughout (Bessel usage)
        }
    }
    Real tol = pow10(-(long)ctx.digits / 2);
    int dir = (v.back() >= v.front()) ? 1 : -1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        Real step = (v[i + 1] - v[i]) * dir;
        if (step < -tol * (1 + abs(v[i])))
            throw std::domain_error("lg_bound_terms: path is not progressive "
                                    "(Re(u xi) not monotone at a sampled point)");
    }
}

// Bound integrals are only quoted to a few digits; refining the ray
// quadrature past ~30 digits wastes orders of magnitude of time.
QuadratureMode bound_ray_mode(const PrecisionContext& ctx) {
    return QuadratureMode::adaptive(pow10(-(long)std::min(ctx.digits, 30u)));
}

} // namespace

LGBoundTerms lg_bound_terms(const TurningPointModel& model, const Complex& z, int j, int n,
                            const Real& u, const QuadratureMode& mode,
                            const PrecisionContext& ctx) {
    if (n < 2) throw std::domain_error("lg_bound_terms: need n >= 2");
    if (model.max_order() < n) throw std::domain_error("lg_bound_terms: model order too low");
    ScopedPrecision sp(ctx);

    ContourSpec path = model.path_to_reference(j, z);
    check_progressive(model, path, u, ctx);

    // components: [0] |Fhat_n f^{1/2}|; [1..n-1] the s-indexed double sums;
    // [n..2n-2] |Fhat_{s+1} f^{1/2}| for varpi.
    std::size_t nc = 2 * (std::size_t)n - 1;
    std::vector<const AlgebraicFunction*> fh(n + 1);
    for (int s = 1; s <= n; ++s) fh[s] = &model.fhat(s);

    AbsIntegrand f = [&](const Complex& t, std::vector<Real>& out) {
        Complex w = sqrt(Complex(Real(1)) - t * t); // any branch: magnitudes only
        Real fhalf = abs(w) / abs(t);
        std::vector<Complex> fv(n + 1);
        for (int s = 1; s <= n; ++s) fv[s] = fh[s]->eval_with_surd(t, w);
        out[0] = abs(fv[n]) * fhalf;
        for (int s = 1; s <= n - 1; ++s) {
            Complex acc;
            for (int k = s; k <= n - 1; ++k) acc += fv[k] * fv[s + n - k - 1];
            out[s] = abs(acc) * fhalf;
        }
        for (int s = 0; s <= n - 2; ++s) out[n + s] = abs(fv[s + 1]) * fhalf;
    };

    std::vector<Real> I = integrate_contour_multi(f, nc, path, mode, ctx);

    LGBoundTerms terms;
    Real au = abs(u);
    terms.omega = 2 * I[0];
    for (int s = 1; s <= n - 1; ++s) terms.omega += I[s] / pow(au, s);
    terms.varpi = Real(0);
    for (int s = 0; s <= n - 2; ++s) terms.varpi += I[n + s] / pow(au, s);
    terms.varpi *= 4;
    return terms;
}

Real eta_lg_bound(const LGBoundTerms& terms, const Real& abs_u, int n) {
    Real w = terms.omega / pow(abs_u, n);
    return w * exp(terms.varpi / abs_u + w);
}

namespace {

// e_{n,j}: u^n delta + omega exp(varpi/u + omega/u^n) + gamma exp(beta/u + gamma/u^n)
Real e_term(const Real& nu, int n, const Real& delta, const LGBoundTerms& t, const Real& gamma,
            const Real& beta) {
    Real nun = pow(nu, n);
    return nun * delta + t.omega * exp(t.varpi / nu + t.omega / nun) +
           gamma * exp(beta / nu + gamma / nun);
}

Real eps_half(const Real& nu, int n, const Real& S_plain, const Real& S_alt, const Real& e_m1,
              const Real& e_0) {
    Real nun = pow(nu, n);
    Real q1 = 1 + e_m1 / (2 * nun), q2 = 1 + e_0 / (2 * nun);
    return (exp(S_plain) * e_m1 * q1 * q1 + exp(S_alt) * e_0 * q2 * q2) / nun;
}

} // namespace

ScriptABResult script_AB_pair(const BesselModel& model, const Complex& z, const Real& nu,
                              int m, const PrecisionContext& ctx) {
    if (m < 0) throw std::domain_error("script_AB: need m >= 0");
    if (nu <= 0) throw std::domain_error("script_AB: need nu > 0");
    int n = 2 * m + 2;
    if (model.max_order() < n)
        throw std::domain_error("script_AB: model order too low for this m");

    if (z.im < 0) {
        ScriptABResult r = script_AB_pair(model, conj(z), nu, m, ctx);
        r.A.value = conj(r.A.value);
        r.B.value = conj(r.B.value);
        r.xi = conj(r.xi);
        r.zeta = conj(r.zeta);
        return r;
    }
    ScopedPrecision sp(ctx);

    SectorLabel sec = model.classify_sector(z, Complex(nu), ctx);
    bool ok = (sec.j == 0 && sec.k == -1) || (sec.j == -1 && sec.k == 0);
    if (!ok)
        throw std::domain_error("script_AB: z outside T_{0,-1} U T_{-1,0} for this u");

    Complex xi, zeta;
    model.xi_zeta(z, xi, zeta, ctx);
    if (abs(xi).is_zero())
        throw std::domain_error("script_AB: z is the turning point");

    // truncated series values
    Complex even_t, odd_t, even_p, odd_p;
    std::vector<Complex> sE(n), sEt(n); // script E_s, tilde; index s-1
    Complex w_surd = sqrt(Complex(Real(1)) - z * z);
    if (z.im.is_zero() && z.re > 1) w_surd = Complex(Real(0), -sqrt((z.re - 1) * (z.re + 1)));
    for (int s = 1; s <= 2 * m + 1; ++s) {
        sE[s - 1] = model.script_E_tracked(s, z, w_surd, xi, false);
        sEt[s - 1] = model.script_E_tracked(s, z, w_surd, xi, true);
    }
    for (int s = 1; s <= m; ++s) {
        even_t += sEt[2 * s - 1] / pow(nu, 2 * s);
        even_p += sE[2 * s - 1] / pow(nu, 2 * s);
    }
    for (int s = 0; s <= m; ++s) {
        odd_t += sEt[2 * s] / pow(nu, 2 * s + 1);
        odd_p += sE[2 * s] / pow(nu, 2 * s + 1);
    }
    Complex one(Real(1));
    Complex z2 = z * z;
    Complex prefA = pow(z2 * zeta / (one - z2), Real(0.25));
    Complex prefB = pow(z2 / (zeta * (one - z2)), Real(0.25)) / pow(nu, Real(1) / 3);

    ScriptABResult out;
    out.xi = xi;
    out.zeta = zeta;
    out.A.value = prefA * (exp(even_t) * cosh(odd_t));
    out.B.value = prefB * (exp(even_p) * sinh(odd_p));

    // certified bounds with reference pair (-1, 0)
    LGBoundTerms t0 = lg_bound_terms(model, z, 0, n, nu, QuadratureMode::fixed_gauss(30), ctx);
    LGBoundTerms tm1 = lg_bound_terms(model, z, -1, n, nu, bound_ray_mode(ctx), ctx);
    AiryBoundInputs bi = bound_inputs(Complex(nu), xi, n, ctx);
    Real delta = model.connection(nu, ctx).delta(n, ctx);

    Real e_m1 = e_term(nu, n, delta, tm1, bi.gamma_n, bi.beta_n);
    Real e_0 = e_term(nu, n, Real(0), t0, bi.gamma_n, bi.beta_n);
    Real et_m1 = e_term(nu, n, delta, tm1, bi.gamma_tilde_n, bi.beta_tilde_n);
    Real et_0 = e_term(nu, n, Real(0), t0, bi.gamma_tilde_n, bi.beta_tilde_n);

    Real S_p(0), S_a(0), St_p(0), St_a(0);
    for (int s = 1; s <= 2 * m + 1; ++s) {
        Real ps = pow(nu, s);
        Real sign = (s % 2) ? Real(-1) : Real(1);
        S_p += sE[s - 1].re / ps;
        S_a += sign * sE[s - 1].re / ps;
        St_p += sEt[s - 1].re / ps;
        St_a += sign * sEt[s - 1].re / ps;
    }
    Real epsA = eps_half(nu, n, St_p, St_a, et_m1, et_0);
    Real epsB = eps_half(nu, n, S_p, S_a, e_m1, e_0);
    out.A.certified_bound = abs(prefA) * epsA / 2;
    out.B.certified_bound = abs(prefB) * epsB / 2;
    return out;
}

ExpansionValue script_AB(const BesselModel& model, const Complex& z, const Real& nu, int m,
                         ABKind kind, const PrecisionContext& ctx) {
    ScriptABResult r = script_AB_pair(model, z, nu, m, ctx);
    return (kind == ABKind::ScriptA) ? r.A : r.B;
}

MatchingConstant matching_constant_c(const BesselModel& model, const Real& nu, int m,
                                     const PrecisionContext& ctx) {
    if (nu <= 0) throw std::domain_error("matching_constant_c: need nu > 0");
    int n = 2 * m + 2;
    if (model.max_order() < n)
        throw std::domain_error("matching_constant_c: model order too low for this m");
    ScopedPrecision sp(ctx);

    // at z = 0 only the j = -1 bound term survives, with no
    // Airy contribution (xi -> inf) and delta_{n,0} = 0.
    LGBoundTerms tm1 =
        lg_bound_terms(model, Complex(), -1, n, nu, bound_ray_mode(ctx), ctx);
    ConnectionData cd = model.connection(nu, ctx);
    Real delta = cd.delta(n, ctx);
    Real nun = pow(nu, n);
    Real e = nun * delta + tm1.omega * exp(tm1.varpi / nu + tm1.omega / nun);

    Real csum(0);
    for (int s = 1; s <= 2 * m + 1; s += 2) csum += Real(model.stirling().at(s)) / pow(nu, s);
    Real q = 1 + e / (2 * nun);
    Real eps0 = exp(csum) * e * q * q / nun;

    Real mid = exp(-csum), hw = eps0;
    if (mid - hw <= 0)
        throw std::runtime_error("matching_constant_c: enclosure is indeterminate");
    Real pref =
        2 * sqrt(pi_const()) * exp((nu - Real(5) / 6) * log(nu) - nu) / gamma_fn(nu, ctx);
    Real lo = pref / (mid + hw), hi = pref / (mid - hw);
    return {(lo + hi) / 2, (hi - lo) / 2};
}

LGSolution lg_solution_W(const BesselModel& model, const Complex& z, int j, int n,
                         const Real& nu, const PrecisionContext& ctx) {
    if (j != 0 && j != 1 && j != -1)
        throw std::domain_error("lg_solution_W: j must be 0 or +-1");
    if (n < 2) throw std::domain_error("lg_solution_W: need n >= 2");
    if (model.max_order() < n) throw std::domain_error("lg_solution_W: model order too low");
    if (z.im < 0) {
        LGSolution r = lg_solution_W(model, conj(z), -j, n, nu, ctx);
        r.value = conj(r.value);
        return r;
    }
    ScopedPrecision sp(ctx);

    Complex xi, zeta;
    model.xi_zeta(z, xi, zeta, ctx);
    if (abs(xi).is_zero())
        throw std::domain_error("lg_solution_W: z is the turning point");

    // zeta^{-1/4} on the branch continued with xi: (3 xi / 2)^{-1/6}
    Complex t = Real(1.5) * xi;
    Real th = arg(t);
    if (th > 0) th -= 2 * pi_const();
    Complex zmq = polar(pow(abs(t), Real(-1) / 6), -th / 6);

    Complex sum;
    for (int s = 1; s <= n - 1; ++s) {
        Complex term = model.ehat(s, z, ctx) - Complex(Real(model.ehat_reference(s, j)));
        if (j == 0 && (s % 2)) term = -term;
        sum += term / pow(nu, s);
    }
    Complex expo = (j == 0 ? Real(-nu) * xi : nu * xi) + sum;

    LGSolution out;
    out.value = zmq * exp(expo);
    QuadratureMode mode = (j == 0) ? QuadratureMode::fixed_gauss(30) : bound_ray_mode(ctx);
    out.eta_bound = eta_lg_bound(lg_bound_terms(model, z, j, n, nu, mode, ctx), nu, n);
    return out;
}

} // namespace uniairy
