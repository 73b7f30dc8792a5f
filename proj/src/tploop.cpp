#include "uniairy/tploop.hpp"

#include "uniairy/airylg.hpp"
#include "uniairy/special.hpp"

#include <algorithm>
#include <stdexcept>

namespace uniairy {

namespace {

// Surd w = (1-z^2)^{1/2} continued from +sqrt on (0,1); matches the
// convention used by the Bessel map module.
Complex surd(const Complex& z) {
    if (z.im.is_zero()) {
        const Real& x = z.re;
        if (x <= 1) return Complex(sqrt((1 - x) * (1 + x)));
        return Complex(Real(0), -sqrt((x - 1) * (x + 1)));
    }
    if (z.im < 0) return conj(surd(conj(z)));
    return sqrt(Complex(Real(1)) - z * z);
}

// Only the connector from Gamma to z^{(j)} must be progressive (the arc is
// just part of the loop); Re(u xi) must vary monotonically along it.
void check_progressive(const BesselModel& model, const Segment& seg, const Real& u,
                       const PrecisionContext& ctx) {
    const int N = 64;
    std::vector<Real> v;
    bool ray = std::holds_alternative<RaySegment>(seg);
    for (int i = 0; i < N; ++i) {
        Real t = (Real(i) + Real(0.5)) / N;
        if (ray) t = t / (1 - t);
        Complex xi, zeta;
        model.xi_zeta(segment_point(seg, t), xi, zeta, ctx);
        v.push_back(u * xi.re);
    }
    Real tol = pow10(-(long)ctx.digits / 2);
    int dir = (v.back() >= v.front()) ? 1 : -1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        Real step = (v[i + 1] - v[i]) * dir;
        if (step < -tol * (1 + abs(v[i])))
            throw std::domain_error("build_loop_data: gamma connector is not progressive "
                                    "(Re(u xi) not monotone at a sampled point)");
    }
}

QuadratureMode bound_ray_mode(const PrecisionContext& ctx) {
    return QuadratureMode::adaptive(pow10(-(long)std::min(ctx.digits, 30u)));
}

// Golden-section maximization of fn over [a, b]; returns the best value seen
// (including the bracket ends). Throws if the value has not stabilized.
Real golden_max(const std::function<Real(const Real&)>& fn, Real a, Real b) {
    const Real invphi = (sqrt(Real(5)) - 1) / 2;
    Real fa = fn(a), fb = fn(b);
    Real best = std::max(fa, fb);
    Real c = b - invphi * (b - a), d = a + invphi * (b - a);
    Real fc = fn(c), fd = fn(d);
    Real prev = best;
    int stable = 0;
    for (int it = 0; it < 200; ++it) {
        best = std::max(best, std::max(fc, fd));
        if (abs(best - prev) <= pow10(-6) * (1 + abs(best))) {
            if (++stable >= 5 && it >= 20) return best;
        } else {
            stable = 0;
        }
        prev = best;
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = fn(d);
        }
    }
    if (abs(best - prev) > pow10(-6) * (1 + abs(best)))
        throw std::runtime_error("build_loop_data: supremum refinement did not converge");
    return best;
}

// Maximize a periodic objective: coarse argmax over the samples, then golden
// refinement over the two neighbouring sample intervals.
Real refined_sup(const std::function<Real(const Real&)>& fn, const std::vector<Real>& coarse,
                 const std::vector<Real>& phis) {
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < coarse.size(); ++i)
        if (coarse[i] > coarse[i0]) i0 = i;
    Real h = phis[1] - phis[0];
    return golden_max(fn, phis[i0] - h, phis[i0] + h);
}

Real sup_inflate(const Real& v, const Real& safety) { return v + (safety - 1) * abs(v); }

struct Run {
    SectorLabel label;
    Real lo, hi; // angle range, hi may exceed 2 pi when the run wraps
};

bool same_label(const SectorLabel& a, const SectorLabel& b) { return a.j == b.j && a.k == b.k; }

// Partition the circle into the six arcs by sector label, with bisection
// refinement of the boundary angles.
std::vector<Run> circle_runs(const BesselModel& model, const Real& nu, const Complex& c,
                             const Real& r0, int samples, const PrecisionContext& ctx) {
    Real twopi = 2 * pi_const();
    Complex u(nu);
    auto label_at = [&](const Real& phi) {
        return model.classify_sector(c + polar(r0, phi), u, ctx);
    };
    std::vector<Real> phis(samples);
    std::vector<SectorLabel> lab(samples);
    for (int i = 0; i < samples; ++i) {
        phis[i] = twopi * i / samples;
        lab[i] = label_at(phis[i]);
    }
    std::vector<std::pair<int, Real>> cuts; // (index before the cut, refined angle)
    for (int i = 0; i < samples; ++i) {
        int j = (i + 1) % samples;
        if (same_label(lab[i], lab[j])) continue;
        Real a = phis[i], b = phis[i] + twopi / samples;
        for (int it = 0; it < 80; ++it) {
            Real mid = (a + b) / 2;
            if (same_label(label_at(mid), lab[i]))
                a = mid;
            else
                b = mid;
        }
        cuts.emplace_back(i, (a + b) / 2);
    }
    if (cuts.size() != 6)
        throw std::runtime_error("build_loop_data: expected six sector arcs on the loop");
    std::vector<Run> runs;
    for (std::size_t q = 0; q < cuts.size(); ++q) {
        const auto& [i_end, phi_lo] = cuts[q];
        Real phi_hi = cuts[(q + 1) % cuts.size()].second;
        if (phi_hi <= phi_lo) phi_hi += twopi;
        runs.push_back({lab[(i_end + 1) % samples], phi_lo, phi_hi});
    }
    return runs;
}

// e_n of the loop bound: u^n delta + omega exp(varpi/u + omega/u^n)
//                          + gamma exp(beta/u + gamma/u^n)
Real loop_e(const Real& nu, int n, const Real& delta, const Real& omega, const Real& varpi,
            const Real& gamma, const Real& beta) {
    Real nun = pow(nu, n);
    return nun * delta + omega * exp(varpi / nu + omega / nun) +
           gamma * exp(beta / nu + gamma / nun);
}

} // namespace

Real l0_kernel(const Complex& z, const Complex& z0, const Real& r0, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    if (!(r0 > 0)) throw std::domain_error("l0_kernel: need r0 > 0");
    Real d = abs(z - z0);
    if (d >= r0) throw std::domain_error("l0_kernel: z must lie strictly inside the loop");
    Real k = 2 * sqrt(r0 * d) / (d + r0);
    return 4 * r0 * elliptic_K(k, ctx) / (d + r0);
}

LoopData build_loop_data(const BesselModel& model, const Real& nu, int n, const Real& r0,
                         const PrecisionContext& ctx, int samples, double safety) {
    if (n < 2) throw std::domain_error("build_loop_data: need n >= 2");
    if (model.max_order() < n) throw std::domain_error("build_loop_data: model order too low");
    if (nu <= 0) throw std::domain_error("build_loop_data: need nu > 0");
    if (!(r0 > 0) || r0 >= 1) throw std::domain_error("build_loop_data: need 0 < r0 < 1");
    if (samples < 16) throw std::domain_error("build_loop_data: too few samples");
    ScopedPrecision sp(ctx);

    LoopData L;
    L.nu = nu;
    L.n = n;
    L.r0 = r0;
    L.center = model.turning_point();
    const Complex c = L.center;
    const Real twopi = 2 * pi_const();
    const Real saf(safety);

    // --- extrema over Gamma by sampling + golden refinement ---
    std::vector<Real> phis(samples);
    for (int i = 0; i < samples; ++i) phis[i] = twopi * i / samples;

    auto scriptE_re = [&](int s, bool tilde, int sign) {
        return std::function<Real(const Real&)>([&, s, tilde, sign](const Real& phi) {
            return Real(sign) * model.script_E(s, c + polar(r0, phi), tilde, ctx).re;
        });
    };
    auto tabulate = [&](const std::function<Real(const Real&)>& fn) {
        std::vector<Real> v(samples);
        for (int i = 0; i < samples; ++i) v[i] = fn(phis[i]);
        return v;
    };

    L.M.assign(n, Real(0));
    L.N.assign(n, Real(0));
    L.M_tilde.assign(n, Real(0));
    L.N_tilde.assign(n, Real(0));
    for (int s = 1; s <= n - 1; ++s) {
        for (bool tilde : {false, true}) {
            auto plus = scriptE_re(s, tilde, +1);
            std::vector<Real> tab = tabulate(plus);
            Real sup_plus = refined_sup(plus, tab, phis);
            Real sup_minus = sup_plus;
            if (s % 2) {
                auto minus = scriptE_re(s, tilde, -1);
                for (auto& x : tab) x = -x;
                sup_minus = refined_sup(minus, tab, phis);
            }
            (tilde ? L.M_tilde : L.M)[s] = sup_inflate(sup_plus, saf);
            (tilde ? L.N_tilde : L.N)[s] = sup_inflate(sup_minus, saf);
        }
    }

    auto zf_terms = [&](const Real& phi, Complex& xi, Real& af) {
        Complex z = c + polar(r0, phi), zeta;
        model.xi_zeta(z, xi, zeta, ctx);
        af = norm(surd(z)) / norm(z); // |f|
    };
    auto quarter = [](const Real& x) { return pow(x, Real(0.25)); };
    auto ups_neg = std::function<Real(const Real&)>([&](const Real& phi) {
        Complex xi;
        Real af;
        zf_terms(phi, xi, af);
        Real azeta = pow(Real(1.5) * abs(xi), Real(2) / 3);
        return -quarter(azeta * af);
    });
    auto upst = std::function<Real(const Real&)>([&](const Real& phi) {
        Complex xi;
        Real af;
        zf_terms(phi, xi, af);
        Real azeta = pow(Real(1.5) * abs(xi), Real(2) / 3);
        return quarter(azeta / af);
    });
    auto rho_neg = std::function<Real(const Real&)>([&](const Real& phi) {
        Complex xi;
        Real af;
        zf_terms(phi, xi, af);
        return -abs(xi);
    });
    L.Upsilon = -refined_sup(ups_neg, tabulate(ups_neg), phis);
    L.Upsilon_tilde = sup_inflate(refined_sup(upst, tabulate(upst), phis), saf);
    L.rho = -refined_sup(rho_neg, tabulate(rho_neg), phis);
    L.Upsilon /= saf;
    L.rho /= saf;
    if (!(L.rho > 0) || !(L.Upsilon > 0))
        throw std::runtime_error("build_loop_data: degenerate extrema on the loop");

    // --- the six gamma_{j,l} = circle arc + connector to z^{(j)} ---
    std::vector<Run> runs = circle_runs(model, nu, c, r0, samples, ctx);
    auto re_xi_at = [&](const Real& phi) {
        Complex xi, zeta;
        model.xi_zeta(c + polar(r0, phi), xi, zeta, ctx);
        return xi.re;
    };
    for (const Run& run : runs) {
        Real xlo = re_xi_at(run.lo), xhi = re_xi_at(run.hi);
        // j = 0: the line to z^{(0)} = 0 continues the increase of Re xi, so
        // anchor at the larger value; the vertical rays to -+ i inf continue
        // the decrease, so anchor at the smaller one.
        bool anchor_hi = (run.label.j == 0) ? (xhi >= xlo) : (xhi < xlo);
        Real pa = anchor_hi ? run.hi : run.lo, pb = anchor_hi ? run.lo : run.hi;
        Complex anchor = c + polar(r0, pa);
        ContourSpec path;
        path.segments.push_back(ArcSegment{c, r0, pb, pa});
        if (run.label.j == 0) {
            if (!anchor.im.is_zero() && abs(anchor.im) < pow10(-(long)ctx.digits))
                anchor.im = Real(0); // snap the phi = pi endpoint onto the axis
            path.segments.push_back(LineSegment{anchor, Complex()});
        } else {
            path.segments.push_back(RaySegment{anchor, Complex(Real(0), Real(-run.label.j))});
        }
        check_progressive(model, path.segments.back(), nu, ctx);
        L.gamma_paths.push_back(std::move(path));
        L.gamma_labels.push_back(run.label);
    }

    // --- loop omega_n / varpi_n: per-term maxima over the six paths ---
    // components: [0] |Fhat_n f^{1/2}|; then |Fhat_k Fhat_{s+n-k-1} f^{1/2}|
    // for s = 1..n-1, k = s..n-1; then |Fhat_{s+1} f^{1/2}| for s = 0..n-2.
    std::size_t npairs = (std::size_t)n * (n - 1) / 2;
    std::size_t vbase = 1 + npairs;
    std::size_t nc = vbase + (std::size_t)(n - 1);
    auto pair_index = [n](int s, int k) {
        return 1 + (std::size_t)(s - 1) * n - (std::size_t)s * (s - 1) / 2 + (std::size_t)(k - s);
    };
    std::vector<const AlgebraicFunction*> fh(n + 1);
    for (int s = 1; s <= n; ++s) fh[s] = &model.fhat(s);

    AbsIntegrand f = [&](const Complex& t, std::vector<Real>& out) {
        Complex w = sqrt(Complex(Real(1)) - t * t); // any branch: magnitudes only
        Real fhalf = abs(w) / abs(t);
        std::vector<Real> av(n + 1);
        for (int s = 1; s <= n; ++s) av[s] = abs(fh[s]->eval_with_surd(t, w));
        out[0] = av[n] * fhalf;
        for (int s = 1; s <= n - 1; ++s)
            for (int k = s; k <= n - 1; ++k) out[pair_index(s, k)] = av[k] * av[s + n - k - 1] * fhalf;
        for (int s = 0; s <= n - 2; ++s) out[vbase + s] = av[s + 1] * fhalf;
    };

    std::vector<Real> Imax(nc, Real(0));
    QuadratureMode mode = bound_ray_mode(ctx);
    for (const ContourSpec& path : L.gamma_paths) {
        std::vector<Real> I = integrate_contour_multi(f, nc, path, mode, ctx);
        for (std::size_t i = 0; i < nc; ++i) Imax[i] = std::max(Imax[i], I[i]);
    }
    L.omega_n_loop = 2 * Imax[0];
    for (int s = 1; s <= n - 1; ++s) {
        Real inner(0);
        for (int k = s; k <= n - 1; ++k) inner += Imax[pair_index(s, k)];
        L.omega_n_loop += inner / pow(nu, s);
    }
    L.varpi_n_loop = Real(0);
    for (int s = 0; s <= n - 2; ++s) L.varpi_n_loop += Imax[vbase + s] / pow(nu, s);
    L.varpi_n_loop *= 4;

    // --- delta_n, e_n, d_{2m+2} ---
    L.delta_n = model.connection(nu, ctx).delta(n, ctx);
    AiryBoundInputs bi = bound_inputs(Complex(nu), Complex(L.rho), n, ctx);
    L.e_n = loop_e(nu, n, L.delta_n, L.omega_n_loop, L.varpi_n_loop, bi.gamma_n, bi.beta_n);
    L.e_n_tilde =
        loop_e(nu, n, L.delta_n, L.omega_n_loop, L.varpi_n_loop, bi.gamma_tilde_n, bi.beta_tilde_n);

    if (n % 2 == 0) {
        Real SM(0), SN(0), SMt(0), SNt(0);
        for (int s = 1; s <= n - 1; ++s) {
            Real nus = pow(nu, s);
            SM += L.M[s] / nus;
            SN += L.N[s] / nus;
            SMt += L.M_tilde[s] / nus;
            SNt += L.N_tilde[s] / nus;
        }
        Real nun = pow(nu, n);
        Real q = 1 + L.e_n / (2 * nun), qt = 1 + L.e_n_tilde / (2 * nun);
        L.d_2m2 = (exp(SM) + exp(SN)) * L.e_n * q * q;
        L.d_2m2_tilde = (exp(SMt) + exp(SNt)) * L.e_n_tilde * qt * qt;
    }
    return L;
}

namespace {

// Branch state marched continuously around the loop: the surd w, xi with its
// continued argument, and f^{1/4} = sqrt(w/t) (sign tracked).
struct LoopState {
    Complex t, w, xi, f14;
    Real arg_xi;
};

LoopState loop_state_start(const Complex& c, const Real& r0, const PrecisionContext& ctx) {
    LoopState st;
    st.t = c - Complex(r0); // real point inside (0,1): all branches principal
    st.w = Complex(sqrt((1 - st.t.re) * (1 + st.t.re)));
    Real w = st.w.re;
    st.xi = Complex(log((1 + w) / st.t.re) - w);
    st.arg_xi = Real(0);
    st.f14 = sqrt(st.w / st.t);
    (void)ctx;
    return st;
}

void loop_state_step(LoopState& st, const Complex& c, const Real& r0, const Real& phi) {
    Complex t = c + polar(r0, phi);
    Complex wp = sqrt(Complex(Real(1)) - t * t);
    Complex w = (norm(wp - st.w) <= norm(wp + st.w)) ? wp : -wp;
    Complex xi = log((Complex(Real(1)) + w) / t) - w;
    Real twopi = 2 * pi_const();
    // principal log: realign the imaginary part with the tracked branch
    Real k = round((st.xi.im - xi.im) / twopi);
    xi.im += k * twopi;
    st.arg_xi += arg(xi / st.xi);
    Complex f14 = sqrt(w / t);
    if (norm(f14 - st.f14) > norm(f14 + st.f14)) f14 = -f14;
    st.t = t;
    st.w = w;
    st.xi = xi;
    st.f14 = f14;
}

} // namespace

Complex cauchy_trapezoid(const BesselModel& model, const Complex& z, const Real& nu, int m,
                         ABKind kind, const Real& r0, int nodes, const Real& start_shift,
                         const PrecisionContext& ctx) {
    if (m < 0) throw std::domain_error("cauchy_trapezoid: need m >= 0");
    if (model.max_order() < 2 * m + 1)
        throw std::domain_error("cauchy_trapezoid: model order too low");
    ScopedPrecision sp(ctx);

    const Complex c = model.turning_point();
    const Real pi = pi_const();
    const bool tilde = (kind == ABKind::ScriptA);

    auto integrand = [&](const LoopState& st) {
        Complex even, odd;
        for (int s = 1; s <= m; ++s)
            even += model.script_E_tracked(2 * s, st.t, st.w, st.xi, tilde) / pow(nu, 2 * s);
        for (int s = 0; s <= m; ++s)
            odd += model.script_E_tracked(2 * s + 1, st.t, st.w, st.xi, tilde) / pow(nu, 2 * s + 1);
        // continued zeta^{1/4} from the tracked argument of xi
        Complex z14 = polar(pow(Real(1.5) * abs(st.xi), Real(1) / 6), st.arg_xi / 6);
        if (kind == ABKind::ScriptA) return exp(even) * cosh(odd) * z14 / st.f14;
        return exp(even) * sinh(odd) / (z14 * st.f14);
    };

    LoopState st = loop_state_start(c, r0, ctx);
    // march from the branch anchor at angle pi to the requested start angle
    int pre = 64;
    for (int i = 1; i <= pre; ++i) loop_state_step(st, c, r0, pi + start_shift * i / pre);

    Complex sum;
    LoopState st0 = st;
    Complex g0;
    for (int k = 0; k < nodes; ++k) {
        Real phi = pi + start_shift + 2 * pi * k / nodes;
        if (k > 0) loop_state_step(st, c, r0, phi);
        Complex g = integrand(st);
        if (k == 0) g0 = g;
        sum += g * polar(Real(1), phi) / (st.t - z);
    }
    // close the loop: the integrand must return to its start value
    loop_state_step(st, c, r0, pi + start_shift + 2 * pi);
    Complex gc = integrand(st);
    if (abs(gc - g0) > pow10(-(long)ctx.digits + 8) * (1 + abs(g0)))
        throw QuadratureError("cauchy_trapezoid: integrand failed the single-valuedness check",
                              abs(g0), abs(gc));
    (void)st0;

    Complex val = (r0 / nodes) * sum;
    if (kind == ABKind::ScriptB) val = val / pow(nu, Real(1) / 3);
    return val;
}

ExpansionValue cauchy_AB(const BesselModel& model, const Complex& z, const Real& nu, int m,
                         ABKind kind, const LoopData& loop, const PrecisionContext& ctx) {
    if (loop.n != 2 * m + 2)
        throw std::invalid_argument("cauchy_AB: loop data order must equal 2m+2");
    if (loop.nu != nu) throw std::invalid_argument("cauchy_AB: loop data built for different nu");
    ScopedPrecision sp(ctx);
    Real d = abs(z - loop.center);
    if (d > Real(0.8) * loop.r0)
        throw std::domain_error("cauchy_AB: z must satisfy |z - z0| <= 0.8 r0");

    Real tol = pow10(-(long)ctx.digits);
    Complex prev, val;
    bool have_prev = false;
    for (int nodes = 128; nodes <= 32768; nodes *= 2) {
        val = cauchy_trapezoid(model, z, nu, m, kind, loop.r0, nodes, Real(0), ctx);
        if (have_prev && abs(val - prev) <= tol * (1 + abs(val))) {
            ExpansionValue out;
            out.value = val;
            Real l0 = l0_kernel(z, loop.center, loop.r0, ctx);
            Real denom = 2 * pi_const() * pow(nu, 2 * m + 2);
            out.certified_bound = (kind == ABKind::ScriptA)
                                      ? loop.Upsilon_tilde * loop.d_2m2_tilde * l0 / denom
                                      : loop.d_2m2 * l0 / (denom * loop.Upsilon);
            return out;
        }
        prev = val;
        have_prev = true;
    }
    throw QuadratureError("cauchy_AB: trapezoid rule did not converge", abs(prev), abs(val));
}

} // namespace uniairy
