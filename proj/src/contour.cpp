#include "uniairy/contour.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stack>

namespace uniairy {

namespace {

struct Param {
    // point and |dt|/dtau on tau in [0,1]
    std::function<Complex(const Real&)> point;
    std::function<Real(const Real&)> speed; // constant for lines/arcs but kept general
};

Param parametrize(const LineSegment& s) {
    Complex a = s.a, d = s.b - s.a;
    Real len = abs(d);
    return {[a, d](const Real& t) { return a + t * d; }, [len](const Real&) { return len; }};
}

Param parametrize(const ArcSegment& s) {
    Complex c = s.center;
    Real r = s.radius, p0 = s.phi0, dp = s.phi1 - s.phi0;
    Real sp = r * abs(dp);
    return {[c, r, p0, dp](const Real& t) { return c + polar(r, p0 + t * dp); },
            [sp](const Real&) { return sp; }};
}

} // namespace

void ContourSpec::validate(const Real& tol) const {
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (std::holds_alternative<RaySegment>(segments[i]) && i + 1 != segments.size())
            throw std::invalid_argument("ContourSpec: truncated ray must be the final segment");
        if (i > 0) {
            Complex prev_end = segment_end(segments[i - 1]);
            Complex cur_start = segment_start(segments[i]);
            if (abs(prev_end - cur_start) > tol)
                throw std::invalid_argument("ContourSpec: consecutive segments do not share endpoints");
        }
    }
}

Complex segment_point(const Segment& s, const Real& t) {
    if (const auto* l = std::get_if<LineSegment>(&s)) return l->a + t * (l->b - l->a);
    if (const auto* a = std::get_if<ArcSegment>(&s))
        return a->center + polar(a->radius, a->phi0 + t * (a->phi1 - a->phi0));
    const auto& r = std::get<RaySegment>(s);
    Real dl = abs(r.direction);
    return r.start + (t / dl) * r.direction;
}

Complex segment_start(const Segment& s) { return segment_point(s, Real(0)); }

Complex segment_end(const Segment& s) {
    if (std::holds_alternative<RaySegment>(s))
        throw std::invalid_argument("segment_end: ray has no finite endpoint");
    return segment_point(s, Real(1));
}

std::vector<std::pair<Real, Real>> gauss_legendre_nodes(int n, const PrecisionContext& ctx) {
    if (n < 1 || n > 200) throw std::domain_error("gauss_legendre_nodes: need 1 <= n <= 200");
    ScopedPrecision sp(ctx.working_digits() + 10);

    thread_local std::map<std::pair<int, unsigned>, std::vector<std::pair<Real, Real>>> cache;
    auto key = std::make_pair(n, Real::default_precision());
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<std::pair<Real, Real>> out(n);
    const Real eps = pow10(-(long)Real::default_precision() + 2);
    const Real pi = pi_const();

    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real pn, pd;
        for (int iter = 0; iter < 200; ++iter) {
            Real p0(1), p1 = x;
            if (n == 1) {
                pn = p1;
            } else {
                for (int k = 2; k <= n; ++k) {
                    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pn = p1;
            }
            // derivative: P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
            pd = (n == 1) ? Real(1) : Real(n) * (x * p1 - p0) / (x * x - 1);
            Real dx = pn / pd;
            x -= dx;
            if (abs(dx) <= eps * (1 + abs(x))) break;
        }
        // recompute P'_n at the converged node for the weight
        {
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pd = (n == 1) ? Real(1) : Real(n) * (x * p1 - p0) / (x * x - 1);
        }
        Real w = 2 / ((1 - x * x) * pd * pd);
        out[i] = {-x, w};          // nodes ascend: cos guess starts near +1 for small i
        out[n - 1 - i] = {x, w};
    }
    if (n % 2 == 1) out[n / 2].first = Real(0);

    cache[key] = out;
    return out;
}

namespace {

// Accumulate fixed Gauss rule for all components over point(tau), tau in [lo,hi].
void gauss_accumulate(const AbsIntegrand& f, std::size_t nc, const Param& pm, const Real& lo,
                      const Real& hi, const std::vector<std::pair<Real, Real>>& rule,
                      std::vector<Real>& acc) {
    Real h = (hi - lo) / 2, mid = (lo + hi) / 2;
    std::vector<Real> vals(nc);
    for (const auto& [x, w] : rule) {
        Real tau = mid + h * x;
        Complex t = pm.point(tau);
        f(t, vals);
        Real sw = pm.speed(tau) * h * w;
        for (std::size_t i = 0; i < nc; ++i) {
            if (!boost::math::isfinite(vals[i]))
                throw QuadratureError("integrate_contour: non-finite integrand value", Real(0), Real(0));
            acc[i] += vals[i] * sw;
        }
    }
}

std::vector<Real> gauss_estimate(const AbsIntegrand& f, std::size_t nc, const Param& pm,
                                 const Real& lo, const Real& hi,
                                 const std::vector<std::pair<Real, Real>>& rule) {
    std::vector<Real> acc(nc, Real(0));
    gauss_accumulate(f, nc, pm, lo, hi, rule, acc);
    return acc;
}

// Adaptive bisection over tau in [0,1]; adds results into total.
void adaptive_segment(const AbsIntegrand& f, std::size_t nc, const Param& pm, const Real& tol,
                      const std::vector<std::pair<Real, Real>>& rule, std::vector<Real>& total) {
    std::vector<Real> coarse = gauss_estimate(f, nc, pm, Real(0), Real(1), rule);
    Real scale(0);
    for (auto& c : coarse) scale = std::max(scale, c);
    if (scale.is_zero()) return; // identically-zero components

    struct Item {
        Real lo, hi;
        std::vector<Real> est;
    };
    std::stack<Item> work;
    work.push({Real(0), Real(1), coarse});
    long budget = 20000;
    Real floor_abs = tol * scale;

    while (!work.empty()) {
        if (--budget < 0) {
            Real le(0), pe(0);
            for (std::size_t i = 0; i < nc; ++i) { le += total[i]; pe += work.top().est[i]; }
            throw QuadratureError("integrate_contour: adaptive subdivision budget exhausted", le, pe);
        }
        Item it = std::move(work.top());
        work.pop();
        Real mid = (it.lo + it.hi) / 2;
        std::vector<Real> left = gauss_estimate(f, nc, pm, it.lo, mid, rule);
        std::vector<Real> right = gauss_estimate(f, nc, pm, mid, it.hi, rule);
        bool ok = true;
        for (std::size_t i = 0; i < nc && ok; ++i) {
            Real fine = left[i] + right[i];
            Real diff = abs(it.est[i] - fine);
            if (diff > tol * fine + floor_abs) ok = false;
        }
        if (ok || it.hi - it.lo < pow10(-18)) {
            for (std::size_t i = 0; i < nc; ++i) total[i] += left[i] + right[i];
        } else {
            work.push({it.lo, mid, std::move(left)});
            work.push({mid, it.hi, std::move(right)});
        }
    }
}

} // namespace

std::vector<Real> integrate_contour_multi(const AbsIntegrand& f, std::size_t nc,
                                          const ContourSpec& path, const QuadratureMode& mode,
                                          const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    path.validate(pow10(-(long)ctx.digits / 2));

    Real tol = mode.rel_tol;
    if (tol.is_zero()) tol = pow10(-(long)ctx.digits - 2);

    auto fine_rule = gauss_legendre_nodes(15, ctx);
    auto fixed_rule =
        mode.kind == QuadratureMode::FixedGauss ? gauss_legendre_nodes(mode.nodes, ctx) : fine_rule;

    std::vector<Real> total(nc, Real(0));

    for (const auto& seg : path.segments) {
        if (const auto* ray = std::get_if<RaySegment>(&seg)) {
            // Split the ray at arclength S; the head is a finite segment and
            // the tail is folded onto (0,1] by s = S/v, which is exact (no
            // truncation) whenever the integrand decays at least like s^-2.
            Complex unit = ray->direction / abs(ray->direction);
            Complex start = ray->start;
            Real S = 1 + 2 * abs(start);
            Param head = parametrize(LineSegment{start, start + S * unit});
            adaptive_segment(f, nc, head, tol, fine_rule, total);
            Param tail{[start, unit, S](const Real& v) { return start + (S / v) * unit; },
                       [S](const Real& v) { return S / (v * v); }};
            adaptive_segment(f, nc, tail, tol, fine_rule, total);
        } else {
            Param pm = std::holds_alternative<LineSegment>(seg)
                           ? parametrize(std::get<LineSegment>(seg))
                           : parametrize(std::get<ArcSegment>(seg));
            if (mode.kind == QuadratureMode::FixedGauss)
                gauss_accumulate(f, nc, pm, Real(0), Real(1), fixed_rule, total);
            else
                adaptive_segment(f, nc, pm, tol, fine_rule, total);
        }
    }
    return total;
}

Real integrate_contour(const std::function<Real(const Complex&)>& f_abs, const ContourSpec& path,
                       const QuadratureMode& mode, const PrecisionContext& ctx) {
    AbsIntegrand g = [&](const Complex& t, std::vector<Real>& out) { out[0] = f_abs(t); };
    return integrate_contour_multi(g, 1, path, mode, ctx)[0];
}

} // namespace uniairy
