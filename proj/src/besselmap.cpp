#include "uniairy/besselmap.hpp"

#include "uniairy/special.hpp"

namespace uniairy {

namespace {

void require_off_cut(const Complex& z) {
    if (z.im.is_zero() && z.re <= 0)
        throw std::domain_error("bessel map: z on the cut (-inf, 0]");
}

// The surd w = (1-z^2)^{1/2}, continued from +sqrt on (0,1): principal in the
// open upper half-plane, w = -i sqrt(z^2-1) on (1, inf), conjugate below.
Complex bessel_surd(const Complex& z) {
    require_off_cut(z);
    if (z.im.is_zero()) {
        const Real& x = z.re;
        if (x <= 1) return Complex(sqrt((1 - x) * (1 + x)));
        return Complex(Real(0), -sqrt((x - 1) * (x + 1)));
    }
    if (z.im < 0) return conj(bessel_surd(conj(z)));
    return sqrt(Complex(Real(1)) - z * z);
}

} // namespace

void bessel_xi_zeta(const Complex& z, Complex& xi, Complex& zeta, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    require_off_cut(z);
    if (z.im.is_zero()) {
        const Real x = z.re;
        if (x == 1) {
            xi = zeta = Complex();
        } else if (x < 1) {
            Real w = sqrt((1 - x) * (1 + x));
            Real xr = log((1 + w) / x) - w;
            xi = Complex(xr);
            zeta = Complex(pow(Real(1.5) * xr, Real(2) / 3));
        } else {
            Real s = sqrt((x - 1) * (x + 1));
            Real xm = s - acos(1 / x);
            xi = Complex(Real(0), xm);
            zeta = Complex(-pow(Real(1.5) * xm, Real(2) / 3));
        }
        return;
    }
    bool lower = z.im < 0;
    Complex zz = lower ? conj(z) : z;
    Complex w = sqrt(Complex(Real(1)) - zz * zz);
    xi = log((Complex(Real(1)) + w) / zz) - w;
    // continued branch of zeta = (3 xi / 2)^{2/3}: arg(3 xi / 2) lies in
    // [-2 pi, 0] for Im z >= 0, so wrap a positive principal argument down.
    Complex t = Real(1.5) * xi;
    Real th = arg(t);
    if (th > 0) th -= 2 * pi_const();
    zeta = polar(pow(abs(t), Real(2) / 3), 2 * th / 3);
    if (lower) {
        xi = conj(xi);
        zeta = conj(zeta);
    }
}

std::vector<AlgebraicFunction> fhat_coefficients(int S) {
    if (S < 1) throw std::domain_error("fhat_coefficients: need S >= 1");
    std::vector<AlgebraicFunction> fh;
    fh.reserve(S);
    // Fhat_1 = z^2 (z^2 + 4) / (8 (z^2-1)^3) = -(z^4 + 4 z^2)/8 * (1-z^2)^{-3}
    fh.push_back(AlgebraicFunction(
        Poly{Rational(0), Rational(0), Rational(-1, 2), Rational(0), Rational(-1, 8)}, 0, 6));
    for (int s = 1; s < S; ++s) {
        AlgebraicFunction next = fh[s - 1].apply_D();
        for (int j = 1; j <= s - 1; ++j)
            next = next - Rational(1, 2) * (fh[j - 1] * fh[s - j - 1]);
        fh.push_back(std::move(next));
    }
    return fh;
}

namespace {

// Solve Q'(v-form) for odd s: with Q(z) = sum q_r z^{2r}, the antiderivative
// identity  d/dz [Q (1-z^2)^{-3s/2}] = -Fhat_s (1-z^2)^{1/2} / z  reduces to
//   Q' z (1-z^2) + 3 s z^2 Q = -P   with Fhat_s = P (1-z^2)^{-(3s+3)/2},
// i.e. 2r q_r + (3s - 2r + 2) q_{r-1} = rhs_r per z^{2r}. Back-substitution
// from the top coefficient gives the unique polynomial solution.
AlgebraicFunction solve_ehat_odd(int s, const AlgebraicFunction& fhat_s) {
    // re-expand Fhat_s to surd exponent exactly 3s+3
    if (fhat_s.m != 0) throw std::logic_error("ehat: Fhat has unexpected z pole");
    int k0 = 3 * s + 3;
    if (fhat_s.k > k0 || ((k0 - fhat_s.k) % 2) != 0)
        throw std::logic_error("ehat: Fhat has unexpected surd exponent");
    Poly P = fhat_s.p;
    const Poly surd{Rational(1), Rational(0), Rational(-1)};
    for (int i = 0; i < (k0 - fhat_s.k) / 2; ++i) P = P * surd;

    // rhs_r = -[z^{2r}] P
    int deg2 = P.degree() / 2;
    std::vector<Rational> rhs(deg2 + 1, Rational(0));
    for (int i = 0; i <= P.degree(); ++i) {
        if (P.coeff(i) == 0) continue;
        if (i % 2) throw std::logic_error("ehat: Fhat numerator not even");
        rhs[i / 2] = -P.coeff(i);
    }
    if (rhs[0] != 0) throw std::logic_error("ehat: Fhat does not vanish at 0");

    int D = deg2 - 1; // degree of Q in z^2
    std::vector<Rational> q(D + 1, Rational(0));
    for (int r = D + 1; r >= 1; --r) {
        Rational top = rhs[r];
        if (r <= D) top -= Rational(2 * r) * q[r];
        q[r - 1] = top / Rational(3 * s - 2 * r + 2);
    }
    std::vector<Rational> qc(2 * D + 1, Rational(0));
    for (int r = 0; r <= D; ++r) qc[2 * r] = q[r];
    return AlgebraicFunction(Poly(std::move(qc)), 0, 3 * s);
}

} // namespace

std::vector<AlgebraicFunction> ehat_coefficients(int S) {
    if (S < 1) throw std::domain_error("ehat_coefficients: need S >= 1");
    auto fh = fhat_coefficients(S);
    std::vector<AlgebraicFunction> eh(S);

    for (int s = 1; s <= S; s += 2) eh[s - 1] = solve_ehat_odd(s, fh[s - 1]);

    // even orders from -1/2 log(1 + sum_{i>=1} Fhat_{2i-1} v^i), v = u^{-2};
    // the integration constants alpha_{2s} are taken to be zero.
    int half = S / 2;
    if (half > 0) {
        std::vector<AlgebraicFunction> sv(half + 1), lg(half + 1);
        sv[0] = AlgebraicFunction::one();
        for (int i = 1; i <= half; ++i) sv[i] = fh[2 * i - 2];
        for (int k = 1; k <= half; ++k) {
            AlgebraicFunction acc = Rational(k) * sv[k];
            for (int j = 1; j <= k - 1; ++j) acc = acc - Rational(j) * (lg[j] * sv[k - j]);
            lg[k] = Rational(1, k) * acc;
            eh[2 * k - 1] = Rational(-1, 2) * lg[k];
        }
    }
    return eh;
}

ConnectionData connection_constants(const Real& nu, int m, const PrecisionContext& ctx) {
    if (m < 0) throw std::domain_error("connection_constants: need m >= 0");
    ScopedPrecision sp(ctx);
    ConnectionData cd;
    cd.nu = Real(nu); // re-round at working precision
    // lambda_{+-1} = (2 pi nu)^{-1/2} e^nu Gamma(nu + 1) nu^{-nu}
    Real lam = exp(cd.nu - cd.nu * log(cd.nu)) * gamma_fn(cd.nu + 1, ctx) /
               sqrt(2 * pi_const() * cd.nu);
    cd.lambda_plus = cd.lambda_minus = lam;
    auto st = StirlingTable::build(2 * m + 3);
    cd.stirling_odd = st.C;
    return cd;
}

Real ConnectionData::delta(int n, const PrecisionContext& ctx) const {
    if (n < 2) throw std::domain_error("ConnectionData::delta: need n >= 2");
    if (n - 1 >= (int)stirling_odd.size())
        throw std::domain_error("ConnectionData::delta: n exceeds built Stirling order");
    ScopedPrecision sp(ctx);
    Real s(0);
    for (int j = 1; j <= n - 1; j += 2) s += Real(stirling_odd[j]) / pow(nu, j);
    return abs(lambda_plus * exp(-s) - 1);
}

Real ConnectionData::mu(int n, const PrecisionContext& ctx) const {
    if (n - 1 >= (int)stirling_odd.size())
        throw std::domain_error("ConnectionData::mu: n exceeds built Stirling order");
    ScopedPrecision sp(ctx);
    Real s(0);
    for (int j = 1; j <= n - 1; j += 2) s += Real(stirling_odd[j]) / pow(nu, j);
    return exp(s);
}

BesselModel::BesselModel(int S) : S_(S) {
    if (S < 2) throw std::domain_error("BesselModel: need S >= 2");
    fhat_ = fhat_coefficients(S);
    ehat_ = ehat_coefficients(S);
    seq_ = AirySeqTable::build(S + 1);
    stirling_ = StirlingTable::build(S + 1);
}

void BesselModel::xi_zeta(const Complex& z, Complex& xi, Complex& zeta,
                          const PrecisionContext& ctx) const {
    bessel_xi_zeta(z, xi, zeta, ctx);
}

Complex BesselModel::f_value(const Complex& z, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    Complex z2 = z * z;
    return (Complex(Real(1)) - z2) / z2;
}

Complex BesselModel::g_value(const Complex& z, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    return Complex(Real(-0.25)) / (z * z);
}

Complex BesselModel::phi_value(const Complex& z, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    // Phi = 2 Fhat_1 = z^2 (z^2 + 4) / (4 (z^2 - 1)^3)
    Complex z2 = z * z;
    return z2 * (z2 + Complex(Real(4))) / (Real(4) * pow_int(z2 - Complex(Real(1)), 3));
}

Complex BesselModel::ehat(int s, const Complex& z, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    if (z.im < 0) return conj(ehat(s, conj(z), ctx));
    return ehat_.at(s - 1).eval_with_surd(z, bessel_surd(z));
}

Rational BesselModel::ehat_reference(int s, int j) const {
    if (s < 1 || s > S_) throw std::domain_error("ehat_reference: order out of range");
    if (j == 0) return ehat_.at(s - 1).eval_at_zero();
    if (j == 1 || j == -1) return Rational(0); // Ehat_s -> 0 as z -> -+ i inf
    throw std::domain_error("ehat_reference: j must be 0 or +-1");
}

Complex BesselModel::script_E_tracked(int s, const Complex& z, const Complex& w,
                                      const Complex& xi, bool tilde) const {
    const Rational& a = tilde ? seq_.at_tilde(s) : seq_.at(s);
    Complex t = Real(a) / Real(s) / pow_int(xi, s);
    if (s % 2) t = -t;
    return ehat_.at(s - 1).eval_with_surd(z, w) + t;
}

Complex BesselModel::script_E(int s, const Complex& z, bool tilde,
                              const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    if (z.im < 0) return conj(script_E(s, conj(z), tilde, ctx));
    Complex xi, zeta;
    bessel_xi_zeta(z, xi, zeta, ctx);
    if (abs(xi).is_zero())
        throw std::domain_error("script_E: singular at the turning point");
    return script_E_tracked(s, z, bessel_surd(z), xi, tilde);
}

ConnectionData BesselModel::connection(const Real& u, const PrecisionContext& ctx) const {
    return connection_constants(u, (S_ - 1) / 2, ctx);
}

SectorLabel BesselModel::classify_sector(const Complex& z, const Complex& u,
                                         const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    const Real pi = pi_const();
    bool lower = z.im < 0;
    Complex zz = lower ? conj(z) : z;
    Complex xi, zeta;
    bessel_xi_zeta(zz, xi, zeta, ctx);
    if (abs(xi).is_zero()) return {0, -1}; // turning point: boundary of all sectors
    // continued arg zeta in [-4 pi / 3, 0] for Im z >= 0
    Real az = arg(zeta);
    if (az > 0) az -= 2 * pi;
    if (lower) az = -az;
    Real alpha = Real(2) / 3 * arg(u) + az;
    while (alpha > pi) alpha -= 2 * pi;
    while (alpha <= -pi) alpha += 2 * pi;

    auto dist = [&](int j) {
        Real d = alpha - j * 2 * pi / 3;
        while (d > pi) d -= 2 * pi;
        while (d <= -pi) d += 2 * pi;
        return d;
    };
    int best = 0;
    Real bd = abs(dist(0));
    for (int j : {-1, 1}) {
        Real d = abs(dist(j));
        if (d < bd) {
            best = j;
            bd = d;
        }
    }
    Real d = dist(best);
    int k;
    if (d > 0)
        k = (best == 1) ? -1 : best + 1; // counterclockwise neighbor
    else if (d < 0)
        k = (best == -1) ? 1 : best - 1; // clockwise neighbor
    else
        k = (best == 0) ? -1 : 0; // tie: toward T_{0,-1}
    return {best, k};
}

ContourSpec BesselModel::path_to_reference(int j, const Complex& z) const {
    ContourSpec path;
    if (j == 0) {
        path.segments.push_back(LineSegment{Complex(), z});
    } else if (j == -1 || j == 1) {
        Complex dir(Real(0), Real(-j));
        // A vertical ray from the far half-plane would cross the real axis
        // perpendicular to a ridge of Re xi; detour across (0,1) at a slant,
        // where Re xi keeps decreasing, then drop vertically.
        if (j * z.im > 0 && z.re + abs(z.im) < 1) {
            // 45-degree descent crossing (0,1) at z.re + |Im z|
            Complex zm(z.re + 2 * abs(z.im), -z.im);
            path.segments.push_back(LineSegment{z, zm});
            path.segments.push_back(RaySegment{zm, dir});
        } else {
            path.segments.push_back(RaySegment{z, dir});
        }
    } else {
        throw std::domain_error("path_to_reference: j must be 0 or +-1");
    }
    return path;
}

} // namespace uniairy
