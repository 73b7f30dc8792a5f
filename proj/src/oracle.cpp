#include "uniairy/oracle.hpp"

#include "uniairy/besselmap.hpp"
#include "uniairy/special.hpp"

#include <functional>

namespace uniairy {

namespace {

long log10_floor(const Real& x) {
    if (x.is_zero()) return -1000000;
    return static_cast<long>(floor(log10(abs(x))));
}

// Gamma(x) for any non-pole real x via reflection for x <= 0.
Real gamma_signed(const Real& x, const PrecisionContext& ctx) {
    if (x > 0) return gamma_fn(x, ctx);
    Real fl = floor(x);
    if (fl == x) throw std::domain_error("gamma_signed: pole at non-positive integer");
    return pi_const() / (sin(pi_const() * x) * gamma_fn(1 - x, ctx));
}

// One full evaluation at `digits` precision: returns value and the largest
// |term| encountered (for cancellation accounting).
using Pass = std::function<Complex(unsigned digits, Real& max_term)>;

OracleValue escalate(const Pass& pass, unsigned target, unsigned initial) {
    unsigned p = std::max(initial, target + 25);
    const unsigned cap = 4 * p + 200;
    for (;;) {
        Real max_term;
        Complex v;
        {
            ScopedPrecision sp(p);
            max_term = Real(0);
            v = pass(p, max_term);
        }
        long cancel = 0;
        if (!max_term.is_zero() && !abs(v).is_zero())
            cancel = std::max(0L, log10_floor(max_term) - log10_floor(abs(v)));
        if ((long)p >= (long)target + cancel + 15 || abs(v).is_zero()) {
            OracleValue out;
            out.value = v;
            out.digits_used = p;
            out.est_correct_digits = (long)p - cancel - 10;
            return out;
        }
        unsigned next = (unsigned)((long)target + cancel + 30);
        if (next > cap)
            throw std::runtime_error("oracle: precision escalation exceeded budget");
        p = next;
    }
}

// Arithmetic results inherit the precision of their operands, so values
// captured from the caller would pin a whole pass at the caller's precision.
// Re-round inputs into fresh numbers carrying the active default precision.
Real at_active_precision(const Real& x) {
    Real y(0);
    y += x;
    return y;
}
Complex at_active_precision(const Complex& z) {
    return Complex(at_active_precision(z.re), at_active_precision(z.im));
}

// Kahan-free plain summation is fine: precision is padded well beyond the
// target and terms are tracked for cancellation.
Complex bessel_J_pass(const Real& nu_in, const Complex& w_in, unsigned digits, Real& max_term,
                      const PrecisionContext& ctx0) {
    PrecisionContext ctx(std::max(30u, digits >= 20 ? digits - 20 : digits));
    Real nu = at_active_precision(nu_in);
    Complex w = at_active_precision(w_in);
    // negative integer order: J_{-n} = (-1)^n J_n
    if (nu < 0 && floor(nu) == nu) {
        Complex v = bessel_J_pass(-nu, w, digits, max_term, ctx0);
        return (static_cast<long>(nu.convert_to<long>()) % 2) ? -v : v;
    }
    Complex t = pow(Real(0.5) * w, nu) / gamma_signed(nu + 1, ctx);
    Complex q = Real(-0.25) * (w * w);
    Complex sum = t;
    max_term = std::max(max_term, abs(t));
    const Real eps = pow10(-(long)digits - 5);
    Real aw = abs(w);
    for (int k = 0; k < 1000000; ++k) {
        t = t * q / (Real(k + 1) * (nu + k + 1));
        sum += t;
        Real at = abs(t);
        max_term = std::max(max_term, at);
        if (at <= eps * max_term && Real(k) > aw) break;
    }
    return sum;
}

Complex bessel_Y_pass(int n, const Complex& w_in, unsigned digits, Real& max_term,
                      const PrecisionContext& ctx0) {
    Complex w = at_active_precision(w_in);
    const Real pi = pi_const();
    Complex hw = Real(0.5) * w;
    Complex jn = bessel_J_pass(Real(n), w, digits, max_term, ctx0);
    Complex total = (Real(2) / pi) * log(hw) * jn;
    max_term = std::max(max_term, abs(total));

    if (n > 0) {
        // finite sum: (w/2)^{-n}/pi * sum_{k<n} (n-k-1)!/k! (w^2/4)^k
        Complex q = hw * hw;
        Real fact(1); // (n-1)!
        for (int i = 2; i <= n - 1; ++i) fact *= i;
        Complex term(fact), acc(fact);
        for (int k = 1; k <= n - 1; ++k) {
            // ratio of (n-k-1)!/k! to previous: 1/((n-k) k)
            term = term * q / (Real(k) * Real(n - k));
            acc += term;
        }
        Complex fin = acc * pow(hw, Real(-n)) / pi;
        max_term = std::max(max_term, abs(fin));
        total -= fin;
    }

    // log-free tail: (w/2)^n/pi * sum_k (psi(k+1)+psi(n+k+1)) (-w^2/4)^k/(k! (n+k)!)
    Real psi1 = -euler_const(), psi2 = psi1;
    for (int i = 1; i <= n; ++i) psi2 += Real(1) / i;
    Real nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    Complex c(Real(1) / nfact);
    Complex q = Real(-1) * (hw * hw);
    Complex acc = (psi1 + psi2) * c;
    const Real eps = pow10(-(long)digits - 5);
    Real aw = abs(w), amax(0);
    for (int k = 0; k < 1000000; ++k) {
        c = c * q / (Real(k + 1) * Real(n + k + 1));
        psi1 += Real(1) / (k + 1);
        psi2 += Real(1) / (n + k + 1);
        Complex term = (psi1 + psi2) * c;
        acc += term;
        Real at = abs(term);
        amax = std::max(amax, at);
        if (at <= eps * amax && Real(k) > aw) break;
    }
    Complex tail = acc * pow(hw, Real(n)) / pi;
    max_term = std::max(max_term, amax * abs(pow(hw, Real(n))) / pi);
    total -= tail;
    return total;
}

Complex airy_pass(const Complex& zr_in, AiryKind which, unsigned digits, Real& max_term,
                  const PrecisionContext& ctx0) {
    PrecisionContext ctx(std::max(30u, digits >= 20 ? digits - 20 : digits));
    Complex zr = at_active_precision(zr_in);
    const Real third = Real(1) / 3;
    Real c1 = pow(Real(3), -2 * third) / gamma_fn(2 * third, ctx);
    Real c2 = pow(Real(3), -third) / gamma_fn(third, ctx);
    if (abs(zr).is_zero()) {
        max_term = std::max(max_term, std::max(c1, c2));
        return (which == AiryKind::Ai) ? Complex(c1) : Complex(-c2);
    }
    Complex z3 = zr * zr * zr;

    // f = sum alpha_k z^{3k}, g = sum beta_k z^{3k+1}; the derivative series
    // reuse the same coefficients.
    Complex fa(Real(1)), gb = zr;          // alpha_k z^{3k}, beta_k z^{3k+1}
    Complex f = fa, g = gb, fp(Real(0)), gp(Real(1));
    const Real eps = pow10(-(long)digits - 5);
    Real amax = std::max(abs(fa), abs(gb));
    Real azr = abs(zr);
    for (int k = 0; k < 1000000; ++k) {
        fa = fa * z3 / Real((3 * k + 2) * (3 * k + 3));
        gb = gb * z3 / Real((3 * k + 3) * (3 * k + 4));
        f += fa;
        g += gb;
        // f' term: alpha_{k+1} (3k+3) z^{3k+2}; g' term: beta_{k+1} (3k+4) z^{3k+3}
        fp += Real(3 * k + 3) * fa / zr;
        gp += Real(3 * k + 4) * gb / zr;
        Real at = std::max(abs(fa), abs(gb));
        amax = std::max(amax, at);
        if (at <= eps * amax && Real(3 * k) > azr * sqrt(azr)) break;
    }
    max_term = std::max(max_term, amax * std::max(c1, c2));
    return (which == AiryKind::Ai) ? c1 * f - c2 * g : c1 * fp - c2 * gp;
}

} // namespace

OracleValue bessel_J(const Real& nu, const Complex& w, const PrecisionContext& ctx) {
    if (abs(w).is_zero()) throw std::domain_error("bessel_J: w = 0 not supported");
    return escalate(
        [&](unsigned d, Real& mt) { return bessel_J_pass(nu, w, d, mt, ctx); }, ctx.digits,
        ctx.digits + 25 + (unsigned)std::max(0L, (long)(2 * abs(w).convert_to<double>() * 0.4343)));
}

OracleValue bessel_Y(int n, const Complex& w, const PrecisionContext& ctx) {
    if (n < 0) throw std::domain_error("bessel_Y: need n >= 0");
    if (abs(w).is_zero()) throw std::domain_error("bessel_Y: w = 0 not supported");
    return escalate(
        [&](unsigned d, Real& mt) { return bessel_Y_pass(n, w, d, mt, ctx); }, ctx.digits,
        ctx.digits + 25 + (unsigned)std::max(0L, (long)(2 * abs(w).convert_to<double>() * 0.4343)));
}

OracleValue bessel_H1(const Real& nu, const Complex& w, const PrecisionContext& ctx) {
    if (abs(w).is_zero()) throw std::domain_error("bessel_H1: w = 0 not supported");
    if (nu >= 0 && floor(nu) == nu) {
        int n = nu.convert_to<int>();
        return escalate(
            [&](unsigned d, Real& mt) {
                Complex j = bessel_J_pass(Real(n), w, d, mt, ctx);
                Complex y = bessel_Y_pass(n, w, d, mt, ctx);
                return j + Complex(Real(0), Real(1)) * y;
            },
            ctx.digits,
            ctx.digits + 25 +
                (unsigned)std::max(0L, (long)(2 * abs(w).convert_to<double>() * 0.4343)));
    }
    return escalate(
        [&](unsigned d, Real& mt) {
            const Real pi = pi_const();
            Complex jp = bessel_J_pass(nu, w, d, mt, ctx);
            Complex jm = bessel_J_pass(-nu, w, d, mt, ctx);
            Complex num = jm - exp(Complex(Real(0), -pi * nu)) * jp;
            mt = std::max(mt, std::max(abs(jm), abs(jp)));
            return num / (Complex(Real(0), Real(1)) * sin(pi * nu));
        },
        ctx.digits,
        ctx.digits + 25 + (unsigned)std::max(0L, (long)(2 * abs(w).convert_to<double>() * 0.4343)));
}

OracleValue airy_oracle(const Complex& x, AiryKind which, int branch,
                        const PrecisionContext& ctx) {
    if (branch != 0 && branch != 1 && branch != -1)
        throw std::domain_error("airy_oracle: branch must be 0 or +-1");
    double ax = abs(x).convert_to<double>();
    // series cancellation grows like exp((2/3)|x|^{3/2}) on the recessive side
    unsigned initial =
        ctx.digits + 15 + (unsigned)std::max(0.0, 1.5 * ax * std::sqrt(ax) * 0.4343);
    return escalate(
        [&](unsigned d, Real& mt) {
            Complex zr = x;
            if (branch != 0) {
                ScopedPrecision sp(d);
                zr = x * polar(Real(1), Real(-branch) * 2 * pi_const() / 3);
            }
            Complex v = airy_pass(zr, which, d, mt, ctx);
            if (which == AiryKind::AiPrime && branch != 0)
                v = v * polar(Real(1), Real(-branch) * 2 * pi_const() / 3);
            return v;
        },
        ctx.digits, initial);
}

ExactABResult exact_AB(const Real& nu, const Complex& z, int m, const PrecisionContext& ctx) {
    if (m < 0) throw std::domain_error("exact_AB: need m >= 0");
    if (nu <= 0) throw std::domain_error("exact_AB: need nu > 0");
    double lognu = std::log10(nu.convert_to<double>());
    unsigned target =
        std::max<unsigned>(ctx.digits, 30 + (unsigned)((2 * m + 2) * lognu) + 10);
    PrecisionContext wide(target);
    ScopedPrecision sp(wide);

    Complex xi, zeta;
    bessel_xi_zeta(z, xi, zeta, wide);

    Complex w = nu * z;
    Complex airy_arg = pow(Complex(nu), Real(2) / 3) * zeta;
    OracleValue J = bessel_J(nu, w, wide);
    OracleValue H = bessel_H1(nu, w, wide);
    OracleValue A0 = airy_oracle(airy_arg, AiryKind::Ai, 0, wide);
    OracleValue A0p = airy_oracle(airy_arg, AiryKind::AiPrime, 0, wide);
    OracleValue Am1 = airy_oracle(airy_arg, AiryKind::Ai, -1, wide);
    OracleValue Am1p = airy_oracle(airy_arg, AiryKind::AiPrime, -1, wide);

    const Real pi = pi_const();
    auto st = StirlingTable::build(2 * m + 1);
    Real ssum(0);
    for (int j = 0; j <= m; ++j) ssum += Real(st.at(2 * j + 1)) / pow(nu, 2 * j + 1);
    Real pref_r = sqrt(pi) * exp(nu + (Real(5) / 6 - nu) * log(nu) - ssum) * gamma_fn(nu, wide);
    Complex pref = pref_r * sqrt(Complex(z));

    Complex rot = exp(Complex(Real(0), pi / 6));
    Complex half_i(Real(0), Real(0.5));
    ExactABResult out;
    out.A = pref * (rot * Am1p.value * J.value - half_i * A0p.value * H.value);
    out.B = pref * (half_i * A0.value * H.value - rot * Am1.value * J.value);
    out.digits_used = target;
    return out;
}

} // namespace uniairy
