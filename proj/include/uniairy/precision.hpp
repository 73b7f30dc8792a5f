#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/math/constants/constants.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace uniairy {

namespace mp = boost::multiprecision;

// Variable-precision real. Precision of new values is taken from the
// thread-local default, set via ScopedPrecision.
using Real = mp::number<mp::mpfr_float_backend<0, mp::allocate_dynamic>, mp::et_off>;
using Rational = mp::mpq_rational;
using Integer = mp::mpz_int;

struct PrecisionContext {
    unsigned digits = 80; // decimal significant digits

    PrecisionContext() = default;
    explicit PrecisionContext(unsigned d) : digits(d) {
        if (d < 30) throw std::domain_error("PrecisionContext: digits must be >= 30");
    }
    // Internal guard digits so that results are good to the full `digits`.
    unsigned working_digits() const { return digits + 20; }
};

class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits10)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    explicit ScopedPrecision(const PrecisionContext& ctx)
        : ScopedPrecision(ctx.working_digits()) {}
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline Real pi_const() { return boost::math::constants::pi<Real>(); }
inline Real euler_const() { return boost::math::constants::euler<Real>(); }

inline Real pow10(long e) {
    Real ten(10);
    return pow(ten, e);
}

// A complex value over Real. NaN components are rejected at construction
// points that matter (quadrature, oracle) via explicit checks.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}

    bool is_real() const { return im.is_zero(); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(const Real& s, Complex a) { a.re *= s; a.im *= s; return a; }
inline Complex operator*(Complex a, const Real& s) { a.re *= s; a.im *= s; return a; }
inline Complex operator/(Complex a, const Real& s) { a.re /= s; a.im /= s; return a; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return sqrt(norm(a)); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex polar(const Real& r, const Real& theta) {
    return Complex(r * cos(theta), r * sin(theta));
}

inline Complex exp(const Complex& a) { return polar(exp(a.re), a.im); }

// Principal branch, arg in (-pi, pi].
inline Complex log(const Complex& a) { return Complex(log(abs(a)), arg(a)); }

inline Complex sqrt(const Complex& a) {
    if (a.im.is_zero() && a.re >= 0) return Complex(sqrt(a.re));
    return exp(Real(0.5) * log(a));
}

inline Complex pow(const Complex& a, const Real& p) {
    if (a.im.is_zero() && a.re > 0) return Complex(pow(a.re, p));
    return exp(p * log(a));
}

inline Complex pow_int(const Complex& a, long n) {
    if (n < 0) return Complex(Real(1)) / pow_int(a, -n);
    Complex r(Real(1)), b = a;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Complex cosh(const Complex& a) {
    Complex e = exp(a);
    return Real(0.5) * (e + Complex(Real(1)) / e);
}
inline Complex sinh(const Complex& a) {
    Complex e = exp(a);
    return Real(0.5) * (e - Complex(Real(1)) / e);
}

inline bool isfinite(const Complex& a) {
    return boost::math::isfinite(a.re) && boost::math::isfinite(a.im);
}

std::string to_string(const Real& x, unsigned sig_digits = 17);
std::string to_string(const Complex& z, unsigned sig_digits = 17);

} // namespace uniairy
