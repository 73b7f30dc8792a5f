#include "uniairy/rational.hpp"

namespace uniairy {

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c = p.c;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly shift_up(const Poly& p, int k) {
    if (p.is_zero()) return p;
    std::vector<Rational> c(p.c.size() + k, Rational(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) c[i + k] = p.c[i];
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = Rational((unsigned)i) * c[i];
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Complex Poly::eval(const Complex& x) const {
    Complex r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Complex(Real(*it));
    return r;
}

bool Poly::divisible_by(const Poly& d) const {
    if (is_zero()) return true;
    if (d.is_zero() || d.degree() > degree()) return false;
    std::vector<Rational> r = c;
    for (int i = degree(); i >= d.degree(); --i) {
        Rational q = r[i] / d.c.back();
        if (q != 0)
            for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= q * d.c[j];
    }
    for (int i = 0; i < d.degree(); ++i)
        if (r[i] != 0) return false;
    return true;
}

Poly Poly::divide_exact(const Poly& d) const {
    if (is_zero()) return Poly();
    if (d.is_zero()) throw std::domain_error("Poly::divide_exact: division by zero polynomial");
    if (d.degree() > degree()) throw std::domain_error("Poly::divide_exact: not divisible");
    std::vector<Rational> r = c, q(degree() - d.degree() + 1, Rational(0));
    for (int i = degree(); i >= d.degree(); --i) {
        Rational f = r[i] / d.c.back();
        q[i - d.degree()] = f;
        if (f != 0)
            for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= f * d.c[j];
    }
    for (int i = 0; i < d.degree(); ++i)
        if (r[i] != 0) throw std::domain_error("Poly::divide_exact: nonzero remainder");
    return Poly(std::move(q));
}

namespace {
const Poly& surd_poly() {
    static const Poly S{Rational(1), Rational(0), Rational(-1)}; // 1 - z^2
    return S;
}
} // namespace

void AlgebraicFunction::normalize() {
    if (p.is_zero()) {
        m = k = 0;
        return;
    }
    if (m < 0) {
        p = shift_up(p, -m);
        m = 0;
    }
    while (k <= -2) {
        p = p * surd_poly();
        k += 2;
    }
    while (m > 0 && p.coeff(0) == 0) {
        p.c.erase(p.c.begin());
        --m;
    }
    while (k >= 2 && p.divisible_by(surd_poly())) {
        p = p.divide_exact(surd_poly());
        k -= 2;
    }
}

AlgebraicFunction operator+(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (((a.k - b.k) % 2) != 0)
        throw std::logic_error("AlgebraicFunction: cannot add mismatched surd parity");
    int m = std::max(a.m, b.m), k = std::max(a.k, b.k);
    Poly pa = shift_up(a.p, m - a.m), pb = shift_up(b.p, m - b.m);
    for (int i = 0; i < (k - a.k) / 2; ++i) pa = pa * surd_poly();
    for (int i = 0; i < (k - b.k) / 2; ++i) pb = pb * surd_poly();
    return AlgebraicFunction(pa + pb, m, k);
}

AlgebraicFunction operator-(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    return a + Rational(-1) * b;
}

AlgebraicFunction operator*(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    return AlgebraicFunction(a.p * b.p, a.m + b.m, a.k + b.k);
}

AlgebraicFunction operator*(const Rational& s, const AlgebraicFunction& f) {
    if (s == 0) return AlgebraicFunction::zero();
    return AlgebraicFunction(s * f.p, f.m, f.k);
}

bool operator==(const AlgebraicFunction& a, const AlgebraicFunction& b) {
    return (a - b).is_zero();
}

AlgebraicFunction AlgebraicFunction::derivative() const {
    if (is_zero()) return zero();
    const Poly z{Rational(0), Rational(1)};
    const Poly z2{Rational(0), Rational(0), Rational(1)};
    Poly num = p.derivative() * z * surd_poly() - Rational(m) * (p * surd_poly()) +
               Rational(k) * (z2 * p);
    return AlgebraicFunction(std::move(num), m + 1, k + 2);
}

AlgebraicFunction AlgebraicFunction::apply_D() const {
    if (is_zero()) return zero();
    const Poly z{Rational(0), Rational(1)};
    const Poly z2{Rational(0), Rational(0), Rational(1)};
    Poly num = p.derivative() * z * surd_poly() - Rational(m) * (p * surd_poly()) +
               Rational(k) * (z2 * p);
    return AlgebraicFunction(Rational(1, 2) * num, m, k + 3);
}

Complex AlgebraicFunction::eval_with_surd(const Complex& z, const Complex& w) const {
    Complex v = p.eval(z);
    if (m) v /= pow_int(z, m);
    if (k) v /= pow_int(w, k);
    return v;
}

Complex AlgebraicFunction::eval(const Complex& z, const PrecisionContext& ctx) const {
    ScopedPrecision sp(ctx);
    Complex w = sqrt(Complex(Real(1)) - z * z);
    return eval_with_surd(z, w);
}

Rational AlgebraicFunction::eval_at_zero() const {
    if (is_zero()) return Rational(0);
    if (m > 0) throw std::domain_error("AlgebraicFunction: pole at z = 0");
    return p.coeff(0);
}

} // namespace uniairy
