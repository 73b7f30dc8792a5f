#pragma once

#include "uniairy/precision.hpp"

#include <vector>

namespace uniairy {

// Dense univariate polynomial over exact rationals.
struct Poly {
    std::vector<Rational> c; // c[i] multiplies z^i; normalized: no trailing zeros

    Poly() = default;
    Poly(std::initializer_list<Rational> init) : c(init) { trim(); }
    explicit Poly(std::vector<Rational> v) : c(std::move(v)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero poly
    Rational coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Rational(0); }

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    Complex eval(const Complex& x) const;

    // division by a known exact factor; throws if remainder != 0
    Poly divide_exact(const Poly& d) const;
    bool divisible_by(const Poly& d) const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& p);
bool operator==(const Poly& a, const Poly& b);

// z^k * p  (k >= 0)
Poly shift_up(const Poly& p, int k);

// Closed-form representation  p(z) * z^(-m) * (1 - z^2)^(-k/2).
// Closed under +, -, *, d/dz and the operator z/(2 sqrt(1-z^2)) d/dz
// (addition requires matching parity of k).
struct AlgebraicFunction {
    Poly p;
    int m = 0; // z^(-m)
    int k = 0; // (1-z^2)^(-k/2)

    AlgebraicFunction() = default;
    AlgebraicFunction(Poly poly, int m_, int k_) : p(std::move(poly)), m(m_), k(k_) { normalize(); }

    static AlgebraicFunction zero() { return {}; }
    static AlgebraicFunction one() { return {Poly{Rational(1)}, 0, 0}; }

    bool is_zero() const { return p.is_zero(); }
    void normalize();

    AlgebraicFunction derivative() const;
    // z / (2 (1-z^2)^{1/2}) * d/dz
    AlgebraicFunction apply_D() const;

    // value at exact rational z (numeric surd at ctx precision);
    // for odd k the surd (1-z^2)^{1/2} is taken principal.
    Complex eval(const Complex& z, const PrecisionContext& ctx) const;
    // evaluation with an externally-continued surd w = (1-z^2)^{1/2} branch.
    Complex eval_with_surd(const Complex& z, const Complex& w) const;

    // value at z = 0 (requires m = 0 after normalization, else pole)
    Rational eval_at_zero() const;
};

AlgebraicFunction operator+(const AlgebraicFunction& a, const AlgebraicFunction& b);
AlgebraicFunction operator-(const AlgebraicFunction& a, const AlgebraicFunction& b);
AlgebraicFunction operator*(const AlgebraicFunction& a, const AlgebraicFunction& b);
AlgebraicFunction operator*(const Rational& s, const AlgebraicFunction& f);
bool operator==(const AlgebraicFunction& a, const AlgebraicFunction& b);

} // namespace uniairy
