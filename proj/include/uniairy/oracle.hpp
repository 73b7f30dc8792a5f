#pragma once

#include "uniairy/airylg.hpp"
#include "uniairy/precision.hpp"

namespace uniairy {

// Reference values computed from ascending (Maclaurin-type) series, fully
// independent of the asymptotic machinery. Internal precision escalates
// automatically until the cancellation-adjusted accuracy reaches the target.
struct OracleValue {
    Complex value;
    unsigned digits_used = 0;      // working decimal digits of the final pass
    long est_correct_digits = 0;   // digits_used minus observed cancellation & guard
};

// J_nu(w), nu real (any sign), w off (-inf, 0].
OracleValue bessel_J(const Real& nu, const Complex& w, const PrecisionContext& ctx);

// Y_n(w) for integer n >= 0 (log-series form).
OracleValue bessel_Y(int n, const Complex& w, const PrecisionContext& ctx);

// H^(1)_nu(w) = J_nu + i Y_nu; non-integer nu via the J_{+-nu} combination.
OracleValue bessel_H1(const Real& nu, const Complex& w, const PrecisionContext& ctx);

// Ai_j(x) = Ai(x e^{-2 pi i j / 3}) or its derivative d/dx Ai_j(x), j in {0,+-1}.
OracleValue airy_oracle(const Complex& x, AiryKind which, int branch,
                        const PrecisionContext& ctx);

// Exact coefficient functions A_{2m+2}, B_{2m+2} for the Bessel map, assembled
// from the oracle Bessel/Airy values.
struct ExactABResult {
    Complex A, B;
    unsigned digits_used = 0;
};
ExactABResult exact_AB(const Real& nu, const Complex& z, int m, const PrecisionContext& ctx);

} // namespace uniairy
