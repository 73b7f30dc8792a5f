#include "uniairy/special.hpp"

namespace uniairy {

Real gamma_fn(const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw std::domain_error("gamma_fn: argument must be positive");
    ScopedPrecision sp(ctx);
    Real xc(x); // re-round the input at working precision so tgamma runs there
    return tgamma(xc);
}

Real elliptic_K(const Real& k, const PrecisionContext& ctx) {
    if (!(k >= 0 && k < 1)) throw std::domain_error("elliptic_K: need 0 <= k < 1");
    ScopedPrecision sp(ctx);
    // K(k) = pi / (2 * AGM(1, sqrt(1-k^2)))
    Real a(1), b = sqrt((1 - Real(k)) * (1 + Real(k)));
    const Real eps = pow10(-(long)ctx.working_digits() + 2);
    for (int i = 0; i < 10000; ++i) {
        Real an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
        if (abs(a - b) <= eps * a) break;
    }
    return pi_const() / (2 * a);
}

} // namespace uniairy
