#pragma once

#include "uniairy/precision.hpp"
#include "uniairy/seqcoeff.hpp"

namespace uniairy {

enum class AiryKind { Ai, AiPrime };

struct AiryBoundInputs {
    Real gamma_n, beta_n, gamma_tilde_n, beta_tilde_n;
};

struct AiryExpansionResult {
    Complex value;   // expansion with the error term set to zero
    Real bound;      // certified bound on |eta|
    int n;
    int branch;      // j in {0, +1, -1}
};

// gamma_n / beta_n (and tilde) from the a_s / ~a_s tables and Lambda_p caps.
AiryBoundInputs bound_inputs(const Complex& u, const Complex& xi, int n,
                             const PrecisionContext& ctx);

// |u|^-n gamma exp(|u|^-1 beta + |u|^-n gamma)
Real eta_bound(const Real& gamma, const Real& beta, const Real& abs_u, int n);

// LG expansion of Ai_j(u^{2/3} zeta) or Ai'_j, zeta = (3 xi / 2)^{2/3}, with
// certified bound. Requires |arg(u xi e^{-j pi i})| <= pi and xi != 0, n >= 2.
AiryExpansionResult airy_lg(const Complex& u, const Complex& xi, int n, AiryKind which,
                            int branch, const PrecisionContext& ctx);

} // namespace uniairy
