#pragma once

#include "uniairy/airylg.hpp"
#include "uniairy/besselmap.hpp"
#include "uniairy/contour.hpp"

namespace uniairy {

// Bound integrals omega_{n,j} / varpi_{n,j} for a given reference point j.
struct LGBoundTerms {
    Real omega, varpi;
};

LGBoundTerms lg_bound_terms(const TurningPointModel& model, const Complex& z, int j, int n,
                            const Real& u, const QuadratureMode& mode,
                            const PrecisionContext& ctx);

// |eta_{n,j}| <= u^{-n} omega exp(u^{-1} varpi + u^{-n} omega)
Real eta_lg_bound(const LGBoundTerms& terms, const Real& abs_u, int n);

enum class ABKind { ScriptA, ScriptB };

struct ExpansionValue {
    Complex value;        // truncated expansion, error term set to zero
    Real certified_bound; // bound on |value - exact|, prefactor included
};

struct ScriptABResult {
    ExpansionValue A, B;
    Complex xi, zeta;
};

// Both coefficient functions at once (the bound quadrature is shared).
ScriptABResult script_AB_pair(const BesselModel& model, const Complex& z, const Real& nu,
                              int m, const PrecisionContext& ctx);
ExpansionValue script_AB(const BesselModel& model, const Complex& z, const Real& nu, int m,
                         ABKind kind, const PrecisionContext& ctx);

// c_{m,0}(nu) as an enclosure midpoint + halfwidth.
struct MatchingConstant {
    Real value, halfwidth;
};
MatchingConstant matching_constant_c(const BesselModel& model, const Real& nu, int m,
                                     const PrecisionContext& ctx);

// Exponential-form LG solution W_j (truncated) with relative eta bound.
struct LGSolution {
    Complex value;
    Real eta_bound;
};
LGSolution lg_solution_W(const BesselModel& model, const Complex& z, int j, int n,
                         const Real& nu, const PrecisionContext& ctx);

} // namespace uniairy
