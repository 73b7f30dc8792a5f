#pragma once

#include "uniairy/lgbounds.hpp"

#include <vector>

namespace uniairy {

// Kernel l_0(z) = loop integral of |dt/(t-z)| over |t-z0| = r0, in closed
// form via the complete elliptic integral K. Diverges logarithmically at the
// rim, so callers must keep |z-z0| < r0.
Real l0_kernel(const Complex& z, const Complex& z0, const Real& r0, const PrecisionContext& ctx);

// Everything attached to the loop contour Gamma = |z-z0| = r0 for fixed
// (nu, n): extrema over Gamma, the loop-wide omega/varpi maxima over the six
// partial paths gamma_{j,l}, and the assembled e_n / d_{2m+2} factors.
struct LoopData {
    Real nu;
    int n = 0; // bound order, n = 2m+2 for the loop bounds
    Real r0;
    Complex center;

    Real Upsilon;       // inf over Gamma of |zeta f|^{1/4}
    Real Upsilon_tilde; // sup over Gamma of |zeta/f|^{1/4}
    Real rho;           // inf over Gamma of |xi|

    // suprema of Re script E_s (index s = 1..n-1; slot 0 unused)
    std::vector<Real> M, N, M_tilde, N_tilde;

    Real omega_n_loop, varpi_n_loop; // maxima over the six gamma_{j,l}
    Real delta_n;                    // max over j = +-1 of |delta_{n,j}|
    Real e_n, e_n_tilde;
    Real d_2m2, d_2m2_tilde; // only set when n is even

    std::vector<ContourSpec> gamma_paths; // the six gamma_{j,l}
    std::vector<SectorLabel> gamma_labels;
};

// Suprema are located by dense sampling (samples points on the circle) plus
// golden-section refinement, then inflated by the safety factor; they are not
// rigorous enclosures.
LoopData build_loop_data(const BesselModel& model, const Real& nu, int n, const Real& r0,
                         const PrecisionContext& ctx, int samples = 720, double safety = 1.01);

// Raw periodic-trapezoid value of the Cauchy loop integral with N nodes; the
// branch state is tracked continuously around the circle starting from the
// real point z0 - r0 rotated by start_shift. Exposed for the start-shift and
// spectral-convergence checks.
Complex cauchy_trapezoid(const BesselModel& model, const Complex& z, const Real& nu, int m,
                         ABKind kind, const Real& r0, int nodes, const Real& start_shift,
                         const PrecisionContext& ctx);

// Script A (or B) at z inside Gamma by the Cauchy-integral representation,
// with the kappa-based certified bound from the loop data.
ExpansionValue cauchy_AB(const BesselModel& model, const Complex& z, const Real& nu, int m,
                         ABKind kind, const LoopData& loop, const PrecisionContext& ctx);

} // namespace uniairy
