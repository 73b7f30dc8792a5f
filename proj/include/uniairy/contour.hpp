#pragma once

#include "uniairy/precision.hpp"

#include <functional>
#include <variant>
#include <vector>

namespace uniairy {

// Path pieces for the absolute-value line integrals. Truncated rays may only
// appear as the final segment of a contour.
struct LineSegment {
    Complex a, b;
};
struct ArcSegment {
    Complex center;
    Real radius;
    Real phi0, phi1; // traversed from phi0 to phi1 (either direction)
};
struct RaySegment {
    Complex start;
    Complex direction; // need not be normalized
};

using Segment = std::variant<LineSegment, ArcSegment, RaySegment>;

struct ContourSpec {
    std::vector<Segment> segments;

    // Throws std::invalid_argument if consecutive segments do not share
    // endpoints or a ray is not last.
    void validate(const Real& tol) const;
};

Complex segment_point(const Segment& s, const Real& t);      // t in [0,1] (rays: t in [0,inf))
Complex segment_start(const Segment& s);
Complex segment_end(const Segment& s); // rays: throws

struct QuadratureMode {
    enum Kind { FixedGauss, Adaptive } kind = Adaptive;
    int nodes = 30;     // FixedGauss node count
    Real rel_tol;       // Adaptive stopping tolerance (relative); default 10^(-digits-2)
    QuadratureMode() : rel_tol(0) {}
    static QuadratureMode fixed_gauss(int n) {
        QuadratureMode m;
        m.kind = FixedGauss;
        m.nodes = n;
        return m;
    }
    static QuadratureMode adaptive(Real tol = Real(0)) {
        QuadratureMode m;
        m.kind = Adaptive;
        m.rel_tol = tol;
        return m;
    }
};

struct QuadratureError : std::runtime_error {
    Real last_estimate, previous_estimate;
    QuadratureError(const std::string& msg, Real last, Real prev)
        : std::runtime_error(msg), last_estimate(last), previous_estimate(prev) {}
};

// Gauss-Legendre nodes/weights on [-1,1]; 1 <= n <= 200.
std::vector<std::pair<Real, Real>> gauss_legendre_nodes(int n, const PrecisionContext& ctx);

// Multi-component integrand: given a path point t, fills |f_i(t)| for each
// component i. All components share quadrature points (and, in adaptive mode,
// the refinement is driven by the worst component).
using AbsIntegrand = std::function<void(const Complex& t, std::vector<Real>& out)>;

// Computes, for each component, \int |f_i(t)| |dt| over the contour.
std::vector<Real> integrate_contour_multi(const AbsIntegrand& f, std::size_t n_components,
                                          const ContourSpec& path, const QuadratureMode& mode,
                                          const PrecisionContext& ctx);

// Single-component convenience wrapper.
Real integrate_contour(const std::function<Real(const Complex&)>& f_abs, const ContourSpec& path,
                       const QuadratureMode& mode, const PrecisionContext& ctx);

} // namespace uniairy
