#pragma once

#include "uniairy/contour.hpp"
#include "uniairy/rational.hpp"
#include "uniairy/seqcoeff.hpp"

#include <memory>
#include <vector>

namespace uniairy {

struct SectorLabel {
    int j; // sector T_j containing z (ties broken toward T_0, then T_-1)
    int k; // adjacent sector: z in sub-sector T_{j,k}
};

// Connection data for fixed nu: the lambda_j linking the three LG solutions,
// plus the delta / mu evaluators entering the error bounds.
struct ConnectionData {
    Real nu;
    Real lambda_plus, lambda_minus;
    std::vector<Rational> stirling_odd; // C_s, s <= some cap, C[s]

    // |delta_{n,+-1}(nu)| via the exact expression (Gamma-based)
    Real delta(int n, const PrecisionContext& ctx) const;
    // mu_n(nu) = exp{-sum (-1)^s Ehat_s(0)/nu^s}
    Real mu(int n, const PrecisionContext& ctx) const;
};

// Generic turning-point problem model consumed by lgbounds / tploop.
class TurningPointModel {
public:
    virtual ~TurningPointModel() = default;

    virtual Complex turning_point() const = 0;
    virtual int max_order() const = 0;

    virtual void xi_zeta(const Complex& z, Complex& xi, Complex& zeta,
                         const PrecisionContext& ctx) const = 0;
    virtual Complex f_value(const Complex& z, const PrecisionContext& ctx) const = 0;
    virtual Complex g_value(const Complex& z, const PrecisionContext& ctx) const = 0;
    virtual Complex phi_value(const Complex& z, const PrecisionContext& ctx) const = 0;

    virtual const AlgebraicFunction& fhat(int s) const = 0;          // s = 1..max_order
    virtual Complex ehat(int s, const Complex& z, const PrecisionContext& ctx) const = 0;
    virtual Rational ehat_reference(int s, int j) const = 0;          // Ehat_s(z^{(j)})

    // script E_s(z) (tilde=false) or tilde version; needs xi != 0
    virtual Complex script_E(int s, const Complex& z, bool tilde,
                             const PrecisionContext& ctx) const = 0;

    virtual ConnectionData connection(const Real& u, const PrecisionContext& ctx) const = 0;
    virtual SectorLabel classify_sector(const Complex& z, const Complex& u,
                                        const PrecisionContext& ctx) const = 0;

    // progressive path from the reference point z^{(j)} to z (integrals take
    // absolute values, so orientation is irrelevant)
    virtual ContourSpec path_to_reference(int j, const Complex& z) const = 0;
};

// Standalone Bessel-map operations.
void bessel_xi_zeta(const Complex& z, Complex& xi, Complex& zeta, const PrecisionContext& ctx);
std::vector<AlgebraicFunction> fhat_coefficients(int S);
std::vector<AlgebraicFunction> ehat_coefficients(int S); // Ehat_s = P_s(z^2) (1-z^2)^(-3s/2)
ConnectionData connection_constants(const Real& nu, int m, const PrecisionContext& ctx);

// The full Bessel model of section 5: f = (1-z^2)/z^2, g = -1/(4 z^2),
// turning point z0 = 1, references z^{(0)} = 0 and z^{(+-1)} = -+ i*inf.
class BesselModel : public TurningPointModel {
public:
    explicit BesselModel(int S = 13);

    Complex turning_point() const override { return Complex(Real(1)); }
    int max_order() const override { return S_; }

    void xi_zeta(const Complex& z, Complex& xi, Complex& zeta,
                 const PrecisionContext& ctx) const override;
    Complex f_value(const Complex& z, const PrecisionContext& ctx) const override;
    Complex g_value(const Complex& z, const PrecisionContext& ctx) const override;
    Complex phi_value(const Complex& z, const PrecisionContext& ctx) const override;

    const AlgebraicFunction& fhat(int s) const override { return fhat_.at(s - 1); }
    Complex ehat(int s, const Complex& z, const PrecisionContext& ctx) const override;
    Rational ehat_reference(int s, int j) const override;

    Complex script_E(int s, const Complex& z, bool tilde,
                     const PrecisionContext& ctx) const override;
    // loop-tracked variant: caller supplies continued surd w and xi branches
    Complex script_E_tracked(int s, const Complex& z, const Complex& w, const Complex& xi,
                             bool tilde) const;

    ConnectionData connection(const Real& u, const PrecisionContext& ctx) const override;
    SectorLabel classify_sector(const Complex& z, const Complex& u,
                                const PrecisionContext& ctx) const override;
    ContourSpec path_to_reference(int j, const Complex& z) const override;

    const AlgebraicFunction& ehat_symbolic(int s) const { return ehat_.at(s - 1); }
    const AirySeqTable& seq() const { return seq_; }
    const StirlingTable& stirling() const { return stirling_; }

private:
    int S_;
    std::vector<AlgebraicFunction> fhat_, ehat_;
    AirySeqTable seq_;
    StirlingTable stirling_;
};

} // namespace uniairy
