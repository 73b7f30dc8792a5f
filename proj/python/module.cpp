#include "uniairy/oracle.hpp"
#include "uniairy/tploop.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <complex>
#include <memory>

namespace py = pybind11;
using namespace uniairy;

namespace {

Complex from_py(const std::complex<double>& z) { return Complex(Real(z.real()), Real(z.imag())); }

std::complex<double> to_py(const Complex& z) {
    return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

double to_pyd(const Real& x) { return x.convert_to<double>(); }

// Bundles the model with loop data so cauchy evaluations need no re-setup.
struct Loop {
    BesselModel model;
    PrecisionContext ctx;
    LoopData data;

    Loop(double nu, int n, double r0, unsigned digits)
        : model(std::max(n + 1 + (n % 2 == 0 ? 0 : 1), 13)), ctx(digits),
          data(build_loop_data(model, Real(nu), n, Real(r0), ctx)) {}

    py::dict cauchy(const std::complex<double>& z, int m, const std::string& kind) const {
        ABKind k = kind == "A" ? ABKind::ScriptA : ABKind::ScriptB;
        ExpansionValue v = cauchy_AB(model, from_py(z), data.nu, m, k, data, ctx);
        py::dict out;
        out["value"] = to_py(v.value);
        out["bound"] = to_pyd(v.certified_bound);
        return out;
    }
};

} // namespace

PYBIND11_MODULE(uniairy, mod) {
    mod.doc() = "Uniform Airy-type Bessel asymptotics with certified error bounds";

    mod.def(
        "script_ab",
        [](const std::complex<double>& z, double nu, int m, unsigned digits) {
            PrecisionContext ctx(digits);
            BesselModel model(std::max(2 * m + 3, 13));
            ScriptABResult r = script_AB_pair(model, from_py(z), Real(nu), m, ctx);
            py::dict out;
            out["A"] = to_py(r.A.value);
            out["A_bound"] = to_pyd(r.A.certified_bound);
            out["B"] = to_py(r.B.value);
            out["B_bound"] = to_pyd(r.B.certified_bound);
            out["xi"] = to_py(r.xi);
            out["zeta"] = to_py(r.zeta);
            return out;
        },
        py::arg("z"), py::arg("nu"), py::arg("m") = 5, py::arg("digits") = 50,
        "Coefficient functions script A / script B with certified bounds");

    mod.def(
        "exact_ab",
        [](double nu, const std::complex<double>& z, int m, unsigned digits) {
            ExactABResult r = exact_AB(Real(nu), from_py(z), m, PrecisionContext(digits));
            return py::make_tuple(to_py(r.A), to_py(r.B));
        },
        py::arg("nu"), py::arg("z"), py::arg("m") = 5, py::arg("digits") = 50,
        "Exact script A / script B assembled from the Bessel/Airy oracles");

    mod.def(
        "l0_kernel",
        [](const std::complex<double>& z, const std::complex<double>& z0, double r0,
           unsigned digits) {
            return to_pyd(l0_kernel(from_py(z), from_py(z0), Real(r0), PrecisionContext(digits)));
        },
        py::arg("z"), py::arg("z0") = std::complex<double>(1.0, 0.0), py::arg("r0") = 0.5,
        py::arg("digits") = 30, "Loop kernel l0(z) in closed elliptic-integral form");

    mod.def(
        "airy_lg",
        [](const std::complex<double>& u, const std::complex<double>& xi, int n,
           const std::string& which, int branch, unsigned digits) {
            AiryKind k = which == "Ai" ? AiryKind::Ai : AiryKind::AiPrime;
            AiryExpansionResult r = airy_lg(from_py(u), from_py(xi), n, k, branch,
                                            PrecisionContext(digits));
            py::dict out;
            out["value"] = to_py(r.value);
            out["bound"] = to_pyd(r.bound);
            return out;
        },
        py::arg("u"), py::arg("xi"), py::arg("n") = 6, py::arg("which") = "Ai",
        py::arg("branch") = 0, py::arg("digits") = 30,
        "LG expansion of Ai_j(u^{2/3} zeta) with certified relative bound");

    mod.def(
        "bessel_j",
        [](double nu, const std::complex<double>& x, unsigned digits) {
            return to_py(bessel_J(Real(nu), from_py(x), PrecisionContext(digits)).value);
        },
        py::arg("nu"), py::arg("x"), py::arg("digits") = 30, "Oracle J_nu(x)");

    mod.def(
        "bessel_h1",
        [](double nu, const std::complex<double>& x, unsigned digits) {
            return to_py(bessel_H1(Real(nu), from_py(x), PrecisionContext(digits)).value);
        },
        py::arg("nu"), py::arg("x"), py::arg("digits") = 30, "Oracle H^(1)_nu(x)");

    mod.def(
        "airy",
        [](const std::complex<double>& x, const std::string& which, int branch, unsigned digits) {
            AiryKind k = which == "Ai" ? AiryKind::Ai : AiryKind::AiPrime;
            return to_py(airy_oracle(from_py(x), k, branch, PrecisionContext(digits)).value);
        },
        py::arg("x"), py::arg("which") = "Ai", py::arg("branch") = 0, py::arg("digits") = 30,
        "Oracle Ai_j(x) or Ai_j'(x)");

    mod.def(
        "matching_constant",
        [](double nu, int m, unsigned digits) {
            BesselModel model(std::max(2 * m + 3, 13));
            MatchingConstant c = matching_constant_c(model, Real(nu), m,
                                                     PrecisionContext(digits));
            return py::make_tuple(to_pyd(c.value), to_pyd(c.halfwidth));
        },
        py::arg("nu"), py::arg("m") = 5, py::arg("digits") = 50,
        "Enclosure of the matching constant c_{m,0}(nu)");

    py::class_<Loop>(mod, "Loop", "Loop contour data for the Cauchy-integral evaluation")
        .def(py::init<double, int, double, unsigned>(), py::arg("nu"), py::arg("n"),
             py::arg("r0") = 0.5, py::arg("digits") = 50)
        .def("cauchy", &Loop::cauchy, py::arg("z"), py::arg("m"), py::arg("kind") = "A",
             "script A or B at z inside the loop, with kappa-based bound")
        .def_property_readonly("rho", [](const Loop& l) { return to_pyd(l.data.rho); })
        .def_property_readonly("upsilon", [](const Loop& l) { return to_pyd(l.data.Upsilon); })
        .def_property_readonly("omega_n",
                               [](const Loop& l) { return to_pyd(l.data.omega_n_loop); });
}
