import cmath
import math

import pytest

uniairy = pytest.importorskip("uniairy")


def test_l0_center():
    assert uniairy.l0_kernel(1.0 + 0.0j) == pytest.approx(2 * math.pi, rel=1e-12)


def test_script_ab_matches_exact():
    r = uniairy.script_ab(0.5 + 0.0j, nu=10.0, m=3, digits=40)
    a_exact, b_exact = uniairy.exact_ab(10.0, 0.5 + 0.0j, m=3, digits=40)
    assert abs(r["A"] - a_exact) <= r["A_bound"]
    assert abs(r["B"] - b_exact) <= r["B_bound"]
    assert r["A_bound"] > 0 and r["B_bound"] > 0


def test_oracle_recurrence():
    nu, x = 3.0, 2.0 + 0.5j
    lhs = uniairy.bessel_j(nu - 1, x, digits=40) + uniairy.bessel_j(nu + 1, x, digits=40)
    rhs = 2 * nu / x * uniairy.bessel_j(nu, x, digits=40)
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs)
    h1 = uniairy.bessel_h1(nu, x, digits=40)
    assert cmath.isfinite(h1)


def test_airy_lg_bound_holds():
    r = uniairy.airy_lg(10.0 + 0.0j, 1.0 + 0.0j, n=6, which="Ai", digits=40)
    ref = uniairy.airy(10.0 ** (2.0 / 3.0) * 1.5 ** (2.0 / 3.0) + 0.0j, which="Ai", digits=40)
    assert abs(ref / r["value"] - 1) <= r["bound"]


def test_loop_cauchy():
    loop = uniairy.Loop(nu=50.0, n=8, r0=0.5, digits=40)
    assert loop.rho > 0
    out = loop.cauchy(1.0 + 0.0j, m=3, kind="A")
    a_exact, _ = uniairy.exact_ab(50.0, 1.0 + 0.0j, m=3, digits=40)
    assert abs(out["value"] - a_exact) <= out["bound"]
