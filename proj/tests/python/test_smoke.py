import math
from fractions import Fraction

import pytest
import scipy.special

import lgmk


def test_presets_load():
    assert {"P1", "P2", "P3", "P1xP1", "P2_cubic", "point"} <= set(lgmk.preset_names())
    p2 = lgmk.load_preset("P2")
    assert (p2.n, p2.m, p2.r) == (2, 3, 1)
    assert p2.rays == [[1, 0], [0, 1], [-1, -1]]
    with pytest.raises(lgmk.GeometryError):
        lgmk.load_preset("P9")


def test_potential_and_periods():
    p2 = lgmk.load_preset("P2")
    assert lgmk.potential(p2) == "x1 + x2 + t/(x1*x2)"
    reg = lgmk.periods(p2, 9)
    assert [reg[d] for d in (0, 3, 6, 9)] == [1, 6, 90, 1680]
    assert lgmk.periods(p2, 9, "classical") == reg
    q = lgmk.periods(p2, 6, "quantum")
    assert q[6] == Fraction(1, 8)


def test_theta_product():
    p2 = lgmk.load_preset("P2")
    assert lgmk.theta_product(p2, [1, 1, 0], [0, 0, 1]) == {(0, 0, 0): "t"}


def test_recurrence():
    seq = [str(math.factorial(3 * d) // math.factorial(d) ** 3) for d in range(16)]
    r = lgmk.qde(seq)
    assert r["found"] and r["order"] == 1 and r["degree"] == 2


def test_mirror_map_and_proper_potential():
    cubic = lgmk.load_preset("P2_cubic")
    coeffs = lgmk.mirror_map_coefficients(cubic, 6)
    assert (coeffs[3], coeffs[6]) == (2, 15)
    assert lgmk.proper_potential(cubic, 9) == "x + 2*t/x^2 + 5*t^2/x^5 + 32*t^3/x^8"


def test_gamma_checks():
    p1 = lgmk.load_preset("P1")
    rep = lgmk.verify(p1, cycle="compact", sheaf="Opt", order=8)
    assert rep["exact_match"] and rep["rel_err"] == 0.0
    value, err = lgmk.lhs_real(p1, z=1.0, t=0.1)
    ref = 2 * scipy.special.k0(0.2)
    assert abs(value - ref) / ref < 1e-9
    assert abs(lgmk.rhs_gamma(p1, z=1.0, t=0.1) - ref) / ref < 1e-9
    with pytest.raises(lgmk.DomainError):
        lgmk.lhs_real(p1, t=1e-9)


def test_gamma_class_and_constants():
    g = lgmk.gamma_class(lgmk.load_preset("P1"))
    assert g[1] == pytest.approx(-2 * 0.5772156649015329, rel=1e-14)
    assert lgmk.zeta(2) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    assert lgmk.reflection_check(0.3) < 1e-12


def test_cli_in_process():
    code, out, err = lgmk.cli("periods", "--preset", "P2", "--order", "9")
    assert code == 0
    assert out.splitlines()[-1] == "9,1680,1"
    code, out, err = lgmk.cli("describe", "--preset", "nope")
    assert code == 1 and "error" in err
