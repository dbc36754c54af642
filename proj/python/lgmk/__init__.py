"""Landau-Ginzburg mirrors of log Calabi-Yau pairs."""

from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    GeometryError,
    InconsistencyError,
    Pair,
    StructuralError,
    UnsupportedError,
    euler_gamma,
    gamma_class,
    lhs_real,
    load,
    load_json,
    load_preset,
    potential,
    preset_names,
    proper_potential,
    qde,
    reflection_check,
    rhs_gamma,
    theta_product,
    verify,
    zeta,
)


def periods(pair, order, kind="regularized"):
    """Period coefficients indexed by anticanonical degree, as Fractions."""
    return [Fraction(c) for c in _core.periods(pair, order, kind)]


def mirror_map_coefficients(pair, order):
    return [Fraction(c) for c in _core.mirror_map_coefficients(pair, order)]


def cli(*args):
    """Runs the lgmk command line in-process: (exit_code, stdout, stderr)."""
    return _core.cli([str(a) for a in args])


__all__ = [
    "DomainError",
    "GeometryError",
    "InconsistencyError",
    "Pair",
    "StructuralError",
    "UnsupportedError",
    "cli",
    "euler_gamma",
    "gamma_class",
    "lhs_real",
    "load",
    "load_json",
    "load_preset",
    "mirror_map_coefficients",
    "periods",
    "potential",
    "preset_names",
    "proper_potential",
    "qde",
    "reflection_check",
    "rhs_gamma",
    "theta_product",
    "verify",
    "zeta",
]
