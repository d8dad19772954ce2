"""Quadrature and root-finding utilities.

Two independent integration routes are provided on purpose: the adaptive
Simpson rule is the workhorse, and a fixed-node Gauss-Legendre rule serves
as a cross-check against silent bias in either method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, QuadratureError

ADAPTIVE_SIMPSON = "adaptive-simpson"
GAUSS_LEGENDRE = "gauss-legendre"

QUADRATURE_METHODS = (ADAPTIVE_SIMPSON, GAUSS_LEGENDRE)


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration method and accuracy settings.

    ``tolerance`` is an absolute target for the integral; ``max_depth``
    bounds the Simpson recursion and ``nodes`` sets the Gauss-Legendre
    rule size.
    """

    method: str = ADAPTIVE_SIMPSON
    tolerance: float = 1e-10
    max_depth: int = 40
    nodes: int = 256

    def __post_init__(self) -> None:
        if self.method not in QUADRATURE_METHODS:
            raise DomainError(f"unknown quadrature method {self.method!r}; "
                              f"expected one of {QUADRATURE_METHODS}")
        if not self.tolerance > 0.0:
            raise DomainError("quadrature tolerance must be > 0")
        if self.max_depth < 1:
            raise DomainError("quadrature max_depth must be >= 1")
        if self.nodes < 2:
            raise DomainError("quadrature node count must be >= 2")


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     tolerance: float = 1e-10, max_depth: int = 40) -> tuple[float, float]:
    """Integrate ``f`` over ``[a, b]`` with the adaptive Simpson rule.

    Returns ``(value, error_estimate)``. The tolerance is split across
    subintervals, so the accumulated estimate stays below ``tolerance``.
    Raises :class:`QuadratureError` (carrying the best estimate) if any
    panel is still unconverged at ``max_depth``.
    """
    if b < a:
        raise DomainError("integration interval is reversed")
    if a == b:
        return 0.0, 0.0

    unconverged = 0
    error = 0.0

    def recurse(x0: float, x2: float, f0: float, f1: float, f2: float,
                whole: float, tol: float, depth: int) -> float:
        nonlocal unconverged, error
        x1 = 0.5 * (x0 + x2)
        lm = 0.5 * (x0 + x1)
        rm = 0.5 * (x1 + x2)
        flm = f(lm)
        frm = f(rm)
        left = (x1 - x0) / 6.0 * (f0 + 4.0 * flm + f1)
        right = (x2 - x1) / 6.0 * (f1 + 4.0 * frm + f2)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol or depth <= 0:
            if abs(delta) > 15.0 * tol:
                unconverged += 1
            error += abs(delta) / 15.0
            return left + right + delta / 15.0
        return (recurse(x0, x1, f0, flm, f1, left, 0.5 * tol, depth - 1)
                + recurse(x1, x2, f1, frm, f2, right, 0.5 * tol, depth - 1))

    mid = 0.5 * (a + b)
    fa, fm, fb = f(a), f(mid), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    value = recurse(a, b, fa, fm, fb, whole, tolerance, max_depth)
    if unconverged:
        raise QuadratureError(
            f"adaptive Simpson left {unconverged} panel(s) unconverged at depth {max_depth}",
            best_estimate=value, error_estimate=error)
    return value, error


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_rule(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    rule = _GL_CACHE.get(nodes)
    if rule is None:
        rule = np.polynomial.legendre.leggauss(nodes)
        _GL_CACHE[nodes] = rule
    return rule


def _gl_value(f: Callable[[float], float], a: float, b: float, nodes: int) -> float:
    x, w = _gl_rule(nodes)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * math.fsum(wi * f(half * xi + mid) for xi, wi in zip(x, w))


def gauss_legendre(f: Callable[[float], float], a: float, b: float,
                   nodes: int = 256) -> tuple[float, float]:
    """Fixed Gauss-Legendre quadrature of ``f`` over ``[a, b]``.

    The error estimate is the difference against the half-size rule.
    """
    if b < a:
        raise DomainError("integration interval is reversed")
    if a == b:
        return 0.0, 0.0
    value = _gl_value(f, a, b, nodes)
    coarse = _gl_value(f, a, b, max(2, nodes // 2))
    return value, abs(value - coarse)


def find_root_bracketed(f: Callable[[float], float], xtol: float = 1e-12,
                        bracket: tuple[float, float] = (0.0, 1.0),
                        max_growth: int = 200) -> float:
    """Solve ``f(x) = 0`` for increasing ``f`` with a bracketed hybrid method.

    The initial bracket is grown geometrically until it straddles a sign
    change, then handed to a bisection/secant hybrid with absolute
    tolerance ``xtol`` on the root.
    """
    lo, hi = bracket
    if not hi > lo:
        raise DomainError("initial bracket must satisfy hi > lo")
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    for _ in range(max_growth):
        if flo * fhi <= 0.0:
            break
        lo, flo = hi, fhi
        hi *= 2.0
        fhi = f(hi)
    else:
        raise DomainError("no sign change found while growing the bracket")
    if fhi == 0.0:
        return hi
    return float(brentq(f, lo, hi, xtol=xtol))
