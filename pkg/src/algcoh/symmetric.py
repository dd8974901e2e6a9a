"""Poincaré polynomials of the symmetric powers S^k C of a curve.

Algebraic grading uses the generating function

    sum_k P_A(S^k C; t) s^k = P_A(J_C; s^2 t) / ((1 - s)(1 - s t))

and ordinary grading uses Macdonald's

    sum_k P(S^k C; t) s^k = (1 + s t)^(2g) / ((1 - s)(1 - s t^2)).

:func:`vk_dimensions` counts the monomial basis ``x^i H_A^j(J_C)``,
``i + 2j <= k``, independently of the series, so the two can be compared.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import comb

from .exactalg import (
    ZERO,
    RationalFunctionExpr,
    UniPoly,
    geometric,
    monomial,
    series_coefficients,
)
from .jacobian import JacobianProfile, check_genus


@dataclass(frozen=True)
class SymPowerTable:
    profile: JacobianProfile | None
    genus: int
    grading: str
    polys: tuple[UniPoly, ...]

    @property
    def kmax(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, k: int) -> UniPoly:
        return self.polys[k]

    def rows(self) -> list[list[int]]:
        return [p.int_coeffs() for p in self.polys]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    def to_csv(self) -> str:
        width = max((len(r) for r in self.rows()), default=0)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k"] + [f"t^{i}" for i in range(width)])
        for k, row in enumerate(self.rows()):
            w.writerow([k] + row + [0] * (width - len(row)))
        return buf.getvalue()


def algebraic_generating_function(profile: JacobianProfile) -> RationalFunctionExpr:
    """``P_A(J_C; s^2 t) / ((1 - s)(1 - s t))``."""
    if profile.grading != "algebraic":
        raise ValueError("profile must be in algebraic grading")
    num = {2 * j: monomial(j, c) for j, c in enumerate(profile.poly) if c}
    return RationalFunctionExpr.build(num, [(1, 0), (1, 1)])


def ordinary_generating_function(g: int) -> RationalFunctionExpr:
    """``(1 + s t)^(2g) / ((1 - s)(1 - s t^2))``."""
    num = {j: monomial(j, comb(2 * g, j)) for j in range(2 * g + 1)}
    return RationalFunctionExpr.build(num, [(1, 0), (1, 2)])


def algebraic_sym_powers(profile: JacobianProfile, kmax: int) -> SymPowerTable:
    polys = series_coefficients(algebraic_generating_function(profile), kmax)
    return SymPowerTable(profile, profile.genus, "algebraic", tuple(polys))


def ordinary_sym_powers(g: int, kmax: int) -> SymPowerTable:
    g = check_genus(g)
    polys = series_coefficients(ordinary_generating_function(g), kmax)
    return SymPowerTable(None, g, "ordinary", tuple(polys))


def vk_dimensions(profile: JacobianProfile, k: int) -> UniPoly:
    """Graded dimension of the span of ``x^i * H_A^j(J_C)`` over ``i + 2j <= k``.

    The monomial ``x^i * b`` with ``b`` of degree ``j`` sits in degree ``i + j``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = [0] * (k + 1)
    for j in range(k // 2 + 1):
        c = profile.dim(j)
        if not c:
            continue
        for i in range(k - 2 * j + 1):
            out[i + j] += c
    return UniPoly(out)


def projective_bundle_poly(profile: JacobianProfile, k: int) -> UniPoly:
    """``P_A(J_C) * (1 + t + ... + t^(k-g))``: S^k C as a P^(k-g)-bundle over J_C."""
    if k < profile.genus:
        return ZERO
    return profile.poly * geometric(k - profile.genus + 1)
