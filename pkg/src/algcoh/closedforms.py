"""Closed-form Poincaré polynomials of the moduli space N_C and the monomial
counts that match them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exactalg import ONE, ZERO, UniPoly, exact_divide, monomial, substitute_power
from .jacobian import JacobianProfile, check_genus

# algebraic degrees of Newstead's generators alpha, beta, gamma
ALPHA_DEGREE = 1
BETA_DEGREE = 2
GAMMA_DEGREE = 3


class MirrorOverlap(ArithmeticError):
    pass


class CountMismatch(ArithmeticError):
    pass


def _one_minus(k: int, step: int = 1) -> UniPoly:
    return ONE - monomial(step * k)


def theorem1_poly(profile: JacobianProfile) -> UniPoly:
    """``(P_A(J; t^3) - t^g P_A(J; t)) / ((1 - t)(1 - t^2))``."""
    if profile.grading != "algebraic":
        raise ValueError("theorem1_poly needs an algebraic profile")
    p, g = profile.poly, profile.genus
    num = substitute_power(p, 3) - p.shift(g)
    return exact_divide(num, _one_minus(1) * _one_minus(2))


def harder_poly(g: int) -> UniPoly:
    """Ordinary Poincaré polynomial ``(P(J; t^3) - t^(2g) P(J; t)) / ((1 - t^2)(1 - t^4))``."""
    g = check_genus(g)
    p = UniPoly([comb(2 * g, k) for k in range(2 * g + 1)])
    num = substitute_power(p, 3) - p.shift(2 * g)
    return exact_divide(num, _one_minus(2) * _one_minus(4))


def general_curve_poly(g: int) -> UniPoly:
    """``(1-t^g)(1-t^(g+1))(1-t^(g+2)) / ((1-t)(1-t^2)(1-t^3))``."""
    g = check_genus(g)
    num = _one_minus(g) * _one_minus(g + 1) * _one_minus(g + 2)
    return exact_divide(num, _one_minus(1) * _one_minus(2) * _one_minus(3))


@dataclass(frozen=True)
class NewsteadCount:
    genus: int
    direct_count: UniPoly
    closed_sum: UniPoly


def _direct_newstead(g: int) -> UniPoly:
    top = 3 * g - 3
    counts: dict[int, int] = {}
    for n in range(top // 2 + 1):
        c = 0
        for p in range(n // GAMMA_DEGREE + 1):
            for j in range((n - GAMMA_DEGREE * p) // BETA_DEGREE + 1):
                i = n - GAMMA_DEGREE * p - BETA_DEGREE * j
                if i + 2 * p < g:
                    c += 1
        counts[n] = c
    # alpha^(3g-3-2n) carries degree n to 3g-3-n
    for n in range(top // 2 + 1):
        mirror = top - n
        if mirror == n:
            continue
        if mirror in counts:
            raise MirrorOverlap(f"degree {mirror} reached twice at genus {g}")
        counts[mirror] = counts[n]
    return UniPoly([counts[k] for k in range(top + 1)])


def _closed_newstead(g: int) -> UniPoly:
    total = ZERO
    den = _one_minus(1) * _one_minus(2)
    for p in range(g // 2 + 1):
        num = _one_minus(g - 2 * p) * _one_minus(2 * g - 4 * p)
        total = total + exact_divide(num, den).shift(3 * p)
    return total


def newstead_monomials(g: int, *, check: bool = True) -> NewsteadCount:
    """Count the independent monomials ``alpha^i beta^j gamma^p`` degree by degree.

    Degrees ``n`` with ``2n <= 3g - 3`` are counted directly over
    ``i + 2j + 3p = n``, ``i + 2p < g``; the upper half is filled by the
    reflection ``n -> 3g - 3 - n``.  With ``check`` set, both the direct
    count and the closed sum must equal :func:`general_curve_poly`.
    """
    g = check_genus(g)
    result = NewsteadCount(g, _direct_newstead(g), _closed_newstead(g))
    if check:
        expected = general_curve_poly(g)
        if not (result.direct_count == result.closed_sum == expected):
            raise CountMismatch(
                f"g={g}: direct {result.direct_count}, closed {result.closed_sum}, "
                f"general-curve {expected}"
            )
    return result


def remark62_poly(profile: JacobianProfile, *, check: bool = True) -> UniPoly:
    """Graded dimension of ``sum alpha^i beta^j H_A^k(J_C)`` over ``i+2k < g``, ``j+2k < g``."""
    if profile.grading != "algebraic":
        raise ValueError("remark62_poly needs an algebraic profile")
    g = profile.genus
    out: dict[int, int] = {}
    for k in range((g - 1) // 2 + 1):
        c = profile.dim(k)
        if not c:
            continue
        bound = g - 2 * k
        for i in range(bound):
            for j in range(bound):
                e = ALPHA_DEGREE * i + BETA_DEGREE * j + GAMMA_DEGREE * k
                out[e] = out.get(e, 0) + c
    poly = UniPoly([out.get(e, 0) for e in range(max(out) + 1)])
    if check:
        expected = theorem1_poly(profile)
        if poly != expected:
            raise CountMismatch(f"basis count {poly} != closed form {expected}")
    return poly
