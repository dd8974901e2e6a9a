"""Blowups, smooth flips and the Thaddeus chain on Poincaré polynomials.

A smooth flip of type ``(lam, mu)`` with centre ``S`` changes the Poincaré
polynomial by ``(t^lam - t^mu) / (1 - t) * P(S)``.  Chaining the flips
``X_{k-1} -> X_k`` of type ``(k, m - 2k)`` with centre ``S^k C`` starting from
``X_0 = P^(m-1)`` ends at a ``P^(n-1)``-bundle over the moduli space, which
is how :func:`thaddeus_chain` derives ``P_A(N_C)`` without the closed form.

Every routine takes ``step``: 1 for algebraic grading, 2 for ordinary grading
(all exponents doubled, ``1 - t`` replaced by ``1 - t^2``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactalg import (
    ONE,
    ZERO,
    RationalFunctionExpr,
    UniPoly,
    exact_divide,
    geometric,
    monomial,
    series_coefficients,
)
from .jacobian import JacobianProfile, check_genus
from .symmetric import algebraic_generating_function, algebraic_sym_powers, ordinary_sym_powers


class InvalidChain(ValueError):
    pass


class InconsistentDims(ArithmeticError):
    pass


def _gap(lo: int, hi: int, step: int = 1) -> UniPoly:
    """``(t^(step*lo) - t^(step*hi)) / (1 - t^step)``, by exact division."""
    num = monomial(step * lo) - monomial(step * hi)
    return exact_divide(num, ONE - monomial(step))


@dataclass(frozen=True)
class FlipSpec:
    lam: int
    mu: int
    center_poly: UniPoly

    def __post_init__(self):
        if self.lam < 1 or self.mu < 1:
            raise ValueError(f"flip type must have lam, mu >= 1 (got {self.lam}, {self.mu})")

    def inverse(self) -> "FlipSpec":
        return FlipSpec(self.mu, self.lam, self.center_poly)


def blowup_transform(p_x: UniPoly, p_z: UniPoly, lam: int, step: int = 1) -> UniPoly:
    """Poincaré polynomial of the blowup of X along Z of codimension ``lam``."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    return p_x + _gap(1, lam, step) * p_z


def flip_transform(p_minus: UniPoly, spec: FlipSpec, step: int = 1) -> UniPoly:
    """``P(X_+)`` from ``P(X_-)`` across a smooth flip."""
    return p_minus + _gap(spec.lam, spec.mu, step) * spec.center_poly


@dataclass(frozen=True)
class ChowFlipReport:
    b_plus_dims: UniPoly
    b_minus_dims: UniPoly
    quotient_dims: UniPoly


def flip_chow_dims(spec: FlipSpec, p_minus: UniPoly, step: int = 1) -> ChowFlipReport:
    """Graded dimensions of the kernels ``B_+``, ``B_-`` and their common quotient.

    ``B_+`` is spanned by ``xi_+^s * A(S)`` for ``s = 0 .. mu-2`` pushed into
    degree ``lam + s``; ``B_-`` likewise with the roles swapped.
    """
    center = spec.center_poly
    b_plus = monomial(step * spec.lam) * geometric(spec.mu - 1, step) * center
    b_minus = monomial(step * spec.mu) * geometric(spec.lam - 1, step) * center
    quotient = flip_transform(p_minus, spec, step) - b_plus
    other = p_minus - b_minus
    if quotient != other:
        raise InconsistentDims(f"X_+ side gives {quotient}, X_- side gives {other}")
    return ChowFlipReport(b_plus, b_minus, quotient)


@dataclass(frozen=True)
class ChainSpec:
    """Thaddeus chain for moduli of degree ``d = 2w + 1 >= 4g - 3``."""

    g: int
    d: int

    def __post_init__(self):
        check_genus(self.g)
        if self.d % 2 == 0:
            raise InvalidChain(f"degree d must be odd (got {self.d})")
        if self.d < 4 * self.g - 3:
            raise InvalidChain(f"degree d = {self.d} is below 4g - 3 = {4 * self.g - 3}")

    @property
    def w(self) -> int:
        return (self.d - 1) // 2

    @property
    def m(self) -> int:
        return self.d + self.g - 1

    @property
    def n(self) -> int:
        return self.d - 2 * self.g + 2

    def flip(self, k: int, center: UniPoly) -> FlipSpec:
        return FlipSpec(k, self.m - 2 * k, center)


@dataclass(frozen=True)
class ChainDerivation:
    chain: ChainSpec
    grading: str
    sym_polys: tuple[UniPoly, ...]
    x_polys: tuple[UniPoly, ...]
    rhs_41: UniPoly
    result: UniPoly
    flip_types: tuple[tuple[int, int], ...] = field(default=())

    def to_record(self) -> dict:
        c = self.chain
        return {
            "g": c.g,
            "d": c.d,
            "m": c.m,
            "n": c.n,
            "w": c.w,
            "grading": self.grading,
            "x_polys": [p.to_list() for p in self.x_polys],
            "rhs_41": self.rhs_41.to_list(),
            "result": self.result.to_list(),
        }


def thaddeus_chain(chain: ChainSpec, profile: JacobianProfile) -> ChainDerivation:
    """Run the flip chain from ``X_0 = P^(m-1)`` to ``X_w`` and extract ``P(N_C)``.

    The moduli polynomial is obtained twice, once by dividing ``X_w`` by the
    fibre ``P^(n-1)`` and once from the telescoped sum
    ``(1 - t^n) P(N_C) = sum_k (t^k - t^(m-2k)) P(S^k C)``; the two must agree.
    """
    if profile.genus != chain.g:
        raise InvalidChain(f"profile genus {profile.genus} != chain genus {chain.g}")
    if profile.grading == "algebraic":
        step = 1
        sym = algebraic_sym_powers(profile, chain.w).polys
    else:
        step = 2
        sym = ordinary_sym_powers(chain.g, chain.w).polys
    m, n, w = chain.m, chain.n, chain.w

    xs = [geometric(m, step)]
    types = []
    for k in range(1, w + 1):
        spec = chain.flip(k, sym[k])
        types.append((spec.lam, spec.mu))
        xs.append(flip_transform(xs[-1], spec, step))

    rhs = ZERO
    for k in range(w + 1):
        rhs = rhs + (monomial(step * k) - monomial(step * (m - 2 * k))) * sym[k]
    result = exact_divide(rhs, ONE - monomial(step * n))
    from_fibre = exact_divide(xs[-1], geometric(n, step))
    if from_fibre != result:
        raise InconsistentDims(
            f"X_w / P^(n-1) gives {from_fibre} but the telescoped sum gives {result}"
        )
    return ChainDerivation(
        chain,
        profile.grading,
        tuple(sym),
        tuple(xs),
        rhs,
        result,
        tuple(types),
    )


def truncated_sym_series(profile: JacobianProfile, w: int, kmax: int) -> list[UniPoly]:
    """``sum_{k<=w} P_A(S^k C) s^k`` as a list of ``kmax + 1`` s-coefficients."""
    sym = algebraic_sym_powers(profile, kmax).polys
    return [p if k <= w else ZERO for k, p in enumerate(sym)]


def tail_corrected_series(profile: JacobianProfile, w: int, kmax: int) -> list[UniPoly]:
    """The same truncated sum written as the full generating function minus its tail.

    The tail beyond ``w`` lies in the projective-bundle range, giving

        P_A(J; s^2 t)/((1-s)(1-st))
          - P_A(J; t)/(1-t) * (s^(w+1)/(1-s) - s^(w+1) t^(w-g+2)/(1-st)).

    Valid for ``w >= 2g - 2``.
    """
    g = profile.genus
    if w < 2 * g - 2:
        raise ValueError(f"tail formula needs w >= 2g - 2 = {2 * g - 2} (got {w})")
    full = series_coefficients(algebraic_generating_function(profile), kmax)
    p = profile.poly
    # P/(1-t) * s^(w+1) * ((1 - s t) - t^(w-g+2) (1 - s)) / ((1-s)(1-st))
    shift = w - g + 2
    tail_num = {
        w + 1: p - p.shift(shift),
        w + 2: -p.shift(1) + p.shift(shift),
    }
    tail = series_coefficients(
        RationalFunctionExpr.build(tail_num, [(1, 0), (1, 1), (0, 1)]), kmax
    )
    return [a - b for a, b in zip(full, tail)]
