"""Jacobian cohomology profiles.

A profile is the polynomial ``P_A(J_C; t)`` (algebraic grading, top degree g)
or ``P(J_C; t)`` (ordinary grading, top degree 2g) that every downstream
formula consumes.  Downstream code treats profiles formally: any palindromic
polynomial with unit endpoints is accepted, whether or not a curve realizes it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .exactalg import UniPoly, is_palindromic

KINDS = ("general", "ordinary", "hodge_max", "custom")
GRADINGS = ("algebraic", "ordinary")


class InvalidGenus(ValueError):
    pass


class InvalidProfile(ValueError):
    """A custom profile failed validation; ``invariant`` names the rule broken."""

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


def check_genus(g) -> int:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise InvalidGenus(f"genus must be an integer >= 2 (got {g!r})")
    return g


def hodge_ceiling(g: int, k: int) -> int:
    """``h^{k,k}(J_C) = C(g, k)**2``, the largest possible ``dim H_A^k``."""
    return comb(g, k) ** 2


@dataclass(frozen=True)
class JacobianProfile:
    genus: int
    kind: str
    poly: UniPoly
    grading: str = "algebraic"

    @property
    def top_degree(self) -> int:
        return self.genus if self.grading == "algebraic" else 2 * self.genus

    @property
    def coefficients(self) -> list[int]:
        return self.poly.int_coeffs()

    def dim(self, k: int) -> int:
        return int(self.poly[k])

    def to_record(self) -> dict:
        return {
            "genus": self.genus,
            "kind": self.kind,
            "grading": self.grading,
            "coefficients": self.coefficients,
        }

    @classmethod
    def from_record(cls, record: dict, *, enforce_ceiling: bool = True) -> "JacobianProfile":
        profile = validate(
            record["genus"],
            record["coefficients"],
            grading=record.get("grading", "algebraic"),
            enforce_ceiling=enforce_ceiling,
        )
        return cls(profile.genus, record.get("kind", "custom"), profile.poly, profile.grading)

    def label(self) -> str:
        if self.kind == "custom":
            return "custom:" + ",".join(map(str, self.coefficients))
        return self.kind


def validate(
    g: int,
    coeffs: Sequence,
    *,
    grading: str = "algebraic",
    enforce_ceiling: bool = True,
) -> JacobianProfile:
    """Check every profile invariant and return a ``custom`` profile."""
    g = check_genus(g)
    if grading not in GRADINGS:
        raise ValueError(f"unknown grading {grading!r}")
    top = g if grading == "algebraic" else 2 * g

    cs = list(coeffs)
    for c in cs:
        if isinstance(c, bool) or not isinstance(c, int):
            if not (hasattr(c, "denominator") and c.denominator == 1):
                raise InvalidProfile("integrality", f"coefficient {c!r} is not an integer")
        if c < 0:
            raise InvalidProfile("nonnegativity", f"coefficient {c} is negative")
    cs = [int(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) != top + 1:
        raise InvalidProfile(
            "top_degree", f"expected degree {top}, got {len(cs) - 1} for genus {g}"
        )
    if cs[0] != 1 or cs[-1] != 1:
        raise InvalidProfile("endpoints", f"constant and top coefficients must be 1, got {cs}")
    poly = UniPoly(cs)
    if not is_palindromic(poly, top):
        raise InvalidProfile("palindromy", f"{cs} is not symmetric about degree {top}/2")
    if grading == "algebraic" and enforce_ceiling:
        for k, c in enumerate(cs):
            if c > hodge_ceiling(g, k):
                raise InvalidProfile(
                    "hodge_ceiling",
                    f"dim H_A^{k} = {c} exceeds C({g},{k})^2 = {hodge_ceiling(g, k)}",
                )
    return JacobianProfile(g, "custom", poly, grading)


def make_profile(
    kind: str,
    g: int,
    custom_coeffs: Sequence | None = None,
    *,
    enforce_ceiling: bool = True,
) -> JacobianProfile:
    """Build a profile of the given kind.

    ``general`` is ``1 + t + ... + t^g`` (cohomology generated by theta),
    ``ordinary`` is ``(1 + t)^(2g)`` in ordinary grading, ``hodge_max`` is
    ``sum C(g,k)^2 t^k`` and ``custom`` validates ``custom_coeffs``.
    Pass ``enforce_ceiling=False`` to skip the Hodge ceiling for customs.
    """
    kind = kind.replace("-", "_")
    if kind not in KINDS:
        raise ValueError(f"unknown profile kind {kind!r}")
    g = check_genus(g)
    if (custom_coeffs is not None) != (kind == "custom"):
        raise ValueError("custom_coeffs must be given exactly when kind == 'custom'")
    if kind == "general":
        return JacobianProfile(g, kind, UniPoly([1] * (g + 1)))
    if kind == "ordinary":
        return JacobianProfile(g, kind, UniPoly([comb(2 * g, k) for k in range(2 * g + 1)]), "ordinary")
    if kind == "hodge_max":
        return JacobianProfile(g, kind, UniPoly([hodge_ceiling(g, k) for k in range(g + 1)]))
    return validate(g, custom_coeffs, enforce_ceiling=enforce_ceiling)


def random_profile(g: int, rng: random.Random) -> JacobianProfile:
    """A random valid custom algebraic profile (palindromic, within the ceiling)."""
    g = check_genus(g)
    cs = [0] * (g + 1)
    cs[0] = cs[g] = 1
    for k in range(1, g // 2 + 1):
        cs[k] = cs[g - k] = rng.randint(0, hodge_ceiling(g, k))
    return validate(g, cs)
