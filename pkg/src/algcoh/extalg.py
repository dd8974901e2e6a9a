"""Sparse exterior algebra on 2g degree-1 generators phi_i and 2g degree-3
generators psi_i, all odd, with rational coefficients.

A basis monomial is ``phi_A psi_B`` with ``A`` and ``B`` increasing index
tuples, the phi block written first.  The symplectic dual of index ``i`` is
``i + g`` for ``i <= g`` and ``-(i - g)`` for ``i > g``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Mapping

Key = tuple[tuple[int, ...], tuple[int, ...]]

MAX_NU_GENUS = 6


class GenusMismatch(ValueError):
    pass


class GenusTooLarge(ValueError):
    pass


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sign of sorting ``a + b`` (both increasing, disjoint)."""
    inversions = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    return -1 if inversions & 1 else 1


def permutation_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting ``seq`` (entries distinct)."""
    seq = list(seq)
    inversions = sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inversions & 1 else 1


def _monomial_product(ka: Key, kb: Key) -> tuple[int, Key] | None:
    phi_a, psi_a = ka
    phi_b, psi_b = kb
    if set(phi_a) & set(phi_b) or set(psi_a) & set(psi_b):
        return None
    sign = _merge_sign(phi_a, phi_b) * _merge_sign(psi_a, psi_b)
    # phi_b has to move left past psi_a
    if len(psi_a) * len(phi_b) & 1:
        sign = -sign
    return sign, (tuple(sorted(phi_a + phi_b)), tuple(sorted(psi_a + psi_b)))


@dataclass(frozen=True)
class ExtClass:
    genus: int
    terms: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        n = 2 * self.genus
        for (phi, psi), c in self.terms.items():
            phi, psi = tuple(phi), tuple(psi)
            if any(not 1 <= i <= n for i in phi + psi):
                raise ValueError(f"index out of range 1..{n} in {(phi, psi)}")
            if list(phi) != sorted(set(phi)) or list(psi) != sorted(set(psi)):
                raise ValueError(f"index sets must be strictly increasing: {(phi, psi)}")
            c = Fraction(c)
            if c:
                clean[(phi, psi)] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors ----------------------------------------------------
    @classmethod
    def scalar(cls, g: int, c=1) -> "ExtClass":
        return cls(g, {((), ()): c})

    @classmethod
    def phi(cls, g: int, *indices: int) -> "ExtClass":
        return _ordered_product(g, [("phi", i) for i in indices])

    @classmethod
    def psi(cls, g: int, *indices: int) -> "ExtClass":
        return _ordered_product(g, [("psi", i) for i in indices])

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(len(phi), 3 * len(psi)) for phi, psi in self.terms}

    def part(self, bidegree: tuple[int, int]) -> "ExtClass":
        return ExtClass(
            self.genus,
            {k: c for k, c in self.terms.items() if (len(k[0]), 3 * len(k[1])) == bidegree},
        )

    def total_degrees(self) -> set[int]:
        return {len(phi) + 3 * len(psi) for phi, psi in self.terms}

    def _check(self, other: "ExtClass"):
        if self.genus != other.genus:
            raise GenusMismatch(f"genus {self.genus} vs {other.genus}")

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "ExtClass") -> "ExtClass":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ExtClass(self.genus, out)

    def __neg__(self) -> "ExtClass":
        return ExtClass(self.genus, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ExtClass") -> "ExtClass":
        return self + (-other)

    def scale(self, c) -> "ExtClass":
        c = Fraction(c)
        return ExtClass(self.genus, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExtClass):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c) -> "ExtClass":
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int) -> "ExtClass":
        out = ExtClass.scalar(self.genus)
        for _ in range(k):
            out = wedge(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtClass):
            return NotImplemented
        return self.genus == other.genus and self.terms == other.terms

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def render(self) -> list[str]:
        """Signed monomial list ``"+c · φ_1φ_3ψ_2"`` in a fixed order."""
        def order(item):
            (phi, psi), _ = item
            return len(phi) + 3 * len(psi), phi, psi

        out = []
        for (phi, psi), c in sorted(self.terms.items(), key=order):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = "".join(f"φ_{i}" for i in phi) + "".join(f"ψ_{j}" for j in psi)
            out.append(f"{sign}{mag} · {body or '1'}")
        return out

    def __str__(self) -> str:
        return " ".join(self.render()) or "0"


def _ordered_product(g: int, gens: list[tuple[str, int]]) -> ExtClass:
    out = ExtClass.scalar(g)
    for family, i in gens:
        key = ((i,), ()) if family == "phi" else ((), (i,))
        out = wedge(out, ExtClass(g, {key: 1}))
    return out


def wedge(a: ExtClass, b: ExtClass) -> ExtClass:
    if a.genus != b.genus:
        raise GenusMismatch(f"genus {a.genus} vs {b.genus}")
    out: dict[Key, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            prod = _monomial_product(ka, kb)
            if prod is None:
                continue
            sign, key = prod
            out[key] = out.get(key, 0) + sign * ca * cb
    return ExtClass(a.genus, out)


def dual(g: int, i: int) -> tuple[int, int]:
    """``(sign, index)`` of the symplectic dual of generator ``i``."""
    return (1, i + g) if i <= g else (-1, i - g)


def theta_class(g: int) -> ExtClass:
    """``sum_{i<=g} phi_i phi_{i+g}``."""
    return ExtClass(g, {((i, i + g), ()): 1 for i in range(1, g + 1)})


def theta_psi_class(g: int) -> ExtClass:
    """``sum_{i<=g} psi_i psi_{i+g}``."""
    return ExtClass(g, {((), (i, i + g)): 1 for i in range(1, g + 1)})


def delta_class(g: int) -> ExtClass:
    """``sum_{i<=g} phi_i phi_i^v + sum_i phi_i^v psi_i + sum_{i<=g} psi_i psi_i^v``."""
    mixed = {}
    for i in range(1, 2 * g + 1):
        sign, j = dual(g, i)
        mixed[((j,), (i,))] = sign
    return theta_class(g) + ExtClass(g, mixed) + theta_psi_class(g)


def orientation_sign(g: int) -> int:
    """Sign of the permutation ``(1, g+1, 2, g+2, ..., g, 2g)``; makes ``∫ θ^g/g! = 1``."""
    order = [x for i in range(1, g + 1) for x in (i, i + g)]
    return permutation_sign(order)


def integrate_jacobian(a: ExtClass) -> ExtClass:
    """Integrate out the phi-variables: only the top phi-monomial survives."""
    g = a.genus
    full = tuple(range(1, 2 * g + 1))
    eps = orientation_sign(g)
    return ExtClass(g, {((), psi): eps * c for (phi, psi), c in a.terms.items() if phi == full})


def nu_of_monomial(g: int, subset: Iterable[int]) -> ExtClass:
    """The psi-monomial on the same (increasing) index set."""
    idx = tuple(sorted(subset))
    return ExtClass(g, {((), idx): 1})


def phi_monomial(g: int, subset: Iterable[int]) -> ExtClass:
    return ExtClass(g, {(tuple(sorted(subset)), ()): 1})


def nu_via_delta(omega: ExtClass, delta_power: ExtClass | None = None) -> ExtClass:
    """``∫_J omega · Δ^g / g!``."""
    g = omega.genus
    if delta_power is None:
        delta_power = delta_class(g) ** g / factorial(g)
    return integrate_jacobian(wedge(omega, delta_power))


@dataclass
class NuReport:
    genus: int
    checked: int = 0
    exact_matches: int = 0
    sign_mismatches: list = field(default_factory=list)
    other_mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.sign_mismatches and not self.other_mismatches

    def to_record(self) -> dict:
        return {
            "genus": self.genus,
            "checked": self.checked,
            "exact_matches": self.exact_matches,
            "sign_mismatches": self.sign_mismatches,
            "other_mismatches": self.other_mismatches,
        }


def verify_nu_formula(g: int) -> NuReport:
    """Check ``ν(φ_S) = ∫_J φ_S Δ^g/g!`` for every subset ``S`` of ``1..2g``."""
    if g > MAX_NU_GENUS:
        raise GenusTooLarge(f"verify_nu_formula enumerates 2^(2g) monomials; g <= {MAX_NU_GENUS}")
    if g < 1:
        raise ValueError("genus must be positive")
    dg = delta_class(g) ** g / factorial(g)
    by_phi: dict[tuple[int, ...], dict[Key, Fraction]] = {}
    for key, c in dg.terms.items():
        by_phi.setdefault(key[0], {})[key] = c
    full = set(range(1, 2 * g + 1))
    report = NuReport(g)
    for r in range(2 * g + 1):
        for subset in combinations(range(1, 2 * g + 1), r):
            complement = tuple(sorted(full - set(subset)))
            relevant = ExtClass(g, by_phi.get(complement, {}))
            got = integrate_jacobian(wedge(phi_monomial(g, subset), relevant))
            expected = nu_of_monomial(g, subset)
            report.checked += 1
            if got == expected:
                report.exact_matches += 1
            elif got == -expected:
                report.sign_mismatches.append(list(subset))
            else:
                report.other_mismatches.append(
                    {"subset": list(subset), "expected": expected.render(), "got": got.render()}
                )
    return report


def random_homogeneous(
    g: int, phi_deg: int, psi_deg: int, rng: random.Random, nterms: int = 3
) -> ExtClass:
    """Random class with every term of phi-degree ``phi_deg`` and psi-count ``psi_deg``."""
    n = 2 * g
    terms = {}
    for _ in range(nterms):
        phi = tuple(sorted(rng.sample(range(1, n + 1), phi_deg)))
        psi = tuple(sorted(rng.sample(range(1, n + 1), psi_deg)))
        terms[(phi, psi)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return ExtClass(g, terms)
