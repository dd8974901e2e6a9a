"""Exact univariate polynomials over Q and truncated power series in an
auxiliary variable ``s`` whose coefficients are polynomials in ``t``.

Everything is exact: coefficients are :class:`fractions.Fraction` and no
operation ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "UniPoly",
    "NotDivisible",
    "RationalFunctionExpr",
    "exact_divide",
    "substitute_power",
    "series_coefficients",
    "is_palindromic",
    "geometric",
    "monomial",
    "T",
    "ONE",
    "ZERO",
]


Rational = Fraction


class NotDivisible(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""

    def __init__(self, num: "UniPoly", den: "UniPoly", remainder: "UniPoly"):
        self.num = num
        self.den = den
        self.remainder = remainder
        super().__init__(f"{den} does not divide {num}: remainder {remainder}")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {c!r} as an exact coefficient")


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class UniPoly:
    """Immutable polynomial in ``t`` with rational coefficients.

    Coefficients are stored in ascending order with trailing zeros stripped,
    so two polynomials are equal exactly when their coefficient tuples are.
    The zero polynomial has ``degree`` ``None``.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    # -- basic accessors -------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        if k < 0 or k >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == UniPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the number they equal
            self._hash = hash(self[0]) if len(self._coeffs) <= 1 else hash(self._coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = _as_fraction(other)
            return UniPoly(c * x for x in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``t**k``."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if not self._coeffs:
            return self
        return UniPoly((0,) * k + self._coeffs)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division; returns ``(quotient, remainder)``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._coeffs)
        db = other.degree
        lead = other._coeffs[-1]
        if len(rem) <= db:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - db] = q
            for j, y in enumerate(other._coeffs):
                rem[k - db + j] -= q * y
        return UniPoly(quot), UniPoly(rem[:db])

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coefficients")
        return [int(c) for c in self._coeffs]

    # -- rendering -------------------------------------------------------
    def to_str(self) -> str:
        """Ascending-power rendering ``c0 + c1*t + c2*t^2``; zero terms omitted."""
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = _format_coeff(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{_format_coeff(mag)}*{var}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts) if parts else "0"

    def to_list(self) -> list[str]:
        """Coefficient strings indexed from degree 0."""
        return [_format_coeff(c) for c in self._coeffs]

    @classmethod
    def from_list(cls, items: Sequence) -> "UniPoly":
        return cls(_as_fraction(x) for x in items)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()!r})"


ZERO = UniPoly()
ONE = UniPoly([1])
T = UniPoly([0, 1])


def monomial(k: int, c=1) -> UniPoly:
    """``c * t**k``."""
    return UniPoly([0] * k + [c])


def geometric(n: int, step: int = 1) -> UniPoly:
    """``1 + t^step + ... + t^(step*(n-1))``; zero when ``n <= 0``."""
    if n <= 0:
        return ZERO
    out = [0] * (step * (n - 1) + 1)
    for i in range(n):
        out[step * i] = 1
    return UniPoly(out)


def exact_divide(num: UniPoly, den: UniPoly) -> UniPoly:
    """Return ``q`` with ``q * den == num``; raise :class:`NotDivisible` otherwise."""
    q, r = num.divmod(den)
    if not r.is_zero():
        raise NotDivisible(num, den, r)
    return q


def substitute_power(p: UniPoly, k: int) -> UniPoly:
    """``p(t**k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1 or p.is_zero():
        return p
    out = [0] * (k * p.degree + 1)
    for i, c in enumerate(p.coeffs):
        out[k * i] = c
    return UniPoly(out)


def is_palindromic(p: UniPoly, top_degree: int) -> bool:
    """True iff ``p[k] == p[top_degree - k]`` for all ``k``."""
    if p.degree is not None and p.degree > top_degree:
        return False
    return all(p[k] == p[top_degree - k] for k in range(top_degree + 1))


@dataclass(frozen=True)
class RationalFunctionExpr:
    """``numerator / prod(denominator)`` as a formal series in ``s``.

    ``numerator`` maps a power of ``s`` to its polynomial coefficient in ``t``.
    Each denominator factor ``(e, a)`` stands for ``1 - s**e * t**a``.  Factors
    with ``e >= 1`` are inverted as geometric series in ``s``; factors with
    ``e == 0`` (pure ``1 - t**a``, ``a >= 1``) are divided out of each
    ``s``-coefficient exactly.
    """

    numerator: tuple[tuple[int, UniPoly], ...]
    denominator: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for e, a in self.denominator:
            if e < 0 or a < 0:
                raise ValueError(f"bad denominator factor {(e, a)}")
            if e == 0 and a == 0:
                raise ValueError("denominator factor 1 - 1 is zero")

    @classmethod
    def build(cls, numerator, denominator=()) -> "RationalFunctionExpr":
        if isinstance(numerator, dict):
            items = numerator.items()
        else:
            items = enumerate(numerator)
        num: dict[int, UniPoly] = {}
        for e, p in items:
            p = p if isinstance(p, UniPoly) else UniPoly([p])
            num[e] = num.get(e, ZERO) + p
        return cls(
            tuple(sorted((e, p) for e, p in num.items() if not p.is_zero())),
            tuple(denominator),
        )


def series_coefficients(expr: RationalFunctionExpr, kmax: int) -> list[UniPoly]:
    """Coefficients of ``s**0 .. s**kmax`` in the expansion of ``expr``."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    coeffs = [ZERO] * (kmax + 1)
    for e, p in expr.numerator:
        if e <= kmax:
            coeffs[e] = coeffs[e] + p
    t_only = []
    for e, a in expr.denominator:
        if e == 0:
            t_only.append(a)
            continue
        # c / (1 - s^e t^a):  c_k <- c_k + t^a c_{k-e}
        for k in range(e, kmax + 1):
            if not coeffs[k - e].is_zero():
                coeffs[k] = coeffs[k] + coeffs[k - e].shift(a)
    for a in t_only:
        den = ONE - monomial(a)
        coeffs = [exact_divide(c, den) for c in coeffs]
    return coeffs
