"""Finitely supported group-algebra layer with exact rational coefficients.

An :class:`AlgebraElement` is a formal linear combination of canonical
group elements.  The basis vectors delta_g are orthonormal, multiplication
extends the group product bilinearly, the trace reads off the coefficient
of the identity, and the squared 2-norm is the sum of squared
coefficients.  Everything stays in Q, so distances like "distinct group
elements are sqrt(2) apart" are checked as exact equalities of squares.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .element import PLElement
from .errors import BaseMismatchError
from .nadic import check_base

__all__ = [
    "AlgebraElement",
    "adjoint",
    "algebra_mul",
    "commutator",
    "commutator_norm_sq",
    "delta",
    "trace",
    "two_norm_sq",
]


class AlgebraElement:
    """A finitely supported formal sum of group elements over Q.

    Immutable by convention; all operations return fresh instances.  Zero
    coefficients are never stored.
    """

    __slots__ = ("base", "_terms")

    def __init__(self, base: int, terms: Mapping[PLElement, Fraction] = ()):
        check_base(base)
        self.base = base
        cleaned: dict[PLElement, Fraction] = {}
        for g, c in dict(terms).items():
            if g.base != base:
                raise BaseMismatchError(
                    f"term with base {g.base} in an algebra over base {base}"
                )
            c = Fraction(c)
            if c:
                cleaned[g] = c
        self._terms = cleaned

    @property
    def terms(self) -> dict[PLElement, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.base == other.base and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def _check_same_base(self, other: "AlgebraElement") -> None:
        if self.base != other.base:
            raise BaseMismatchError(
                f"cannot combine algebras over bases {self.base} and {other.base}"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_same_base(other)
        acc = dict(self._terms)
        for g, c in other._terms.items():
            acc[g] = acc.get(g, Fraction(0)) + c
        return AlgebraElement(self.base, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.base, {g: -c for g, c in self._terms.items()})

    def __mul__(self, other: object) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check_same_base(other)
            acc: dict[PLElement, Fraction] = {}
            for g, c in self._terms.items():
                for h, d in other._terms.items():
                    gh = g * h
                    acc[gh] = acc.get(gh, Fraction(0)) + c * d
            return AlgebraElement(self.base, acc)
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(
                self.base, {g: c * other for g, c in self._terms.items()}
            )
        return NotImplemented

    def __rmul__(self, other: object) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def adjoint(self) -> "AlgebraElement":
        """g -> g**-1 on the basis; coefficients are rational, hence fixed."""
        return AlgebraElement(self.base, {~g: c for g, c in self._terms.items()})

    def trace(self) -> Fraction:
        """Coefficient of the identity (0 if absent)."""
        return self._terms.get(PLElement.identity(self.base), Fraction(0))

    def two_norm_sq(self) -> Fraction:
        """Sum of squared coefficients; the basis is orthonormal."""
        return sum((c * c for c in self._terms.values()), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return f"AlgebraElement(base={self.base}, 0)"
        body = " + ".join(f"({c})*d[{g}]" for g, c in self._terms.items())
        return f"AlgebraElement(base={self.base}, {body})"


def delta(g: PLElement) -> AlgebraElement:
    """The basis vector supported on a single group element."""
    return AlgebraElement(g.base, {g: Fraction(1)})


def algebra_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def adjoint(x: AlgebraElement) -> AlgebraElement:
    return x.adjoint()


def trace(x: AlgebraElement) -> Fraction:
    return x.trace()


def two_norm_sq(x: AlgebraElement) -> Fraction:
    return x.two_norm_sq()


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y - y * x


def commutator_norm_sq(x: AlgebraElement, y: AlgebraElement) -> Fraction:
    """Squared 2-norm of xy - yx; zero iff the two sums commute."""
    return commutator(x, y).two_norm_sq()
