"""Piecewise-linear homeomorphisms of [0,1] with base-N breakpoints and slopes.

A group element is an orientation-preserving PL homeomorphism of the unit
interval whose breakpoint coordinates lie in Z[1/N] and whose slopes are
integer powers of N.  Elements are kept in canonical form: the breakpoint
list starts at (0,0), ends at (1,1), is strictly increasing in both
coordinates, and carries no interior breakpoint where the incoming and
outgoing slopes agree.  Canonical form is unique per map, so group-element
equality is a tuple comparison and elements can key sets and dicts.  That
is the entire word-problem story for this representation.

All arithmetic is exact; there is no tolerance parameter anywhere.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

from .errors import BaseMismatchError, DomainError, ValidationError
from .nadic import check_base, is_nadic, power_exponent

__all__ = [
    "Break",
    "FixedSet",
    "PLElement",
    "equals",
    "validate",
]

Break = tuple[Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class PLElement:
    """One group element, i.e. a canonical PL homeomorphism of [0,1].

    Instances should be produced through :func:`validate` or the group
    operations, which guarantee the canonical-form invariants.  The raw
    constructor performs no checking.

    The product convention throughout the package is composition in
    application order: ``(f * g)(x) == f(g(x))``.
    """

    base: int
    breaks: tuple[Break, ...]

    @staticmethod
    def identity(base: int) -> "PLElement":
        check_base(base)
        return PLElement(base, ((_ZERO, _ZERO), (_ONE, _ONE)))

    @property
    def is_identity(self) -> bool:
        return len(self.breaks) == 2

    @cached_property
    def _xs(self) -> list[Fraction]:
        return [x for x, _ in self.breaks]

    @cached_property
    def _ys(self) -> list[Fraction]:
        return [y for _, y in self.breaks]

    def segments(self) -> Iterator[tuple[Break, Break]]:
        return zip(self.breaks, self.breaks[1:])

    @cached_property
    def slope_exponents(self) -> tuple[int, ...]:
        """Per-segment slope exponents p (slope is base**p), left to right."""
        exps = []
        for (x0, y0), (x1, y1) in self.segments():
            p = power_exponent((y1 - y0) / (x1 - x0), self.base)
            if p is None:  # unreachable for validated elements
                raise ValidationError("slope", "non power-of-N slope")
            exps.append(p)
        return tuple(exps)

    def boundary_slopes(self) -> tuple[int, int]:
        """Slope exponents of the initial and final segments."""
        exps = self.slope_exponents
        return exps[0], exps[-1]

    def __call__(self, x: Fraction | int) -> Fraction:
        """Exact image of x, for 0 <= x <= 1."""
        x = Fraction(x)
        if not _ZERO <= x <= _ONE:
            raise DomainError(f"argument {x} outside [0, 1]")
        i = min(bisect_right(self._xs, x), len(self.breaks) - 1) - 1
        (x0, y0), (x1, y1) = self.breaks[i], self.breaks[i + 1]
        return y0 + (x - x0) * (y1 - y0) / (x1 - x0)

    def preimage(self, y: Fraction | int) -> Fraction:
        """Exact preimage of y (the inverse map applied to y)."""
        y = Fraction(y)
        if not _ZERO <= y <= _ONE:
            raise DomainError(f"argument {y} outside [0, 1]")
        i = min(bisect_right(self._ys, y), len(self.breaks) - 1) - 1
        (x0, y0), (x1, y1) = self.breaks[i], self.breaks[i + 1]
        return x0 + (y - y0) * (x1 - x0) / (y1 - y0)

    def compose(self, other: "PLElement") -> "PLElement":
        """The element x -> self(other(x)); same as ``self * other``.

        Breakpoints of the result are the breakpoints of ``other`` together
        with the ``other``-preimages of the breakpoints of ``self``; between
        consecutive cuts both maps are affine, so the composition is affine.
        """
        if not isinstance(other, PLElement):
            raise TypeError(f"cannot compose with {type(other).__name__}")
        if self.base != other.base:
            raise BaseMismatchError(
                f"cannot compose base {self.base} with base {other.base}"
            )
        cuts = set(other._xs)
        cuts.update(other.preimage(u) for u in self._xs)
        points = [(x, self(other(x))) for x in sorted(cuts)]
        return validate(points, self.base)

    def __mul__(self, other: "PLElement") -> "PLElement":
        return self.compose(other)

    def inverse(self) -> "PLElement":
        """The inverse homeomorphism (reflect the graph in the diagonal)."""
        return validate([(y, x) for x, y in self.breaks], self.base)

    def __invert__(self) -> "PLElement":
        return self.inverse()

    def __pow__(self, n: int) -> "PLElement":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** -n
        result = PLElement.identity(self.base)
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def fixed_set(self) -> "FixedSet":
        """Maximal closed intervals (possibly degenerate) of fixed points.

        Per segment: a slope-1 segment on the diagonal is fixed pointwise; a
        slope-1 segment off the diagonal fixes nothing; otherwise the line
        meets the diagonal at a single x, fixed iff it lies in the segment.
        """
        parts: list[tuple[Fraction, Fraction]] = []
        for (x0, y0), (x1, y1) in self.segments():
            if y1 - y0 == x1 - x0:
                if y0 == x0:
                    parts.append((x0, x1))
                continue
            s = (y1 - y0) / (x1 - x0)
            xf = (y0 - s * x0) / (1 - s)
            if x0 <= xf <= x1:
                parts.append((xf, xf))
        merged: list[tuple[Fraction, Fraction]] = []
        for lo, hi in parts:
            if merged and lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        return FixedSet(tuple(merged))

    def __str__(self) -> str:
        pts = " ".join(f"({x},{y})" for x, y in self.breaks)
        return f"PL[{self.base}] {pts}"

    def __repr__(self) -> str:
        return f"PLElement(base={self.base}, breaks={self.breaks!r})"


@dataclass(frozen=True)
class FixedSet:
    """Sorted, pairwise-disjoint maximal closed intervals of fixed points.

    Isolated fixed points appear as degenerate intervals [x, x].  For any
    element the set contains 0 and 1.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __contains__(self, x: Fraction | int) -> bool:
        x = Fraction(x)
        return any(lo <= x <= hi for lo, hi in self.intervals)

    def overlaps_open(self, lo: Fraction, hi: Fraction) -> bool:
        """True iff some fixed point lies in the open interval (lo, hi)."""
        return any(a < hi and lo < b for a, b in self.intervals)


def validate(breaks: Iterable[Break | tuple], base: int) -> PLElement:
    """Check breakpoint data and return the canonical element.

    Raises :class:`ValidationError` with a distinguishing ``code``:
    ``empty`` (no data), ``endpoint`` (does not fix 0 and 1), ``monotone``
    (coordinates not strictly increasing), ``nadic`` (a coordinate outside
    Z[1/N]), ``slope`` (a segment slope that is not a power of N).
    Interior breakpoints with equal slopes on both sides are removed.
    """
    check_base(base)
    points = [(Fraction(x), Fraction(y)) for x, y in breaks]
    if not points:
        raise ValidationError("empty", "no breakpoints given")
    if points[0] != (_ZERO, _ZERO) or points[-1] != (_ONE, _ONE):
        raise ValidationError(
            "endpoint", f"element must fix 0 and 1, got {points[0]} .. {points[-1]}"
        )
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x1 <= x0 or y1 <= y0:
            raise ValidationError(
                "monotone",
                f"breakpoints must strictly increase, got ({x0},{y0}) then ({x1},{y1})",
            )
    for x, y in points:
        if not is_nadic(x, base) or not is_nadic(y, base):
            raise ValidationError(
                "nadic", f"coordinate ({x},{y}) not of the form m/{base}^k"
            )
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        slope = (y1 - y0) / (x1 - x0)
        if power_exponent(slope, base) is None:
            raise ValidationError(
                "slope", f"slope {slope} on [{x0},{x1}] is not a power of {base}"
            )
    return PLElement(base, tuple(_merge_collinear(points)))


def equals(f: PLElement, g: PLElement) -> bool:
    """Decide f == g; identical canonical forms are the certificate."""
    if f.base != g.base:
        raise BaseMismatchError(f"cannot compare base {f.base} with base {g.base}")
    return f.breaks == g.breaks


def _merge_collinear(points: list[Break]) -> list[Break]:
    out = [points[0]]
    for pt in points[1:]:
        while len(out) >= 2 and _collinear(out[-2], out[-1], pt):
            out.pop()
        out.append(pt)
    return out


def _collinear(a: Break, b: Break, c: Break) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])
