"""Factories for the named element families and for word evaluation.

The families built here, in the notation of the CLI word grammar:

* ``A(d,p)``: the three-slope map with slope N**-p on [0,d], slope 1 in the
  middle, and slope N**p on the final segment.  For p > 0 it moves every
  interior point toward 0 and fixes only the endpoints.
* ``f1(d)``, ``f2(d)``: endpoint-slope representatives.  f1 has slope N at
  0 and is the identity near 1; f2 is its reflection, identity near 0 with
  slope N at 1.  Their endpoint-exponent images generate Z x Z.
* ``s``: the fixed shift element (an f2 with d = 1/N**2) realising the
  splitting of the group over the subgroup of maps trivial near 1.
* ``x0, x1, ...``: the standard generator family; see :func:`generator`.

Everything validates its output, so each factory is also a closure check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .element import PLElement, validate
from .errors import ConstraintError, DomainError
from .nadic import check_base, is_nadic, power_exponent, power_of

__all__ = [
    "GroupWord",
    "evaluate_word",
    "generator",
    "make_a",
    "make_a_inverse",
    "make_f1",
    "make_f2",
    "random_element",
    "shift_element",
    "supported_element",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _check_a_params(d: Fraction, p: int, base: int) -> Fraction:
    """Shared parameter checks for the A family; returns d/N**p."""
    check_base(base)
    d = Fraction(d)
    if not isinstance(p, int):
        raise ConstraintError("slope parameter p must be an integer")
    if not is_nadic(d, base):
        raise ConstraintError(f"d = {d} is not of the form m/{base}^k")
    if not _ZERO < d < _ONE:
        raise ConstraintError(f"d must lie in (0,1), got {d}")
    shrunk = d * power_of(base, -p)
    if shrunk >= 1:
        raise ConstraintError(f"need d/N^p < 1, got {shrunk}")
    if d + shrunk > 1:
        raise ConstraintError(
            f"branches of A({d},{p}) overlap: d + d/N^p = {d + shrunk} > 1"
        )
    return shrunk


def make_a(d: Fraction, p: int, base: int) -> PLElement:
    """The three-slope element A(d,p): N**-p on [0,d], then 1, then N**p."""
    shrunk = _check_a_params(Fraction(d), p, base)
    d = Fraction(d)
    points = [(_ZERO, _ZERO), (d, shrunk), (_ONE - shrunk, _ONE - d), (_ONE, _ONE)]
    return validate(_dedupe(points), base)


def make_a_inverse(d: Fraction, p: int, base: int) -> PLElement:
    """Closed form of A(d,p)**-1, built directly from its own three branches.

    Deliberately independent of :meth:`PLElement.inverse`; the two routes
    are checked against each other by the verification suites.
    """
    shrunk = _check_a_params(Fraction(d), p, base)
    d = Fraction(d)
    points = [(_ZERO, _ZERO), (shrunk, d), (_ONE - d, _ONE - shrunk), (_ONE, _ONE)]
    return validate(_dedupe(points), base)


def supported_element(
    delta: Fraction,
    eps: Fraction,
    base: int,
    *,
    d: Fraction | None = None,
    p: int = 1,
) -> PLElement:
    """An element equal to the identity off (delta, eps), fixed-point-free inside.

    The graph of A(d,p) is transported onto [delta, eps] by the affine chart
    and extended by the identity.  The chart preserves base-N structure when
    eps - delta is an exact power of N, which is required here.  Since
    A(d,p) with p != 0 fixes nothing in (0,1), the result fixes nothing in
    (delta, eps); it lies in the subgroup of maps trivial near both ends.
    """
    check_base(base)
    delta, eps = Fraction(delta), Fraction(eps)
    if not (_ZERO < delta < eps < _ONE):
        raise ConstraintError(f"need 0 < delta < eps < 1, got ({delta}, {eps})")
    if not is_nadic(delta, base) or not is_nadic(eps, base):
        raise ConstraintError(f"({delta}, {eps}) must both be of the form m/{base}^k")
    if power_exponent(eps - delta, base) is None:
        raise ConstraintError(f"eps - delta = {eps - delta} is not a power of {base}")
    if p == 0:
        raise ConstraintError("inner slope parameter p must be nonzero")
    if d is None:
        # the largest unit-fraction d valid for the requested p
        d = power_of(base, -(1 + max(0, -p)))
    inner = make_a(Fraction(d), p, base)
    return _embed(inner, delta, eps)


def make_f1(d: Fraction, base: int) -> PLElement:
    """Slope N at 0, identity on [d(N+1), 1]; endpoint exponents (1, 0).

    Only d = 1/N**k with k > 0 is accepted, and d(N+1) < 1 so the middle
    branch closes up before 1.
    """
    check_base(base)
    d = Fraction(d)
    exp = power_exponent(d, base) if d > 0 else None
    if exp is None or exp >= 0:
        raise ConstraintError(f"d must equal 1/{base}^k with k > 0, got {d}")
    if d * (base + 1) >= 1:
        raise ConstraintError(f"need d(N+1) < 1, got {d * (base + 1)}")
    points = [
        (_ZERO, _ZERO),
        (d, base * d),
        (d * (base + 1), d * (base + 1)),
        (_ONE, _ONE),
    ]
    return validate(points, base)


def make_f2(d: Fraction, base: int) -> PLElement:
    """Reflection x -> 1 - f1(1 - x): identity near 0, slope N at 1."""
    f1 = make_f1(d, base)
    reflected = [(_ONE - x, _ONE - y) for x, y in reversed(f1.breaks)]
    return validate(reflected, base)


def shift_element(base: int) -> PLElement:
    """The fixed shift: identity on an initial segment, slope N at 1.

    Conjugation by its powers moves supports toward 1; together with the
    subgroup of maps trivial near 1 it splits the whole group.  The choice
    here is f2 with d = 1/N**2, the smallest symmetric instance.
    """
    check_base(base)
    return make_f2(Fraction(1, base * base), base)


def generator(base: int, i: int) -> PLElement:
    """The standard generator x_i.

    For 0 <= r < N-1 the base map x_r is the identity on [0, r/N], has
    slope 1/N on [r/N, (N-1)/N], slope 1 on a short middle segment, and
    slope N on the rest; x_0 coincides with A((N-1)/N, 1).  For general
    i = q(N-1) + r, x_i is the copy of x_r transported onto the right
    neighbourhood [1 - N**-q, 1].  Under the product convention
    ``(g*h)(x) = g(h(x))`` this family satisfies x_j x_i = x_i x_{j+N-1}
    for all i < j, which the relation suite verifies exhaustively.
    """
    check_base(base)
    if not isinstance(i, int) or i < 0:
        raise DomainError(f"generator index must be a nonnegative integer, got {i}")
    q, r = divmod(i, base - 1)
    n2 = base * base
    points = [
        (_ZERO, _ZERO),
        (Fraction(r, base), Fraction(r, base)),
        (Fraction(base - 1, base), Fraction((base - 1) * (r + 1), n2)),
        (Fraction(n2 - base + r + 1, n2), Fraction(r + 1, base)),
        (_ONE, _ONE),
    ]
    element = validate(_dedupe(points), base)
    if q == 0:
        return element
    return _embed(element, _ONE - power_of(base, -q), _ONE)


@dataclass(frozen=True)
class GroupWord:
    """A formal word: a sequence of (generator index, nonzero exponent)."""

    base: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        for gen, exp in self.letters:
            if gen < 0:
                raise DomainError(f"generator index must be nonnegative, got {gen}")
            if exp == 0:
                raise DomainError("word letters must carry nonzero exponents")


def evaluate_word(word: GroupWord) -> PLElement:
    """Fold a word into an element; the empty word gives the identity.

    Concatenation of words maps to the group product, i.e. this is a monoid
    homomorphism from words to elements.
    """
    result = PLElement.identity(word.base)
    for gen, exp in word.letters:
        result = result * generator(word.base, gen) ** exp
    return result


def random_element(base: int, length: int, seed: int) -> PLElement:
    """Deterministic pseudo-random element: a word of `length` atoms.

    Atoms are standard generators x_0 .. x_{N+1} with small exponents,
    mixed with A(d,p) factors.  Same (base, length, seed) always gives the
    same element; words are used rather than raw breakpoint lists because
    every word is valid by closure.
    """
    check_base(base)
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    rng = random.Random(f"element:{base}:{length}:{seed}")
    result = PLElement.identity(base)
    for _ in range(length):
        result = result * _random_atom(rng, base)
    return result


def _random_atom(rng: random.Random, base: int) -> PLElement:
    if rng.random() < 0.75:
        gen = rng.randrange(0, base + 2)
        exp = rng.choice([-2, -1, 1, 2])
        return generator(base, gen) ** exp
    for _ in range(8):
        k = rng.randint(1, 3)
        m = rng.randint(1, base**k - 1)
        p = rng.choice([-1, 1, 2])
        d = Fraction(m, base**k)
        try:
            return make_a(d, p, base)
        except ConstraintError:
            continue
    return make_a(Fraction(1, base), 1, base)


def _embed(inner: PLElement, lo: Fraction, hi: Fraction) -> PLElement:
    """Transport `inner` onto [lo, hi] by the affine chart, identity outside."""
    width = hi - lo
    points: list[tuple[Fraction, Fraction]] = []
    if lo > 0:
        points.append((_ZERO, _ZERO))
    points.extend((lo + width * x, lo + width * y) for x, y in inner.breaks)
    if hi < 1:
        points.append((_ONE, _ONE))
    return validate(points, inner.base)


def _dedupe(points: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    out = [points[0]]
    for pt in points[1:]:
        if pt != out[-1]:
            out.append(pt)
    return out
