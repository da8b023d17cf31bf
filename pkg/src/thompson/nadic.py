"""Exact rational arithmetic with base-N predicates.

Every coordinate in this package is a ``fractions.Fraction``, which already
guarantees lowest terms and a positive denominator.  This module adds the
predicates the rest of the package is built on: membership in Z[1/N]
(denominator divides some power of N) and exact power-of-N detection, plus
the strict text format used by the file and wire formats.

No floating point is used anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DomainError, ParseError

__all__ = [
    "check_base",
    "format_rational",
    "is_nadic",
    "parse_rational",
    "power_exponent",
    "power_of",
]

# "m", "-m" or "m/n": no leading zeros, no "/1", no sign on the denominator.
_RATIONAL_RE = re.compile(r"^(-?(?:0|[1-9][0-9]*))(?:/([1-9][0-9]*))?$")


def check_base(base: int) -> None:
    """Reject bases that do not define a group (N must be an integer >= 2)."""
    if not isinstance(base, int) or isinstance(base, bool) or base < 2:
        raise DomainError(f"base must be an integer >= 2, got {base!r}")


def parse_rational(text: str) -> Fraction:
    """Parse the canonical rendering of a rational.

    Accepted forms are exactly ``"m"``, ``"-m"`` and ``"m/n"`` with the
    fraction already in lowest terms and n >= 2.  Anything else (floats,
    whitespace, "4/2", "3/1", "-0", leading zeros) raises ParseError, so
    that parse and :func:`format_rational` are mutually inverse bijections
    on the canonical strings.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a canonical rational: {text!r}")
    num = int(m.group(1))
    if m.group(1) == "-0":
        raise ParseError("negative zero is not canonical, write 0")
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 1:
        raise ParseError(f"denominator 1 must be omitted: {text!r}")
    value = Fraction(num, den)
    if value.denominator != den:
        raise ParseError(f"not in lowest terms: {text!r}")
    return value


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``m`` for integers, ``m/n`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_nadic(value: Fraction, base: int) -> bool:
    """True iff ``value`` equals m / base**k for integers m and k >= 0.

    Equivalently, every prime factor of the (reduced) denominator divides
    the base.  Computed by repeatedly stripping gcd(denominator, base)
    factors, so no integer factorisation is needed.
    """
    check_base(base)
    den = Fraction(value).denominator
    while den > 1:
        g = math.gcd(den, base)
        if g == 1:
            return False
        while den % g == 0:
            den //= g
    return True


def power_exponent(value: Fraction, base: int) -> int | None:
    """Return p such that ``value == base**p`` exactly, or None.

    A positive rational is a power of the base iff it is an integer power
    base**p (p >= 0) or a unit fraction 1 / base**p (p > 0).  Non-positive
    input is outside the domain.
    """
    check_base(base)
    value = Fraction(value)
    if value <= 0:
        raise DomainError(f"power test needs a positive value, got {value}")
    if value.numerator == 1 and value.denominator > 1:
        p = _integer_log(value.denominator, base)
        return None if p is None else -p
    if value.denominator == 1:
        return _integer_log(value.numerator, base)
    return None


def power_of(base: int, exponent: int) -> Fraction:
    """Exact base**exponent as a Fraction; exponent may be negative."""
    check_base(base)
    if exponent >= 0:
        return Fraction(base**exponent)
    return Fraction(1, base**-exponent)


def _integer_log(n: int, base: int) -> int | None:
    """Exact log: p with base**p == n, or None."""
    p = 0
    while n > 1:
        n, r = divmod(n, base)
        if r:
            return None
        p += 1
    return p
