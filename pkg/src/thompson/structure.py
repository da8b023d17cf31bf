"""Subgroup structure, conjugacy witnesses, and the splitting machinery.

Two subgroups organise everything here.  D is the set of elements equal to
the identity on a tail [delta, 1]; F' is the set of elements equal to the
identity near both endpoints.  Both are normal, and membership is readable
off the canonical form: an element lies in D iff its final slope exponent
is 0, and in F' iff both endpoint exponents are 0.

For an element trivial near 0 the boundary of its initial identity segment
is a conjugation covariant: eps(h g h^-1) = h(eps(g)).  That single exact
identity drives the infinite-conjugacy-class witnesses, the commuting-pair
construction, and the asymptotic-commutation sequence built at the end of
this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construct import shift_element, supported_element, make_a
from .element import PLElement
from .errors import DomainError
from .grouprep import delta as algebra_delta, two_norm_sq
from .nadic import check_base, power_of

__all__ = [
    "CentralSequenceSpec",
    "WitnessPlan",
    "abelianization",
    "alpha_action",
    "central_commutation_index",
    "central_sequence",
    "centrally_free_check",
    "check_conjugation_identity",
    "check_conjugation_identity_upper",
    "commuting_pair",
    "epsilon_lower",
    "epsilon_upper",
    "icc_witness",
    "kernel_is_Fprime_check",
    "member_D",
    "member_Fprime",
    "semidirect_decompose",
    "witness_plan",
]

_ONE = Fraction(1)


def member_D(f: PLElement) -> bool:
    """True iff f is the identity on some tail [delta, 1] with delta < 1."""
    return f.slope_exponents[-1] == 0


def member_Fprime(f: PLElement) -> bool:
    """True iff f is the identity near 0 and near 1 (or f is the identity)."""
    first, last = f.boundary_slopes()
    return first == 0 and last == 0


def epsilon_lower(g: PLElement) -> Fraction:
    """Largest eps such that g is the identity on [0, eps].

    Defined for nontrivial g that are trivial near 0.  In canonical form
    the initial identity piece is a single segment, so eps is simply the
    x-coordinate of the second breakpoint.
    """
    if g.is_identity:
        raise DomainError("epsilon_lower is undefined for the identity")
    x1, y1 = g.breaks[1]
    if x1 != y1:
        raise DomainError("epsilon_lower needs an element trivial near 0")
    return x1


def epsilon_upper(f: PLElement) -> Fraction:
    """Smallest eps such that f is the identity on [eps, 1]; mirror bound."""
    if f.is_identity:
        raise DomainError("epsilon_upper is undefined for the identity")
    x1, y1 = f.breaks[-2]
    if x1 != y1:
        raise DomainError("epsilon_upper needs an element trivial near 1")
    return x1


def check_conjugation_identity(g: PLElement, h: PLElement) -> bool:
    """Exact instance check of eps(h g h^-1) == h(eps(g)).

    This equality is a theorem for every g trivial near 0 and arbitrary h;
    the function computes both sides independently and compares.
    """
    lhs = epsilon_lower(h * g * ~h)
    rhs = h(epsilon_lower(g))
    return lhs == rhs


def check_conjugation_identity_upper(g: PLElement, h: PLElement) -> bool:
    """Mirror instance check: eps_upper(h g h^-1) == h(eps_upper(g))."""
    lhs = epsilon_upper(h * g * ~h)
    rhs = h(epsilon_upper(g))
    return lhs == rhs


@dataclass(frozen=True)
class WitnessPlan:
    """The data behind a batch of pairwise-distinct conjugates.

    ``branch`` records the case split on the first-segment slope exponent n
    of the target element: ``identity_near_zero`` (n == 0, conjugate by
    A(eps, p) for increasing p), ``positive_slope`` (n > 0, conjugate by
    A(1/N**k, p) for k above a computed threshold alpha), and
    ``negative_slope`` (n < 0, plan taken from the inverse element).
    """

    branch: str
    n: int
    p: int
    count: int
    eps: Fraction | None = None
    d1: Fraction | None = None
    alpha: int | None = None
    ks: tuple[int, ...] = ()
    ps: tuple[int, ...] = ()
    margins: tuple[Fraction, Fraction] | None = None

    def describe(self) -> dict[str, str]:
        """Flat string form for reports: branch, thresholds, margins."""
        out = {"branch": self.branch, "n": str(self.n), "p": str(self.p)}
        if self.eps is not None:
            out["eps"] = str(self.eps)
            out["conjugator_exponents"] = ",".join(map(str, self.ps))
        if self.alpha is not None:
            out["d1"] = str(self.d1)
            out["alpha"] = str(self.alpha)
            out["k_list"] = ",".join(map(str, self.ks))
        if self.margins is not None:
            out["margin_radius"] = str(self.margins[0])
            out["margin_gap"] = str(self.margins[1])
        return out


def witness_plan(f: PLElement, count: int, p: int = 1) -> WitnessPlan:
    """Choose conjugators guaranteeing `count` distinct conjugates of f."""
    if f.is_identity:
        raise DomainError("the identity has a one-element conjugacy class")
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if p == 0:
        raise DomainError("conjugator slope parameter p must be nonzero")
    base = f.base
    n = f.slope_exponents[0]
    if n == 0:
        eps = epsilon_lower(f)
        # Smallest exponent for which A(eps, q) is a valid element.
        q0 = 1
        while eps + eps * power_of(base, -q0) > 1:
            q0 += 1
        return WitnessPlan(
            branch="identity_near_zero",
            n=0,
            p=p,
            count=count,
            eps=eps,
            ps=tuple(range(q0, q0 + count)),
        )
    if n < 0:
        inner = witness_plan(~f, count, p)
        return WitnessPlan(
            branch="negative_slope",
            n=n,
            p=inner.p,
            count=count,
            d1=inner.d1,
            alpha=inner.alpha,
            ks=inner.ks,
            margins=inner.margins,
        )
    d1 = f.breaks[1][0]  # f(x) = N**n x on [0, d1]
    alpha = 1
    while not (
        power_of(base, -(alpha + p)) < d1
        and power_of(base, n - alpha - p) < 1 - power_of(base, -alpha)
    ):
        alpha += 1
    margins = (
        d1 - power_of(base, -(alpha + p)),
        (1 - power_of(base, -alpha)) - power_of(base, n - alpha - p),
    )
    return WitnessPlan(
        branch="positive_slope",
        n=n,
        p=p,
        count=count,
        d1=d1,
        alpha=alpha,
        ks=tuple(range(alpha + 1, alpha + 1 + count)),
        margins=margins,
    )


def icc_witness(f: PLElement, count: int, p: int = 1) -> list[PLElement]:
    """`count` pairwise-distinct conjugates of a nontrivial element.

    Distinctness is not taken on faith: the returned list is checked by
    exact equality and a collision raises ArithmeticError (which would
    indicate a bug, not bad input).
    """
    plan = witness_plan(f, count, p)
    base = f.base
    if plan.branch == "identity_near_zero":
        assert plan.eps is not None
        conjugates = []
        for q in plan.ps:
            h = make_a(plan.eps, q, base)
            conjugates.append(h * f * ~h)
    elif plan.branch == "negative_slope":
        conjugates = [~w for w in icc_witness(~f, count, p)]
    else:
        conjugates = []
        for k in plan.ks:
            a = make_a(power_of(base, -k), plan.p, base)
            conjugates.append(~a * f * a)
    seen = set(conjugates)
    if len(seen) != len(conjugates):
        raise ArithmeticError("conjugate collision; witness plan is unsound")
    return conjugates


def commuting_pair(
    elements: list[PLElement], base: int | None = None
) -> tuple[PLElement, PLElement]:
    """Two nontrivial g != h trivial near both ends, commuting with all of
    `elements` but not with each other.

    Every input must be trivial near 1 (a member of D).  Both outputs are
    supported beyond the largest upper bound of the inputs, which forces
    the commutation; their own supports are nested, which forbids it.
    """
    elements = list(elements)
    if base is None:
        if not elements:
            raise DomainError("an explicit base is required when the set is empty")
        base = elements[0].base
    check_base(base)
    for g in elements:
        if g.base != base:
            raise DomainError("all elements must share one base")
        if not member_D(g):
            raise DomainError("every element of the set must be trivial near 1")
    bounds = [epsilon_upper(g) for g in elements if not g.is_identity]
    delta = max(bounds) if bounds else _ONE - power_of(base, -1)
    k = 1
    while delta + power_of(base, -(k - 1)) >= 1:
        k += 1
    eps1 = delta + power_of(base, -k)
    eps2 = delta + power_of(base, -(k - 1))
    return (
        supported_element(delta, eps1, base),
        supported_element(delta, eps2, base),
    )


def abelianization(f: PLElement) -> tuple[int, int]:
    """The endpoint-exponent image (a, b) in Z x Z.

    Additive under the group product; its kernel is exactly F', which is
    what :func:`kernel_is_Fprime_check` verifies instance by instance.
    """
    return f.boundary_slopes()


def kernel_is_Fprime_check(f: PLElement) -> bool:
    """True iff membership in F' and vanishing of the endpoint image agree."""
    return member_Fprime(f) == (abelianization(f) == (0, 0))


def semidirect_decompose(f: PLElement) -> tuple[PLElement, int]:
    """Write f = d * s**-n with d trivial near 1 and s the shift element.

    n is read off the final slope exponent; the decomposition is verified
    by recomposition before returning.
    """
    s = shift_element(f.base)
    _, b = f.boundary_slopes()
    n = -b
    d = f * s**n
    if not member_D(d) or (d * s**-n) != f:
        raise ArithmeticError("decomposition failed to recompose")
    return d, n


def alpha_action(n: int, f: PLElement) -> PLElement:
    """Conjugation s**n f s**-n, which preserves the subgroup D."""
    if not member_D(f):
        raise DomainError("alpha_action is defined on elements trivial near 1")
    s = shift_element(f.base)
    result = s**n * f * s**-n
    if not member_D(result):  # pragma: no cover - structural impossibility
        raise ArithmeticError("conjugation left the subgroup")
    return result


@dataclass(frozen=True)
class CentralSequenceSpec:
    """Index-n term of the asymptotic-commutation sequence.

    ``element`` is supported exactly on (lower, upper) with
    upper = 1 - N**-(n+1) and lower = upper - N**-(n+1); the supports climb
    toward 1, so the terms eventually commute with any fixed element that
    is trivial near 1.
    """

    index: int
    lower: Fraction
    upper: Fraction
    element: PLElement


def central_sequence(base: int, index: int) -> CentralSequenceSpec:
    """The index-th term: a bump supported on (1 - 2q, 1 - q), q = N**-(index+1)."""
    check_base(base)
    if index < 1:
        raise DomainError(f"index must be >= 1, got {index}")
    q = power_of(base, -(index + 1))
    upper = _ONE - q
    lower = upper - q
    return CentralSequenceSpec(
        index=index,
        lower=lower,
        upper=upper,
        element=supported_element(lower, upper, base),
    )


def central_commutation_index(elements: list[PLElement]) -> int:
    """First index from which the sequence commutes with every given element.

    Commutation holds once the support floor 1 - 2 N**-(n+1) clears every
    input's upper bound; inputs must be trivial near 1.
    """
    if not elements:
        return 1
    base = elements[0].base
    bounds = [epsilon_upper(g) for g in elements if not g.is_identity]
    if not bounds:
        return 1
    delta = max(bounds)
    index = 1
    while _ONE - 2 * power_of(base, -(index + 1)) < delta:
        index += 1
    return index


def centrally_free_check(base: int, m: int, index: int) -> bool:
    """Exact nontriviality of the shift action on the sequence terms.

    Returns True iff s**m a s**-m differs from a, cross-checked through the
    group-algebra 2-norm: distinct group elements sit at squared distance 2.
    """
    if m == 0:
        raise DomainError("m must be nonzero")
    a = central_sequence(base, index).element
    moved = alpha_action(m, a)
    distinct = moved != a
    norm_gap = two_norm_sq(algebra_delta(moved) - algebra_delta(a))
    if distinct != (norm_gap == 2):  # pragma: no cover - structural impossibility
        raise ArithmeticError("equality and 2-norm distance disagree")
    return distinct
