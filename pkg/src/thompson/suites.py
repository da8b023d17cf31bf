"""Seeded verification suites with machine-readable reports.

Each suite draws its cases from a deterministic generator (the seed is
embedded in the report), runs a batch of exact checks, and aggregates one
result line per property.  Reports carry no timestamps, so a fixed seed
reproduces the report byte for byte.  The CLI exposes every suite; the
acceptance tests run them at their contractual sizes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .construct import (
    make_a,
    make_a_inverse,
    make_f1,
    make_f2,
    generator,
    random_element,
    shift_element,
    supported_element,
)
from .element import PLElement, validate
from .errors import ConstraintError
from .grouprep import (
    AlgebraElement,
    adjoint,
    commutator_norm_sq,
    delta,
    trace,
    two_norm_sq,
)
from .nadic import power_of
from .structure import (
    abelianization,
    alpha_action,
    central_commutation_index,
    central_sequence,
    centrally_free_check,
    check_conjugation_identity,
    check_conjugation_identity_upper,
    commuting_pair,
    epsilon_lower,
    icc_witness,
    member_D,
    member_Fprime,
    semidirect_decompose,
    witness_plan,
)

__all__ = ["Check", "Report", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    passed: bool
    details: dict[str, str] = field(default_factory=dict)


@dataclass
class Report:
    suite: str
    base: int
    seed: int
    params: dict[str, object]
    checks: list[Check]
    exhibits: list[tuple[str, PLElement]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "base": self.base,
            "seed": self.seed,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "verdict": "pass" if self.passed else "fail",
            "checks": [
                {
                    "name": c.name,
                    "verdict": "pass" if c.passed else "fail",
                    "details": dict(sorted(c.details.items())),
                }
                for c in self.checks
            ],
        }

    def to_tsv(self) -> str:
        lines = ["index\tcheck\tverdict\tdetails"]
        for i, c in enumerate(self.checks):
            details = ";".join(f"{k}={v}" for k, v in sorted(c.details.items()))
            verdict = "pass" if c.passed else "fail"
            lines.append(f"{i}\t{c.name}\t{verdict}\t{details}")
        return "\n".join(lines) + "\n"

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            details = " ".join(f"{k}={v}" for k, v in sorted(c.details.items()))
            lines.append(f"{status}  {self.suite}.{c.name}" + (f"  [{details}]" if details else ""))
        return lines


class _Tally:
    """Aggregate many exact instance checks into one report line."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.first_failure: str | None = None

    def add(self, ok: bool, describe: str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = describe

    def check(self, **extra: object) -> Check:
        details = {"cases": str(self.cases), "failures": str(self.failures)}
        details.update({k: str(v) for k, v in extra.items()})
        if self.first_failure:
            details["first_failure"] = self.first_failure
        return Check(self.name, self.failures == 0 and self.cases > 0, details)


def _rng(suite: str, base: int, seed: int) -> random.Random:
    return random.Random(f"{suite}:{base}:{seed}")


def _random_word_element(rng: random.Random, base: int, max_len: int) -> PLElement:
    length = rng.randint(0, max_len)
    return random_element(base, length, rng.getrandbits(32))


def _random_nontrivial(rng: random.Random, base: int, max_len: int) -> PLElement:
    while True:
        f = _random_word_element(rng, base, max_len)
        if not f.is_identity:
            return f


def _random_interval(rng: random.Random, base: int) -> tuple[Fraction, Fraction]:
    """A pair 0 < delta < eps < 1 with eps - delta an exact power of the base."""
    while True:
        j = rng.randint(1, 4)
        m = rng.randint(1, base**j - 1)
        lo = Fraction(m, base**j)
        gap = power_of(base, -rng.randint(1, 4))
        if lo + gap < 1:
            return lo, lo + gap


def _random_supported(rng: random.Random, base: int) -> PLElement:
    lo, hi = _random_interval(rng, base)
    for _ in range(8):
        p = rng.choice([-1, 1, 2])
        d = power_of(base, -rng.randint(1, 2))
        try:
            return supported_element(lo, hi, base, d=d, p=p)
        except ConstraintError:
            continue
    return supported_element(lo, hi, base)


def _random_fprime(rng: random.Random, base: int, conj_len: int = 4) -> PLElement:
    inner = _random_supported(rng, base)
    h = _random_word_element(rng, base, conj_len)
    return h * inner * ~h


def _random_d_element(rng: random.Random, base: int, max_len: int) -> PLElement:
    part, _ = semidirect_decompose(_random_word_element(rng, base, max_len))
    return part


def _random_ad_params(rng: random.Random, base: int) -> tuple[Fraction, int]:
    while True:
        k = rng.randint(1, 4)
        m = rng.randint(1, base**k - 1)
        d = Fraction(m, base**k)
        p = rng.choice([-3, -2, -1, 1, 2, 3])
        shrunk = d * power_of(base, -p)
        if shrunk < 1 and d + shrunk <= 1:
            return d, p


def _random_algebra_element(
    rng: random.Random, base: int, max_terms: int = 5, max_len: int = 5
) -> AlgebraElement:
    terms: dict[PLElement, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        g = _random_word_element(rng, base, max_len)
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
        terms[g] = terms.get(g, Fraction(0)) + coeff
    return AlgebraElement(base, terms)


# ---------------------------------------------------------------------------
# suites


def suite_laws(base: int = 2, seed: int = 0, samples: int = 1000, max_len: int = 10) -> Report:
    """Group laws and closure on seeded random elements."""
    rng = _rng("laws", base, seed)
    e = PLElement.identity(base)
    elements = [_random_word_element(rng, base, max_len) for _ in range(samples)]

    closure = _Tally("closure")
    for f in elements:
        closure.add(validate(f.breaks, base) == f, f"breaks={f.breaks}")

    identity = _Tally("identity_law")
    inverse = _Tally("inverse_law")
    for f in elements:
        identity.add(f * e == f and e * f == f, str(f))
        inverse.add(f * ~f == e and ~f * f == e, str(f))

    assoc = _Tally("associativity")
    for i in range(0, samples - 2, 3):
        f, g, h = elements[i : i + 3]
        assoc.add((f * g) * h == f * (g * h), f"triple at {i}")

    return Report(
        suite="laws",
        base=base,
        seed=seed,
        params={"samples": samples, "max_len": max_len},
        checks=[closure.check(), identity.check(), inverse.check(), assoc.check()],
        exhibits=[(f"sample{i}", elements[i]) for i in range(min(3, len(elements)))],
    )


def suite_oracle(base: int = 2, seed: int = 0, samples: int = 200) -> Report:
    """Closed-form inverse of the A family against the generic inverter."""
    rng = _rng("oracle", base, seed)
    e = PLElement.identity(base)
    agree = _Tally("closed_form_matches_inverter")
    cancels = _Tally("composes_to_identity")
    exhibit = None
    for _ in range(samples):
        d, p = _random_ad_params(rng, base)
        a = make_a(d, p, base)
        closed = make_a_inverse(d, p, base)
        if exhibit is None:
            exhibit = a
        agree.add(closed == ~a, f"d={d} p={p}")
        cancels.add(a * closed == e and closed * a == e, f"d={d} p={p}")
    return Report(
        suite="oracle",
        base=base,
        seed=seed,
        params={"samples": samples},
        checks=[agree.check(), cancels.check()],
        exhibits=[("A", exhibit)] if exhibit else [],
    )


def suite_eq1(base: int = 2, seed: int = 0, samples: int = 500) -> Report:
    """The conjugation covariance of both identity-boundary invariants."""
    rng = _rng("eq1", base, seed)
    lower = _Tally("lower_bound_covariant")
    upper = _Tally("upper_bound_covariant")
    exhibits: list[tuple[str, PLElement]] = []
    for i in range(samples):
        g = _random_supported(rng, base)
        h = _random_word_element(rng, base, 8)
        lower.add(check_conjugation_identity(g, h), f"case {i}")
        upper.add(check_conjugation_identity_upper(g, h), f"case {i}")
        if not exhibits:
            exhibits = [("g", g), ("h", h), ("conjugate", h * g * ~h)]
    return Report(
        suite="eq1",
        base=base,
        seed=seed,
        params={"samples": samples},
        checks=[lower.check(), upper.check()],
        exhibits=exhibits,
    )


def _icc_pool(rng: random.Random, base: int, samples: int) -> dict[str, list[PLElement]]:
    """Random nontrivial elements bucketed by first-segment slope sign,
    topped up so every branch of the witness construction is exercised."""
    floor = min(10, samples // 3)
    pool: dict[str, list[PLElement]] = {
        "identity_near_zero": [],
        "positive_slope": [],
        "negative_slope": [],
    }

    def branch_of(f: PLElement) -> str:
        n = f.slope_exponents[0]
        if n == 0:
            return "identity_near_zero"
        return "positive_slope" if n > 0 else "negative_slope"

    total = 0
    attempts = 0
    while total < samples and attempts < samples * 50:
        f = _random_nontrivial(rng, base, 8)
        pool[branch_of(f)].append(f)
        total += 1
        attempts += 1

    def targeted(branch: str) -> PLElement:
        if branch == "identity_near_zero":
            return _random_supported(rng, base)
        up = make_f1(power_of(base, -rng.randint(2, 3)), base)
        if rng.random() < 0.5:
            up = up * _random_supported(rng, base)
        return up if branch == "positive_slope" else ~up

    for branch in pool:
        while len(pool[branch]) < floor:
            donor = max(pool, key=lambda b: len(pool[b]))
            if len(pool[donor]) > floor:
                pool[donor].pop()
            pool[branch].append(targeted(branch))
    return pool


def suite_icc(base: int = 2, seed: int = 0, samples: int = 100, count: int = 10) -> Report:
    """Pairwise-distinct conjugate batches for every branch of the plan."""
    rng = _rng("icc", base, seed)
    pool = _icc_pool(rng, base, samples)
    distinct = _Tally("witnesses_pairwise_distinct")
    sized = _Tally("witness_count")
    valid = _Tally("witnesses_validate")
    branch_used = {name: 0 for name in pool}
    sample_plans: dict[str, dict[str, str]] = {}
    exhibits: list[tuple[str, PLElement]] = []
    for branch, cases in pool.items():
        for f in cases:
            plan = witness_plan(f, count)
            branch_used[plan.branch] += 1
            sample_plans.setdefault(plan.branch, plan.describe())
            ws = icc_witness(f, count)
            sized.add(len(ws) == count, f"branch={branch}")
            ok = all(ws[i] != ws[j] for i in range(len(ws)) for j in range(i + 1, len(ws)))
            distinct.add(ok, f"branch={branch} f={f}")
            valid.add(
                all(validate(w.breaks, base) == w for w in ws), f"branch={branch}"
            )
            if not exhibits:
                exhibits = [("f", f)] + [(f"conj{i}", w) for i, w in enumerate(ws[:3])]
    coverage = Check(
        "branch_coverage",
        all(branch_used[b] >= min(10, samples // 3) for b in branch_used),
        {k: str(v) for k, v in sorted(branch_used.items())},
    )
    plans = [
        Check(
            f"plan_{branch}",
            True,
            details,
        )
        for branch, details in sorted(sample_plans.items())
    ]
    return Report(
        suite="icc",
        base=base,
        seed=seed,
        params={"samples": samples, "count": count},
        checks=[sized.check(), distinct.check(), valid.check(), coverage, *plans],
        exhibits=exhibits,
    )


def suite_lemma32(base: int = 2, seed: int = 0, samples: int = 200) -> Report:
    """Supported elements: membership, exact support, no interior fixed points."""
    rng = _rng("lemma32", base, seed)
    membership = _Tally("trivial_near_both_ends")
    support = _Tally("fixed_set_is_complement_of_support")
    moved = _Tally("midpoint_moved")
    exhibit = None
    for _ in range(samples):
        lo, hi = _random_interval(rng, base)
        f = _random_supported_on(rng, base, lo, hi)
        if exhibit is None:
            exhibit = f
        membership.add(member_Fprime(f), f"({lo},{hi})")
        expected = ((Fraction(0), lo), (hi, Fraction(1)))
        support.add(f.fixed_set().intervals == expected, f"({lo},{hi})")
        mid = (lo + hi) / 2
        moved.add(f(mid) != mid, f"({lo},{hi})")
    return Report(
        suite="lemma32",
        base=base,
        seed=seed,
        params={"samples": samples},
        checks=[membership.check(), support.check(), moved.check()],
        exhibits=[("supported", exhibit)] if exhibit else [],
    )


def _random_supported_on(
    rng: random.Random, base: int, lo: Fraction, hi: Fraction
) -> PLElement:
    for _ in range(8):
        p = rng.choice([-1, 1, 2])
        d = power_of(base, -rng.randint(1, 2))
        try:
            return supported_element(lo, hi, base, d=d, p=p)
        except ConstraintError:
            continue
    return supported_element(lo, hi, base)


def suite_prop33(
    base: int = 2, seed: int = 0, samples: int = 100, max_size: int = 5, max_len: int = 8
) -> Report:
    """Commuting pairs against random finite subsets of D."""
    rng = _rng("prop33", base, seed)
    wellformed = _Tally("pair_nontrivial_distinct_in_Fprime")
    commutes = _Tally("commutes_with_every_input")
    skew = _Tally("pair_does_not_commute")
    norm = _Tally("commutator_norm_sq_is_2")
    exhibits: list[tuple[str, PLElement]] = []
    for i in range(samples):
        family = [
            _random_d_element(rng, base, max_len) for _ in range(rng.randint(0, max_size))
        ]
        g, h = commuting_pair(family, base)
        if not exhibits:
            exhibits = [("g", g), ("h", h)]
        wellformed.add(
            member_Fprime(g)
            and member_Fprime(h)
            and not g.is_identity
            and not h.is_identity
            and g != h,
            f"set {i}",
        )
        commutes.add(
            all(g * x == x * g and h * x == x * h for x in family), f"set {i}"
        )
        skew.add(g * h != h * g, f"set {i}")
        norm.add(commutator_norm_sq(delta(g), delta(h)) == 2, f"set {i}")
    return Report(
        suite="prop33",
        base=base,
        seed=seed,
        params={"samples": samples, "max_size": max_size, "max_len": max_len},
        checks=[wellformed.check(), commutes.check(), skew.check(), norm.check()],
        exhibits=exhibits,
    )


def suite_relations(base: int = 2, seed: int = 0, maxj: int = 6) -> Report:
    """The defining relations x_j x_i = x_i x_{j+N-1} for 0 <= i < j <= maxj."""
    relation = _Tally("defining_relations")
    for j in range(1, maxj + 1):
        for i in range(j):
            lhs = generator(base, j) * generator(base, i)
            rhs = generator(base, i) * generator(base, j + base - 1)
            relation.add(lhs == rhs, f"i={i} j={j}")
    nontrivial = Check(
        "generators_nontrivial",
        all(not generator(base, i).is_identity for i in range(maxj + 1)),
        {"range": f"0..{maxj}"},
    )
    return Report(
        suite="relations",
        base=base,
        seed=seed,
        params={"maxj": maxj},
        checks=[relation.check(), nontrivial],
        exhibits=[(f"x{i}", generator(base, i)) for i in range(min(4, maxj + 1))],
    )


def suite_phi(base: int = 2, seed: int = 0, samples: int = 500) -> Report:
    """The endpoint-exponent map: additivity, surjectivity, kernel."""
    rng = _rng("phi", base, seed)
    additive = _Tally("additive_under_product")
    kernel = _Tally("kernel_is_exactly_Fprime")
    for _ in range(samples):
        f = _random_word_element(rng, base, 8)
        g = _random_word_element(rng, base, 8)
        pf, pg, pfg = abelianization(f), abelianization(g), abelianization(f * g)
        additive.add(pfg == (pf[0] + pg[0], pf[1] + pg[1]), f"{pf}+{pg}")
        kernel.add(member_Fprime(f) == (pf == (0, 0)), str(pf))
    d0 = Fraction(1, base * base)
    f1, f2 = make_f1(d0, base), make_f2(d0, base)
    (a1, b1), (a2, b2) = abelianization(f1), abelianization(f2)
    det = a1 * b2 - a2 * b1
    generates = Check(
        "images_generate_ZxZ",
        abs(det) == 1,
        {"phi_f1": str((a1, b1)), "phi_f2": str((a2, b2)), "det": str(det)},
    )
    return Report(
        suite="phi",
        base=base,
        seed=seed,
        params={"samples": samples},
        checks=[additive.check(), generates, kernel.check()],
        exhibits=[("f1", f1), ("f2", f2)],
    )


def suite_semidirect(
    base: int = 2,
    seed: int = 0,
    samples: int = 500,
    action_samples: int = 200,
    law_triples: int = 100,
) -> Report:
    """The splitting over D: round trips, closure of the action, action law."""
    rng = _rng("semidirect", base, seed)
    s = shift_element(base)
    roundtrip = _Tally("decompose_recompose")
    stable = _Tally("decomposition_stable")
    closure = _Tally("action_preserves_D")
    law = _Tally("action_law")
    exhibit = None
    for _ in range(samples):
        f = _random_word_element(rng, base, 10)
        d, n = semidirect_decompose(f)
        if exhibit is None:
            exhibit = d
        roundtrip.add(member_D(d) and d * s**-n == f, f"n={n}")
        stable.add(semidirect_decompose(d * s**-n) == (d, n), f"n={n}")
    for _ in range(action_samples):
        d = _random_d_element(rng, base, 8)
        m = rng.choice([-3, -2, -1, 1, 2, 3])
        closure.add(member_D(alpha_action(m, d)), f"m={m}")
    for _ in range(law_triples):
        d = _random_d_element(rng, base, 6)
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        law.add(
            alpha_action(m, alpha_action(n, d)) == alpha_action(m + n, d),
            f"m={m} n={n}",
        )
    return Report(
        suite="semidirect",
        base=base,
        seed=seed,
        params={
            "samples": samples,
            "action_samples": action_samples,
            "law_triples": law_triples,
        },
        checks=[roundtrip.check(), stable.check(), closure.check(), law.check()],
        exhibits=[("s", s)] + ([("d", exhibit)] if exhibit else []),
    )


def suite_central(
    base: int = 2,
    seed: int = 0,
    set_size: int = 3,
    tail: int = 10,
    max_index: int = 20,
    m_range: int = 3,
) -> Report:
    """The asymptotic-commutation sequence and the freeness of the shift."""
    rng = _rng("central", base, seed)
    family = []
    while len(family) < set_size:
        d = _random_d_element(rng, base, 8)
        if not d.is_identity:
            family.append(d)
    start = central_commutation_index(family)
    commutes = _Tally("eventual_exact_commutation")
    for index in range(start, start + tail + 1):
        a = central_sequence(base, index).element
        commutes.add(
            all(a * g == g * a for g in family), f"index={index}"
        )
    bound = _Tally("identity_bound_equals_lower_edge")
    member = _Tally("terms_in_Fprime_nontrivial")
    for index in range(1, max_index + 1):
        term = central_sequence(base, index)
        bound.add(epsilon_lower(term.element) == term.lower, f"index={index}")
        member.add(
            member_Fprime(term.element) and not term.element.is_identity,
            f"index={index}",
        )
    free = _Tally("shift_action_centrally_free")
    for index in range(1, max_index + 1):
        for m in range(-m_range, m_range + 1):
            if m == 0:
                continue
            free.add(centrally_free_check(base, m, index), f"m={m} index={index}")
    return Report(
        suite="central",
        base=base,
        seed=seed,
        params={
            "set_size": set_size,
            "tail": tail,
            "max_index": max_index,
            "m_range": m_range,
        },
        checks=[
            commutes.check(start_index=start),
            bound.check(),
            member.check(),
            free.check(),
        ],
        exhibits=[
            (f"a{i}", central_sequence(base, i).element) for i in range(1, 4)
        ],
    )


def suite_algebra(base: int = 2, seed: int = 0, samples: int = 100) -> Report:
    """Trace values, basis distances, traciality, and the norm cross-check."""
    rng = _rng("algebra", base, seed)
    e = PLElement.identity(base)
    unit = Check("trace_of_identity_is_1", trace(delta(e)) == 1, {})
    vanish = _Tally("trace_vanishes_off_identity")
    dist = _Tally("distinct_basis_distance_sq_is_2")
    tracial = _Tally("trace_commutes")
    cross = _Tally("norm_sq_equals_trace_of_star_product")
    ring = _Tally("ring_axioms")
    for i in range(samples):
        g = _random_nontrivial(rng, base, 6)
        vanish.add(trace(delta(g)) == 0, f"case {i}")
        h = _random_word_element(rng, base, 6)
        while h == g:
            h = _random_word_element(rng, base, 6)
        dist.add(two_norm_sq(delta(g) - delta(h)) == 2, f"case {i}")
        x = _random_algebra_element(rng, base)
        y = _random_algebra_element(rng, base)
        tracial.add(trace(x * y) == trace(y * x), f"case {i}")
        cross.add(two_norm_sq(x) == trace(adjoint(x) * x), f"case {i}")
        if i < 20:
            z = _random_algebra_element(rng, base)
            ring.add(
                (x + y) * z == x * z + y * z
                and (x * y) * z == x * (y * z)
                and adjoint(adjoint(x)) == x,
                f"case {i}",
            )
    return Report(
        suite="algebra",
        base=base,
        seed=seed,
        params={"samples": samples},
        checks=[
            unit,
            vanish.check(),
            dist.check(),
            tracial.check(),
            cross.check(),
            ring.check(),
        ],
        exhibits=[],
    )


SUITES: dict[str, Callable[..., Report]] = {
    "laws": suite_laws,
    "oracle": suite_oracle,
    "eq1": suite_eq1,
    "icc": suite_icc,
    "lemma32": suite_lemma32,
    "prop33": suite_prop33,
    "relations": suite_relations,
    "phi": suite_phi,
    "semidirect": suite_semidirect,
    "central": suite_central,
    "algebra": suite_algebra,
}


def run_suite(name: str, **kwargs: object) -> Report:
    """Run a suite by name, passing only the options it understands."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    func = SUITES[name]
    accepted = func.__code__.co_varnames[: func.__code__.co_argcount]
    filtered = {k: v for k, v in kwargs.items() if k in accepted and v is not None}
    return func(**filtered)
