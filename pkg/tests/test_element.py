"""Element validation, exact evaluation, and the group operations.

The independent oracles here are deliberately primitive: linear
interpolation by scan (no bisection), pointwise grid comparison for
composition, and sign tests for fixed sets.
"""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from thompson.construct import GroupWord, evaluate_word, make_a, supported_element
from thompson.element import PLElement, equals, validate
from thompson.errors import BaseMismatchError, DomainError, ValidationError

GRID = [F(k, 64) for k in range(65)]


def interp_oracle(breaks, x):
    # independent of PLElement.__call__: plain scan, no bisect
    for (x0, y0), (x1, y1) in zip(breaks, breaks[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError(f"{x} not covered")


def words(max_gen=4, max_len=6):
    letters = st.lists(
        st.tuples(st.integers(0, max_gen), st.sampled_from([-2, -1, 1, 2])),
        max_size=max_len,
    )
    return st.tuples(st.sampled_from([2, 3]), letters).map(
        lambda t: evaluate_word(GroupWord(t[0], tuple(t[1])))
    )


def test_validate_identity():
    e = validate([(0, 0), (1, 1)], 2)
    assert e == PLElement.identity(2)
    assert e.is_identity


def test_validate_three_slope_example():
    f = validate([(0, 0), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 2)), (1, 1)], 2)
    assert f.slope_exponents == (-1, 0, 1)


def test_validate_removes_redundant_breakpoints():
    f = validate([(0, 0), (F(1, 4), F(1, 4)), (F(1, 2), F(1, 2)), (1, 1)], 2)
    assert f == PLElement.identity(2)
    g = validate(
        [(0, 0), (F(1, 4), F(1, 8)), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 2)), (1, 1)], 2
    )
    assert g.breaks == ((F(0), F(0)), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 2)), (F(1), F(1)))


@pytest.mark.parametrize(
    "breaks,code",
    [
        ([], "empty"),
        ([(0, 0), (F(1, 2), F(1, 4))], "endpoint"),
        ([(F(1, 4), F(1, 4)), (1, 1)], "endpoint"),
        ([(0, 0), (F(1, 2), F(3, 4)), (F(1, 4), F(7, 8)), (1, 1)], "monotone"),
        ([(0, 0), (F(1, 2), F(1, 2)), (F(1, 2), F(3, 4)), (1, 1)], "monotone"),
        ([(0, 0), (F(1, 3), F(1, 2)), (1, 1)], "nadic"),
        ([(0, 0), (F(1, 2), F(1, 4)), (1, 1)], "slope"),
    ],
)
def test_validate_error_codes(breaks, code):
    with pytest.raises(ValidationError) as err:
        validate(breaks, 2)
    assert err.value.code == code


def test_evaluate_against_interpolation_oracle():
    f = make_a(F(1, 2), 1, 2)
    for x in GRID:
        assert f(x) == interp_oracle(f.breaks, x)
    assert f(F(1, 2)) == F(1, 4)
    assert f(F(7, 8)) == F(3, 4)


def test_evaluate_identity_at_non_nadic_point():
    assert PLElement.identity(2)(F(2, 3)) == F(2, 3)


def test_evaluate_domain_errors():
    f = PLElement.identity(2)
    with pytest.raises(DomainError):
        f(F(3, 2))
    with pytest.raises(DomainError):
        f(F(-1, 64))


def test_compose_identity_and_inverse_laws():
    f = make_a(F(1, 2), 1, 2)
    e = PLElement.identity(2)
    assert f * e == f
    assert e * f == f
    assert f * ~f == e
    assert ~f * f == e


def test_compose_against_grid_oracle():
    f = make_a(F(1, 2), 1, 2)
    g = make_a(F(1, 4), -1, 2)
    fg = f * g
    for x in GRID:
        assert fg(x) == f(g(x))
    ff = f * f
    assert ff(F(1, 2)) == F(1, 8)  # slope 1/4 on [0, 1/2]
    assert ff.slope_exponents[0] == -2


def test_compose_breakpoints_are_cuts_of_both_factors():
    f = make_a(F(1, 2), 1, 2)
    g = make_a(F(1, 4), 1, 2)
    xs = {x for x, _ in (f * g).breaks}
    expected = {x for x, _ in g.breaks} | {g.preimage(x) for x, _ in f.breaks}
    assert xs <= expected


def test_compose_base_mismatch():
    with pytest.raises(BaseMismatchError):
        PLElement.identity(2) * PLElement.identity(3)
    with pytest.raises(BaseMismatchError):
        equals(PLElement.identity(2), PLElement.identity(3))


def test_pow():
    f = make_a(F(1, 2), 1, 2)
    e = PLElement.identity(2)
    assert f**0 == e
    assert f**1 == f
    assert f**3 == f * f * f
    assert f**-2 == ~f * ~f
    assert f**2 * f**-2 == e


def test_equals_distinguishes_parameters():
    a = make_a(F(1, 2), 1, 2)
    b = make_a(F(1, 4), 1, 2)
    assert a != b
    assert a(F(1, 2)) != b(F(1, 2))  # they differ at 1/2


def test_fixed_set_identity():
    assert PLElement.identity(2).fixed_set().intervals == ((F(0), F(1)),)


def test_fixed_set_three_slope_is_endpoints_only():
    f = make_a(F(1, 2), 1, 2)
    assert f.fixed_set().intervals == ((F(0), F(0)), (F(1), F(1)))
    # sign oracle: f(x) < x strictly inside
    for x in GRID[1:-1]:
        assert f(x) < x


def test_fixed_set_supported_element():
    f = supported_element(F(1, 4), F(1, 2), 2)
    assert f.fixed_set().intervals == ((F(0), F(1, 4)), (F(1, 2), F(1)))
    # 32 interior samples move
    for k in range(1, 32):
        x = F(1, 4) + F(k, 128)
        assert f(x) != x
    assert F(1, 8) in f.fixed_set()
    assert F(3, 8) not in f.fixed_set()
    assert f.fixed_set().overlaps_open(F(0), F(1, 4))
    assert not f.fixed_set().overlaps_open(F(1, 4), F(1, 2))


def test_fixed_set_isolated_interior_point():
    # slopes 1/2, 4, 1, 1/2; the slope-4 segment crosses the diagonal at
    # x = 7/12 (solving 4x - 7/4 = x), an isolated interior fixed point
    f = validate(
        [(0, 0), (F(1, 2), F(1, 4)), (F(5, 8), F(3, 4)), (F(3, 4), F(7, 8)), (1, 1)], 2
    )
    assert f.fixed_set().intervals == (
        (F(0), F(0)),
        (F(7, 12), F(7, 12)),
        (F(1), F(1)),
    )


def test_fixed_set_conjugation_covariance():
    f = supported_element(F(1, 4), F(1, 2), 2)
    h = make_a(F(1, 2), 1, 2)
    conj = h * f * ~h
    expected = tuple((h(lo), h(hi)) for lo, hi in f.fixed_set().intervals)
    assert conj.fixed_set().intervals == expected


def test_boundary_slopes():
    assert PLElement.identity(3).boundary_slopes() == (0, 0)
    for p in (1, 2, -1):
        assert make_a(F(1, 8), p, 2).boundary_slopes() == (-p, p)


@settings(max_examples=40, deadline=None)
@given(words(), words())
def test_boundary_slopes_additive(f, g):
    if f.base != g.base:
        return
    af, bf = f.boundary_slopes()
    ag, bg = g.boundary_slopes()
    assert (f * g).boundary_slopes() == (af + ag, bf + bg)


@settings(max_examples=30, deadline=None)
@given(words(), words(), words())
def test_group_axioms(f, g, h):
    if not (f.base == g.base == h.base):
        return
    e = PLElement.identity(f.base)
    assert (f * g) * h == f * (g * h)
    assert f * ~f == e
    assert f * e == f


@settings(max_examples=40, deadline=None)
@given(words())
def test_canonical_round_trip_and_closure(f):
    assert validate(f.breaks, f.base) == f
    # equality is consistent with pointwise equality on a dense sample
    g = validate(f.breaks, f.base)
    for x in GRID[::4]:
        assert g(x) == f(x)
