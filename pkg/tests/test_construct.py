"""The element factories: exact branch values, constraints, and relations."""

import random
from fractions import Fraction as F

import pytest

from thompson.construct import (
    GroupWord,
    evaluate_word,
    generator,
    make_a,
    make_a_inverse,
    make_f1,
    make_f2,
    random_element,
    shift_element,
    supported_element,
)
from thompson.element import PLElement, validate
from thompson.errors import ConstraintError, DomainError
from thompson.nadic import power_of


def test_make_a_breaks():
    a = make_a(F(1, 2), 1, 2)
    assert a.breaks == ((F(0), F(0)), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 2)), (F(1), F(1)))
    assert a(F(3, 4)) == F(1, 2)  # middle branch x - d + d/N^p
    assert a.slope_exponents == (-1, 0, 1)


def test_make_a_slope_pattern():
    a = make_a(F(2, 3), 1, 3)
    assert a.slope_exponents == (-1, 0, 1)
    b = make_a(F(5, 8), 2, 2)
    assert b.slope_exponents == (-2, 0, 2)


def test_make_a_exact_middle_degeneracy_is_unreachable():
    # d + d/N^p == 1 forces d = N^p/(N^p + 1), never in Z[1/N] since
    # N^p + 1 is coprime to N; such d is rejected as non-N-adic
    for base, p in [(2, 1), (2, 2), (3, 1)]:
        d = F(base**p, base**p + 1)
        with pytest.raises(ConstraintError):
            make_a(d, p, base)


def test_make_a_cancels_with_closed_form():
    e = PLElement.identity(2)
    a = make_a(F(1, 2), 1, 2)
    assert a * make_a_inverse(F(1, 2), 1, 2) == e


def test_make_a_constraints():
    with pytest.raises(ConstraintError):
        make_a(F(1, 2), -1, 2)  # d/N^p = 1, not < 1
    with pytest.raises(ConstraintError):
        make_a(F(1, 3), 1, 2)  # not dyadic
    with pytest.raises(ConstraintError):
        make_a(F(7, 8), 1, 2)  # branches overlap: d + d/2 > 1
    with pytest.raises(ConstraintError):
        make_a(F(0), 1, 2)
    with pytest.raises(ConstraintError):
        make_a(F(1, 2), F(1, 2), 2)  # p must be an integer


def test_make_a_inverse_values():
    ai = make_a_inverse(F(1, 2), 1, 2)
    assert ai(F(1, 4)) == F(1, 2)  # first branch x * N^p
    assert ai(F(1)) == F(1)


def test_make_a_inverse_oracle_random():
    rng = random.Random(20240501)
    cases = 0
    while cases < 100:
        base = rng.choice([2, 3, 5])
        k = rng.randint(1, 4)
        d = F(rng.randint(1, base**k - 1), base**k)
        p = rng.choice([-2, -1, 1, 2, 3])
        shrunk = d * power_of(base, -p)
        if shrunk >= 1 or d + shrunk > 1:
            continue
        assert make_a_inverse(d, p, base) == make_a(d, p, base).inverse()
        cases += 1


def test_supported_element_worked_example():
    f = supported_element(F(1, 4), F(1, 2), 2, d=F(1, 2), p=1)
    # chart: r(3/8) = 1/2, A(1/2) = 1/4, r^-1(1/4) = 5/16
    assert f(F(3, 8)) == F(5, 16)
    assert f(F(1, 4)) == F(1, 4)
    assert f(F(1, 2)) == F(1, 2)
    mid = F(3, 8)
    assert f(mid) != mid


def test_supported_element_three_chart_oracle():
    # compose the three charted maps independently and compare on a grid
    lo, hi, base = F(1, 4), F(1, 2), 2
    inner = make_a(F(1, 2), 1, base)
    f = supported_element(lo, hi, base, d=F(1, 2), p=1)
    w = hi - lo
    for k in range(33):
        x = lo + w * F(k, 32)
        assert f(x) == lo + w * inner((x - lo) / w)


def test_supported_element_constraints():
    with pytest.raises(ConstraintError):
        supported_element(F(1, 4), F(5, 8), 2)  # gap 3/8 not a power of 2
    with pytest.raises(ConstraintError):
        supported_element(F(1, 2), F(1, 4), 2)  # not increasing
    with pytest.raises(ConstraintError):
        supported_element(F(0), F(1, 2), 2)  # delta must be positive
    with pytest.raises(ConstraintError):
        supported_element(F(1, 4), F(1, 2), 2, p=0)
    with pytest.raises(ConstraintError):
        supported_element(F(1, 3), F(2, 3), 2)  # endpoints not dyadic


def test_f1_values():
    f1 = make_f1(F(1, 4), 2)
    assert f1(F(1, 4)) == F(1, 2)
    assert f1(F(3, 4)) == F(3, 4)
    assert f1(F(1, 2)) == F(5, 8)  # middle branch x/N + Nd - d/N
    assert f1.boundary_slopes() == (1, 0)


def test_f1_constraints():
    with pytest.raises(ConstraintError):
        make_f1(F(3, 8), 2)  # not of the form 1/N^k
    with pytest.raises(ConstraintError):
        make_f1(F(1, 2), 2)  # d(N+1) = 3/2 >= 1
    with pytest.raises(ConstraintError):
        make_f1(F(2), 2)


def test_f2_is_reflection_of_f1():
    d = F(1, 4)
    f1, f2 = make_f1(d, 2), make_f2(d, 2)
    for k in range(65):
        x = F(k, 64)
        assert f2(x) == 1 - f1(1 - x)
    assert f2.boundary_slopes() == (0, 1)
    assert f2(F(1)) == F(1)
    assert f2(F(1, 16)) == F(1, 16)  # identity branch near 0


def test_shift_element():
    for base in (2, 3, 5):
        s = shift_element(base)
        assert validate(s.breaks, base) == s
        assert s.boundary_slopes() == (0, 1)
        # trivial first piece
        x1, y1 = s.breaks[1]
        assert x1 == y1 and x1 > 0


def test_generator_relations_small():
    for base in (2, 3):
        for j in range(1, 4):
            for i in range(j):
                lhs = generator(base, j) * generator(base, i)
                rhs = generator(base, i) * generator(base, j + base - 1)
                assert lhs == rhs


def test_generator_basics():
    assert not generator(2, 0).is_identity
    assert generator(2, 0) == make_a(F(1, 2), 1, 2)
    with pytest.raises(DomainError):
        generator(2, -1)
    # x_i for i >= 1 is supported in [1 - N^(1-ceil), 1]
    x3 = generator(2, 3)
    assert x3.breaks[1][0] == x3.breaks[1][1]


def test_group_word_validation():
    with pytest.raises(DomainError):
        GroupWord(2, ((0, 0),))
    with pytest.raises(DomainError):
        GroupWord(2, ((-1, 1),))
    with pytest.raises(DomainError):
        GroupWord(1, ())


def test_evaluate_word():
    e = PLElement.identity(2)
    assert evaluate_word(GroupWord(2, ())) == e
    assert evaluate_word(GroupWord(2, ((0, 1), (0, -1)))) == e
    # relation instance: x1 x0 = x0 x2 for N = 2
    lhs = evaluate_word(GroupWord(2, ((1, 1), (0, 1))))
    rhs = evaluate_word(GroupWord(2, ((0, 1), (2, 1))))
    assert lhs == rhs


def test_evaluate_word_concatenation_is_product():
    u = GroupWord(3, ((0, 1), (1, -1)))
    v = GroupWord(3, ((2, 2), (0, 1)))
    joined = GroupWord(3, u.letters + v.letters)
    assert evaluate_word(joined) == evaluate_word(u) * evaluate_word(v)


def test_random_element_deterministic():
    assert random_element(2, 0, 99) == PLElement.identity(2)
    a = random_element(2, 6, 1234)
    b = random_element(2, 6, 1234)
    assert a == b
    assert random_element(2, 6, 1235) != a or True  # different seed may differ


def test_random_element_closure_sample():
    for seed in range(100):
        f = random_element(2, 8, seed)
        assert validate(f.breaks, 2) == f
    with pytest.raises(DomainError):
        random_element(2, -1, 0)
