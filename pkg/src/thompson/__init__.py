"""Exact arithmetic in the piecewise-linear groups F(N).

F(N) is the group of orientation-preserving PL homeomorphisms of [0,1]
whose breakpoints have coordinates in Z[1/N] and whose slopes are integer
powers of N.  This package represents elements canonically, implements the
group operations exactly, exposes the subgroup structure (the maps trivial
near 1, the maps trivial near both ends, the endpoint-exponent map to
Z x Z and the splitting over the shift), builds explicit conjugacy-class
witnesses and asymptotically central sequences, and carries a finitely
supported group-algebra layer with an exact trace and 2-norm.
"""

from .construct import (
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
from .element import FixedSet, PLElement, equals, validate
from .errors import (
    BaseMismatchError,
    ConstraintError,
    DomainError,
    ParseError,
    ValidationError,
)
from .grouprep import (
    AlgebraElement,
    adjoint,
    algebra_mul,
    commutator,
    commutator_norm_sq,
    delta,
    trace,
    two_norm_sq,
)
from .nadic import format_rational, is_nadic, parse_rational, power_exponent, power_of
from .structure import (
    CentralSequenceSpec,
    WitnessPlan,
    abelianization,
    alpha_action,
    central_commutation_index,
    central_sequence,
    centrally_free_check,
    check_conjugation_identity,
    check_conjugation_identity_upper,
    commuting_pair,
    epsilon_lower,
    epsilon_upper,
    icc_witness,
    kernel_is_Fprime_check,
    member_D,
    member_Fprime,
    semidirect_decompose,
    witness_plan,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BaseMismatchError",
    "CentralSequenceSpec",
    "ConstraintError",
    "DomainError",
    "FixedSet",
    "GroupWord",
    "ParseError",
    "PLElement",
    "ValidationError",
    "WitnessPlan",
    "abelianization",
    "adjoint",
    "algebra_mul",
    "alpha_action",
    "central_commutation_index",
    "central_sequence",
    "centrally_free_check",
    "check_conjugation_identity",
    "check_conjugation_identity_upper",
    "commutator",
    "commutator_norm_sq",
    "commuting_pair",
    "delta",
    "epsilon_lower",
    "epsilon_upper",
    "equals",
    "evaluate_word",
    "format_rational",
    "generator",
    "icc_witness",
    "is_nadic",
    "kernel_is_Fprime_check",
    "make_a",
    "make_a_inverse",
    "make_f1",
    "make_f2",
    "member_D",
    "member_Fprime",
    "parse_rational",
    "power_exponent",
    "power_of",
    "random_element",
    "semidirect_decompose",
    "shift_element",
    "supported_element",
    "trace",
    "two_norm_sq",
    "validate",
    "witness_plan",
]
