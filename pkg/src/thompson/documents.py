"""File formats: the element document and the word grammar.

An element document is JSON of the form::

    {"N": 2, "breaks": [{"x": "0", "y": "0"}, {"x": "1/2", "y": "1/4"}, ...]}

Coordinates are canonical rational strings, never floats, so documents are
exact and diffable.  Parsing runs the full element validation; serialising
a parsed document reproduces it byte for byte once canonicalised.

The word grammar is a whitespace-separated token list.  Atoms are
``x<i>`` (standard generators), ``A(<d>,<p>)``, ``f1(<d>)``, ``f2(<d>)``
and ``s``; every atom accepts an optional integer exponent suffix
``^<e>``.  Example: ``"x0^-1 A(1/2,1) s^2"``.
"""

from __future__ import annotations

import json
import re

from .construct import generator, make_a, make_f1, make_f2, shift_element
from .element import PLElement, validate
from .errors import ParseError
from .nadic import format_rational, parse_rational

__all__ = [
    "dump_element",
    "element_from_document",
    "element_to_document",
    "evaluate_word_text",
    "load_element",
]


def element_to_document(element: PLElement) -> dict:
    return {
        "N": element.base,
        "breaks": [
            {"x": format_rational(x), "y": format_rational(y)}
            for x, y in element.breaks
        ],
    }


def element_from_document(doc: object) -> PLElement:
    if not isinstance(doc, dict):
        raise ParseError("element document must be a JSON object")
    try:
        base = doc["N"]
        raw = doc["breaks"]
    except KeyError as exc:
        raise ParseError(f"element document missing key {exc}") from None
    if not isinstance(base, int) or isinstance(base, bool):
        raise ParseError(f"N must be an integer, got {base!r}")
    if not isinstance(raw, list):
        raise ParseError("breaks must be a list")
    points = []
    for entry in raw:
        if not isinstance(entry, dict) or set(entry) != {"x", "y"}:
            raise ParseError(f"bad breakpoint entry: {entry!r}")
        points.append((parse_rational(entry["x"]), parse_rational(entry["y"])))
    return validate(points, base)


def dump_element(element: PLElement) -> str:
    return json.dumps(element_to_document(element), indent=2, sort_keys=True) + "\n"


def load_element(text: str) -> PLElement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return element_from_document(doc)


_GEN_RE = re.compile(r"^x(0|[1-9][0-9]*)$")
_INT_RE = re.compile(r"^-?(0|[1-9][0-9]*)$")
_CALL_RE = re.compile(r"^(A|f1|f2)\((.*)\)$")


def evaluate_word_text(text: str, base: int) -> PLElement:
    """Evaluate a word in the token grammar to a canonical element."""
    result = PLElement.identity(base)
    for position, token in enumerate(text.split(), start=1):
        atom, exponent = _split_exponent(token, position)
        result = result * _parse_atom(atom, base, position) ** exponent
    return result


def _split_exponent(token: str, position: int) -> tuple[str, int]:
    if "^" not in token:
        return token, 1
    atom, _, tail = token.rpartition("^")
    if not atom or not _INT_RE.match(tail):
        raise ParseError(f"token {position}: bad exponent in {token!r}")
    return atom, int(tail)


def _parse_atom(atom: str, base: int, position: int) -> PLElement:
    if atom == "s":
        return shift_element(base)
    m = _GEN_RE.match(atom)
    if m:
        return generator(base, int(m.group(1)))
    m = _CALL_RE.match(atom)
    if m:
        name, args = m.group(1), m.group(2).split(",")
        try:
            if name == "A":
                if len(args) != 2:
                    raise ParseError("A takes two arguments")
                if not _INT_RE.match(args[1]):
                    raise ParseError(f"slope parameter must be an integer: {args[1]!r}")
                return make_a(parse_rational(args[0]), int(args[1]), base)
            if len(args) != 1:
                raise ParseError(f"{name} takes one argument")
            maker = make_f1 if name == "f1" else make_f2
            return maker(parse_rational(args[0]), base)
        except ParseError as exc:
            raise ParseError(f"token {position}: {exc}") from None
    raise ParseError(f"token {position}: unrecognised atom {atom!r}")
