"""
The Laurent polynomial potential

    a_1 + ... + a_l + q * (sum over S of prod_{i in S} a_i) / (a_1 ... a_l)

its exact evaluation, rendering and the end-to-end pipeline that builds it
for a catalog space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .errors import Inconsistency, InvalidParameters, SizeMismatch, ZeroCoordinate
from .quiver import build_quiver, enumerate_by_moves
from .rootdata import CominusculeSpace, langlands_dual, space_data
from .weyl import (canonical_wP_word, compute_wprime, element_of,
                   enumerate_subexpressions_bruteforce, is_reduced)

__all__ = [
    "LaurentPotential", "assemble", "evaluate", "render", "parse_json",
    "compute_potential", "POTENTIAL_SCHEMA",
]

POTENTIAL_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["space", "ell", "ell_prime", "numerator", "word"],
    "additionalProperties": False,
    "properties": {
        "space": {"type": ["string", "null"]},
        "ell": {"type": "integer", "minimum": 1},
        "ell_prime": {"type": "integer", "minimum": 0},
        "numerator": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        },
        "word": {
            "type": ["array", "null"],
            "items": {"type": "integer", "minimum": 1},
        },
    },
}


@dataclass(frozen=True)
class LaurentPotential:
    ell: int
    numerator: tuple[tuple[int, ...], ...]
    ell_prime: int
    space: str | None = None
    word: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(set(self.numerator)) != len(self.numerator):
            raise InvalidParameters("numerator monomials must be distinct")
        for m in self.numerator:
            if len(m) != self.ell_prime:
                raise SizeMismatch(f"monomial {m} does not have degree {self.ell_prime}")
            if list(m) != sorted(set(m)) or (m and not 1 <= m[0] <= m[-1] <= self.ell):
                raise InvalidParameters(f"bad index set {m}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "space": self.space,
            "ell": self.ell,
            "ell_prime": self.ell_prime,
            "numerator": [list(m) for m in self.numerator],
            "word": None if self.word is None else list(self.word),
        }


def assemble(ell: int, subsets: Iterable[Sequence[int]], space: str | None = None,
             word: Sequence[int] | None = None) -> LaurentPotential:
    monos = sorted({tuple(sorted(s)) for s in subsets})
    sizes = {len(m) for m in monos}
    if len(sizes) > 1:
        raise SizeMismatch(f"subsets of unequal sizes {sorted(sizes)}")
    ell_prime = sizes.pop() if sizes else 0
    return LaurentPotential(ell, tuple(monos), ell_prime, space,
                            None if word is None else tuple(word))


def evaluate(p: LaurentPotential, point: Sequence, q) -> Fraction:
    """Exact value at a point with nonzero rational coordinates."""
    if len(point) != p.ell:
        raise InvalidParameters(f"expected {p.ell} coordinates, got {len(point)}")
    a = [Fraction(x) for x in point]
    q = Fraction(q)
    if any(x == 0 for x in a) or q == 0:
        raise ZeroCoordinate("coordinates and q must be nonzero")
    num = Fraction(0)
    for m in p.numerator:
        term = Fraction(1)
        for i in m:
            term *= a[i - 1]
        num += term
    den = Fraction(1)
    for x in a:
        den *= x
    return sum(a, Fraction(0)) + q * num / den


def _var(i: int, latex: bool) -> str:
    if latex:
        return f"a_{i}" if i < 10 else f"a_{{{i}}}"
    return f"a{i}"


def render(p: LaurentPotential, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(p.to_dict())
    idx = range(1, p.ell + 1)
    if fmt == "text":
        linear = " + ".join(_var(i, False) for i in idx)
        den = "*".join(_var(i, False) for i in idx)
        if p.ell_prime == 0:
            return f"{linear} + q/({den})"
        num = " + ".join("*".join(_var(i, False) for i in m) for m in p.numerator)
        return f"{linear} + q*({num})/({den})"
    if fmt == "latex":
        linear = " + ".join(_var(i, True) for i in idx)
        den = "".join(_var(i, True) for i in idx)
        num = " + ".join("".join(_var(i, True) for i in m) for m in p.numerator) or "1"
        return f"{linear} + q\\frac{{{num}}}{{{den}}}"
    raise InvalidParameters(f"unknown format {fmt!r}")


def parse_json(text: str) -> LaurentPotential:
    data = json.loads(text)
    return LaurentPotential(
        ell=int(data["ell"]),
        numerator=tuple(tuple(m) for m in data["numerator"]),
        ell_prime=int(data["ell_prime"]),
        space=data.get("space"),
        word=None if data.get("word") is None else tuple(data["word"]),
    )


def check_word(space: CominusculeSpace, word: Sequence[int]) -> tuple[int, ...]:
    """Validate a user-supplied reduced word for w^P."""
    c, k = space_data(space)
    cd = langlands_dual(c)
    word = tuple(int(x) for x in word)
    if any(not 1 <= x <= cd.rank for x in word):
        raise InvalidParameters(f"letters must lie in 1..{cd.rank}")
    if not is_reduced(cd, word):
        raise InvalidParameters("word is not reduced")
    if element_of(cd, word) != element_of(cd, canonical_wP_word(space)):
        raise InvalidParameters("word does not multiply to w^P")
    return word


def compute_potential(space: CominusculeSpace, word: Sequence[int] | None = None,
                      method: str = "moves") -> LaurentPotential:
    """
    Potential of a catalog space, enumerating the numerator either by quiver
    moves (default) or by the direct subexpression search.
    """
    c, k = space_data(space)
    cd = langlands_dual(c)
    word = canonical_wP_word(space) if word is None else check_word(space, word)
    wd = compute_wprime(cd, k, word)
    if method == "moves":
        quiver = build_quiver(cd, word)
        subsets = [quiver.to_indices(s) for s in enumerate_by_moves(quiver, wd.wprime)]
    elif method == "bruteforce":
        subsets = enumerate_subexpressions_bruteforce(cd, word, wd.wprime, wd.ellprime)
    else:
        raise InvalidParameters(f"unknown method {method!r}")
    p = assemble(len(word), subsets, space.name, word)
    if p.ell_prime != wd.ellprime:
        raise Inconsistency("numerator degree differs from l(w')")
    return p
