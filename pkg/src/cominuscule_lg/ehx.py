"""
The Eguchi-Hori-Xiong potential of a Grassmannian on its ladder of hook
diagrams, and an exact randomized check that it pulls back to the potential
computed from subexpressions.

The hook ``[i, j]`` (partition ``(j, 1, ..., 1)`` of length i) is encoded as
the pair ``(i, j)``; ``EMPTY = (1, 0)`` and ``INFINITY = (n-k, k+1)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import InvalidParameters, SampleDegenerate, ZeroDenominator
from .potential import LaurentPotential, compute_potential, evaluate
from .rootdata import CominusculeSpace

__all__ = [
    "LadderQuiver", "ehx_term", "ehx_potential", "phi", "phi_inverse",
    "pullback_point", "phi_pullback_check",
]

Hook = tuple[int, int]
EMPTY: Hook = (1, 0)


@dataclass(frozen=True)
class LadderQuiver:
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise InvalidParameters("ladder needs 1 <= k <= n-1")

    @property
    def rows(self) -> int:
        return self.n - self.k

    @property
    def infinity(self) -> Hook:
        return (self.rows, self.k + 1)

    @property
    def hooks(self) -> list[Hook]:
        return [(i, j) for i in range(1, self.rows + 1) for j in range(1, self.k + 1)]

    @property
    def vertices(self) -> list[Hook]:
        """Lambda_s together with EMPTY and INFINITY."""
        return [EMPTY] + self.hooks + [self.infinity]

    def arrows(self) -> list[tuple[Hook, Hook]]:
        out = [(EMPTY, (1, 1))]
        for i, j in self.hooks:
            if j < self.k:
                out.append(((i, j), (i, j + 1)))
            if i < self.rows:
                out.append(((i, j), (i + 1, j)))
        out.append(((self.rows, self.k), self.infinity))
        return out

    def coordinate(self, z: Mapping[Hook, Fraction], q, h: Hook) -> Fraction:
        if h == EMPTY:
            return Fraction(1)
        if h == self.infinity:
            return Fraction(q)
        if h in z:
            return Fraction(z[h])
        i, j = h
        if 1 <= i <= self.rows and 1 <= j <= self.k:
            raise InvalidParameters(f"missing coordinate for {list(h)}")
        return Fraction(0)

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n,
                "vertices": [list(v) for v in self.vertices],
                "arrows": [[list(u), list(v)] for u, v in self.arrows()]}


def ehx_term(lq: LadderQuiver, h: Hook, z: Mapping[Hook, Fraction], q) -> Fraction:
    """Sum of the coordinates at the heads of the outgoing arrows over z_h."""
    if h == lq.infinity:
        return Fraction(0)
    i, j = h
    den = lq.coordinate(z, q, h)
    if den == 0:
        raise ZeroDenominator(f"z{list(h)} is zero")
    return (lq.coordinate(z, q, (i + 1, j)) + lq.coordinate(z, q, (i, j + 1))) / den


def ehx_potential(lq: LadderQuiver, z: Mapping[Hook, Fraction], q) -> Fraction:
    return sum((ehx_term(lq, h, z, q) for h in lq.vertices), Fraction(0))


def phi(lq: LadderQuiver, h: Hook) -> int:
    """Index map from Lambda_s* minus {[n-k,k], INFINITY} onto 1..k(n-k)."""
    if h == EMPTY:
        return (lq.rows - 1) * lq.k + 1
    if h == (lq.rows, lq.k) or h == lq.infinity:
        raise InvalidParameters(f"phi is undefined at {list(h)}")
    i, j = h
    return i * lq.k - j + 1


def phi_inverse(lq: LadderQuiver) -> dict[int, Hook]:
    inv = {phi(lq, h): h for h in [EMPTY] + lq.hooks if h != (lq.rows, lq.k)}
    assert sorted(inv) == list(range(1, lq.k * lq.rows + 1))
    return inv


def pullback_point(lq: LadderQuiver, z: Mapping[Hook, Fraction], q) -> list[Fraction]:
    """The toric coordinates a_i = T_{phi^{-1}(i)}."""
    inv = phi_inverse(lq)
    a = [ehx_term(lq, inv[i], z, q) for i in range(1, len(inv) + 1)]
    if any(x == 0 for x in a):
        raise SampleDegenerate("a pulled-back coordinate vanishes")
    return a


def _random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def phi_pullback_check(k: int, n: int, trials: int = 50, seed: int = 0,
                       potential: LaurentPotential | None = None) -> dict:
    """
    Compare the subexpression potential at a = Phi(z) with the EHX potential
    at z, exactly, for `trials` random rational points.
    """
    lq = LadderQuiver(k, n)
    if potential is None:
        potential = compute_potential(CominusculeSpace.grassmannian(k, n))
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < trials:
        z = {h: _random_rational(rng) for h in lq.hooks}
        q = _random_rational(rng)
        try:
            a = pullback_point(lq, z, q)
        except SampleDegenerate:
            continue
        lhs = evaluate(potential, a, q)
        rhs = ehx_potential(lq, z, q)
        if lhs != rhs:
            failures.append({"trial": done, "q": str(q),
                             "z": {f"{i},{j}": str(v) for (i, j), v in z.items()},
                             "potential": str(lhs), "ehx": str(rhs)})
        done += 1
    return {"space": f"Gr({k},{n})", "trials": trials, "seed": seed, "failures": failures}


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2)
