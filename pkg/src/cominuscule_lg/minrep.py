"""
Minuscule representations as weight graphs, and the expansion oracle.

Vertices are identified with their weights (every weight space is a line).
In the chosen basis, f_i sends v_mu to v_{mu - alpha_i} when mu[i] = +1 and
kills it otherwise; e_i is the reverse edge. The oracle expands
``(1 - a_1 f_{r_1}) ... (1 - a_l f_{r_l})`` on a vector and reads off the
coefficient of the lowest weight vector, giving the denominator and the
numerator of the quantum term independently of any subexpression search.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotMinuscule, WeightNotInRep, ZeroVector
from .rootdata import CartanData
from .weyl import Weight, Word

__all__ = [
    "RepGraph", "build_rep", "act_f", "act_e", "act_sbar", "act_sdot",
    "coset_path", "oracle_numerator", "oracle_denominator", "Poly",
]

# sparse polynomial: sorted tuple of variable indices -> integer coefficient
Poly = dict[tuple[int, ...], int]


@dataclass(frozen=True)
class RepGraph:
    cartan: CartanData
    k: int
    weights: tuple[Weight, ...]
    f_edges: dict[tuple[int, int], int] = field(hash=False)
    index: dict[Weight, int] = field(hash=False, repr=False)

    @property
    def highest(self) -> int:
        return 0

    @property
    def lowest(self) -> int:
        return next(v for v, mu in enumerate(self.weights) if all(x <= 0 for x in mu))

    def __len__(self) -> int:
        return len(self.weights)

    def vertex(self, weight: Sequence[int]) -> int:
        try:
            return self.index[tuple(weight)]
        except KeyError:
            raise WeightNotInRep(f"{tuple(weight)} is not a weight of the representation") from None

    def to_dict(self) -> dict:
        return {
            "type": self.cartan.dynkin_type,
            "rank": self.cartan.rank,
            "k": self.k,
            "weights": [list(w) for w in self.weights],
            "f_edges": [[u, i, v] for (u, i), v in sorted(self.f_edges.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def build_rep(c_dual: CartanData, k: int) -> RepGraph:
    """Breadth-first search from omega_k along f-edges."""
    n = c_dual.rank
    top = tuple(1 if i == k else 0 for i in range(1, n + 1))
    weights = [top]
    index = {top: 0}
    edges: dict[tuple[int, int], int] = {}
    queue = deque([top])
    while queue:
        mu = queue.popleft()
        if any(x not in (-1, 0, 1) for x in mu):
            raise NotMinuscule(f"weight {mu} has a pairing outside {{-1, 0, 1}}")
        u = index[mu]
        for i in range(1, n + 1):
            if mu[i - 1] != 1:
                continue
            nu = tuple(x - a for x, a in zip(mu, c_dual.simple_root(i)))
            if nu not in index:
                index[nu] = len(weights)
                weights.append(nu)
                queue.append(nu)
            edges[(u, i)] = index[nu]
    return RepGraph(c_dual, k, tuple(weights), edges, index)


def act_f(rep: RepGraph, i: int, v: int) -> tuple[int, int] | None:
    """f_i on basis vector v: (target, sign) or None for zero."""
    t = rep.f_edges.get((v, i))
    return None if t is None else (t, 1)


def act_e(rep: RepGraph, i: int, v: int) -> tuple[int, int] | None:
    mu = rep.weights[v]
    if mu[i - 1] != -1:
        return None
    nu = tuple(x + a for x, a in zip(mu, rep.cartan.simple_root(i)))
    return rep.index[nu], 1


def act_sbar(rep: RepGraph, i: int, v: int) -> tuple[int, int]:
    c = rep.weights[v][i - 1]
    if c == 1:
        return act_f(rep, i, v)
    if c == -1:
        t, _ = act_e(rep, i, v)
        return t, -1
    return v, 1


def act_sdot(rep: RepGraph, i: int, v: int) -> tuple[int, int]:
    c = rep.weights[v][i - 1]
    if c == -1:
        return act_e(rep, i, v)
    if c == 1:
        t, _ = act_f(rep, i, v)
        return t, -1
    return v, 1


def coset_path(rep: RepGraph, target_weight: Sequence[int]) -> Word:
    """
    Reduced word of the minimal coset representative sending omega_k to the
    target weight, read off a shortest f-path from the highest vertex.
    """
    goal = rep.vertex(target_weight)
    parent: dict[int, tuple[int, int] | None] = {rep.highest: None}
    queue = deque([rep.highest])
    while queue:
        u = queue.popleft()
        if u == goal:
            break
        for i in range(1, rep.cartan.rank + 1):
            t = rep.f_edges.get((u, i))
            if t is not None and t not in parent:
                parent[t] = (u, i)
                queue.append(t)
    applied = []
    v = goal
    while parent[v] is not None:
        u, i = parent[v]
        applied.append(i)
        v = u
    # applied runs from the target back to the top, i.e. leftmost letter first
    return tuple(applied)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _expand(rep: RepGraph, start: dict[int, dict[int, int]], wP_word: Sequence[int]) -> Poly:
    # factors act right to left: (1 - a_l f_{r_l}) first
    vec = start
    for pos in range(len(wP_word), 0, -1):
        r = wP_word[pos - 1]
        bit = 1 << (pos - 1)
        nxt: dict[int, dict[int, int]] = {v: dict(p) for v, p in vec.items()}
        for v, poly in vec.items():
            t = rep.f_edges.get((v, r))
            if t is None:
                continue
            dest = nxt.setdefault(t, {})
            for mono, coeff in poly.items():
                m2 = mono | bit
                dest[m2] = dest.get(m2, 0) - coeff
                if dest[m2] == 0:
                    del dest[m2]
        vec = nxt
    low = vec.get(rep.lowest, {})
    return {_mask_to_tuple(m): c for m, c in sorted(low.items()) if c}


def oracle_denominator(rep: RepGraph, wP_word: Sequence[int]) -> Poly:
    return _expand(rep, {rep.highest: {0: 1}}, wP_word)


def oracle_numerator(rep: RepGraph, wP_word: Sequence[int], wPprime_word: Sequence[int]) -> Poly:
    """
    Lowest-weight coefficient of u_-^{-1} applied to
    (-1)^{l''+1} f_{j_1} ... f_{j_l''} v^+.
    """
    v = rep.highest
    for i in reversed(tuple(wPprime_word)):
        step = act_f(rep, i, v)
        if step is None:
            raise ZeroVector(f"word {tuple(wPprime_word)} annihilates the highest weight vector")
        v = step[0]
    sign = -1 if len(wPprime_word) % 2 == 0 else 1
    return _expand(rep, {v: {0: sign}}, wP_word)
