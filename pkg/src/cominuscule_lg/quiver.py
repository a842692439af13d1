"""
The quiver attached to a fixed reduced word for w^P, and the enumeration of
subexpressions of w' by local moves on vertex subsets.

A vertex ``(beta, j)`` is the j-th occurrence of s_beta in the word; its
position is ``J(beta, j)`` (1-based). Subsets are tuples of vertices ordered
by position.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidSubset
from .rootdata import CartanData
from .weyl import WeylElement, apply_reflection, element_of

__all__ = [
    "Quiver", "build_quiver", "lex_minimal_subset", "legal_moves",
    "enumerate_by_moves",
]

Vertex = tuple[int, int]
QuiverSubset = tuple[Vertex, ...]


@dataclass(frozen=True)
class Quiver:
    cartan: CartanData
    word: tuple[int, ...]
    vertices: tuple[Vertex, ...]  # in position order
    position: dict[Vertex, int] = field(hash=False)
    counts: dict[int, int] = field(hash=False)
    arrows: frozenset[tuple[Vertex, Vertex]]

    @property
    def infinity(self) -> int:
        return len(self.word) + 1

    def J(self, beta: int, j: int) -> int:
        """Position of (beta, j), with J(beta, 0) = 0 and J(beta, m+1) past the end."""
        if j == 0:
            return 0
        if j == self.counts.get(beta, 0) + 1:
            return self.infinity
        return self.position[(beta, j)]

    def vertex_at(self, pos: int) -> Vertex:
        return self.vertices[pos - 1]

    def to_indices(self, subset: Iterable[Vertex]) -> tuple[int, ...]:
        return tuple(sorted(self.position[v] for v in subset))

    def from_indices(self, indices: Iterable[int]) -> QuiverSubset:
        return tuple(self.vertex_at(p) for p in sorted(indices))

    def to_dict(self) -> dict:
        return {
            "word": list(self.word),
            "vertices": [{"beta": b, "j": j, "position": self.position[(b, j)]}
                         for b, j in self.vertices],
            "arrows": [[list(u), list(v)] for u, v in sorted(self.arrows)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "Q", marked: Iterable[Vertex] = ()) -> str:
        marked = set(marked)
        lines = [f'digraph "{name}" {{']
        for b, j in self.vertices:
            pos = self.position[(b, j)]
            style = ', color=red, penwidth=2' if (b, j) in marked else ''
            lines.append(f'  "{b},{j}" [label="({b},{j})\\nJ={pos}"{style}];')
        for u, v in sorted(self.arrows):
            lines.append(f'  "{u[0]},{u[1]}" -> "{v[0]},{v[1]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_quiver(c_dual: CartanData, wP_word: Sequence[int]) -> Quiver:
    word = tuple(wP_word)
    counts: dict[int, int] = {}
    vertices = []
    position = {}
    for pos, b in enumerate(word, 1):
        counts[b] = counts.get(b, 0) + 1
        v = (b, counts[b])
        vertices.append(v)
        position[v] = pos
    q = Quiver(c_dual, word, tuple(vertices), position, counts, frozenset())
    arrows = set()
    for b, j in vertices:
        for b2, j2 in vertices:
            if b == b2 or c_dual.commute(b, b2):
                continue
            if q.J(b2, j2 - 1) < q.J(b, j) < q.J(b2, j2) < q.J(b, j + 1):
                arrows.add(((b, j), (b2, j2)))
    return Quiver(c_dual, word, tuple(vertices), position, counts, frozenset(arrows))


def _check_subset(quiver: Quiver, subset: Sequence[Vertex], wprime: WeylElement | None):
    try:
        positions = [quiver.position[tuple(v)] for v in subset]
    except KeyError as exc:
        raise InvalidSubset(f"{exc.args[0]} is not a vertex of the quiver") from None
    if any(a >= b for a, b in zip(positions, positions[1:])):
        raise InvalidSubset("vertices must have strictly increasing positions")
    if wprime is not None:
        letters = [quiver.word[p - 1] for p in positions]
        if element_of(quiver.cartan, letters) != wprime or \
                element_of(quiver.cartan, letters).length() != len(letters):
            raise InvalidSubset("subset is not a reduced subexpression for w'")
    return positions


def lex_minimal_subset(quiver: Quiver, wprime: WeylElement) -> QuiverSubset:
    """Greedy choice of the smallest next position that can still be completed."""
    c = quiver.cartan
    word = quiver.word
    ell = len(word)
    identity = (1,) * c.rank

    @lru_cache(maxsize=None)
    def completable(pos: int, v: tuple[int, ...]) -> bool:
        # can the remainder v be produced from letters after `pos`?
        if v == identity:
            return True
        for p in range(pos + 1, ell + 1):
            r = word[p - 1]
            if v[r - 1] < 0 and completable(p, apply_reflection(c, r, v)):
                return True
        return False

    v = wprime.rho_image
    chosen = []
    last = 0
    while v != identity:
        for p in range(last + 1, ell + 1):
            r = word[p - 1]
            if v[r - 1] < 0:
                v2 = apply_reflection(c, r, v)
                if completable(p, v2):
                    chosen.append(p)
                    v, last = v2, p
                    break
        else:
            raise InvalidSubset("w' has no subexpression in the word")
    return quiver.from_indices(chosen)


def legal_moves(quiver: Quiver, subset: Sequence[Vertex],
                wprime: WeylElement | None = None) -> set[QuiverSubset]:
    """
    Subsets reachable by sliding one selected vertex (beta, j) to another
    occurrence (beta, j~), provided every selected vertex strictly between
    them commutes with s_beta. With nothing in between this is the plain
    slide; otherwise the letter is commuted past the intermediate ones.
    """
    positions = _check_subset(quiver, subset, wprime)
    chosen = set(positions)
    c = quiver.cartan
    out = set()
    for p in positions:
        beta = quiver.word[p - 1]
        for j in range(1, quiver.counts[beta] + 1):
            p2 = quiver.position[(beta, j)]
            if p2 in chosen:
                continue
            lo, hi = min(p, p2), max(p, p2)
            between = (x for x in positions if lo < x < hi)
            if all(c.commute(beta, quiver.word[x - 1]) for x in between):
                out.add(quiver.from_indices(chosen - {p} | {p2}))
    return out


def enumerate_by_moves(quiver: Quiver, wprime: WeylElement) -> list[QuiverSubset]:
    """Closure of the lexicographically minimal subset under legal moves."""
    start = lex_minimal_subset(quiver, wprime)
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for t in legal_moves(quiver, s):
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return sorted(seen, key=quiver.to_indices)
