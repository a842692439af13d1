"""
Cartan matrices, Langlands duality and the catalog of cominuscule spaces.

Conventions: nodes are numbered 1..n as in Bourbaki (the E-type branch node
is 2), and ``cartan[i-1][j-1] = <alpha_j, alpha_i^vee>``, so the simple root
alpha_j written in fundamental-weight coordinates is column j.

>>> cartan_matrix("A", 2).cartan
((2, -1), (-1, 2))
>>> langlands_dual(cartan_matrix("B", 3)).dynkin_type
'C'
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import InvalidParameters, UnsupportedType

__all__ = [
    "CartanData", "CominusculeSpace", "cartan_matrix", "langlands_dual",
    "space_data", "is_cominuscule", "catalog_spaces", "FAMILIES", "TYPES",
]

TYPES = ("A", "B", "C", "D", "E6", "E7")

_E_EDGES = [(1, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 7)]


@dataclass(frozen=True)
class CartanData:
    dynkin_type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.rank
        if len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise InvalidParameters("Cartan matrix must be rank x rank")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise InvalidParameters("diagonal entries must be 2")
            for j in range(n):
                if i != j and self.cartan[i][j] not in (0, -1, -2):
                    raise InvalidParameters(f"bad off-diagonal entry at {(i + 1, j + 1)}")
                if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                    raise InvalidParameters("zero pattern must be symmetric")

    def a(self, i: int, j: int) -> int:
        """Cartan integer with 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def simple_root(self, j: int) -> tuple[int, ...]:
        """alpha_j in fundamental-weight coordinates (column j)."""
        return tuple(row[j - 1] for row in self.cartan)

    def commute(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] == 0

    @property
    def name(self) -> str:
        return self.dynkin_type if self.dynkin_type.startswith("E") else f"{self.dynkin_type}{self.rank}"

    def to_dict(self, k: int | None = None) -> dict[str, Any]:
        out: dict[str, Any] = {
            "type": self.dynkin_type,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
        }
        if k is not None:
            out["k"] = k
        return out

    def to_json(self, k: int | None = None) -> str:
        return json.dumps(self.to_dict(k))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CartanData:
        """Rebuild from JSON data; the matrix must match the catalog entry."""
        ref = cartan_matrix(data["type"], data["rank"])
        given = tuple(tuple(int(x) for x in row) for row in data["cartan"])
        if given != ref.cartan:
            raise InvalidParameters(f"matrix does not match catalog {ref.name}")
        return ref


def _edges(dynkin_type: str, n: int) -> list[tuple[int, int]]:
    if dynkin_type in ("A", "B", "C"):
        return [(i, i + 1) for i in range(1, n)]
    if dynkin_type == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    return [e for e in _E_EDGES if max(e) <= n]


def cartan_matrix(dynkin_type: str, rank: int) -> CartanData:
    dynkin_type = dynkin_type.upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E6": rank == 6,
        "E7": rank == 7,
    }
    if not valid.get(dynkin_type, False):
        raise UnsupportedType(f"unsupported type {dynkin_type} of rank {rank}")
    n = rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(dynkin_type, n):
        m[i - 1][j - 1] = m[j - 1][i - 1] = -1
    # alpha_n is short in B_n and long in C_n
    if dynkin_type == "B":
        m[n - 1][n - 2] = -2
    elif dynkin_type == "C":
        m[n - 2][n - 1] = -2
    return CartanData(dynkin_type, rank, tuple(tuple(r) for r in m))


def langlands_dual(c: CartanData) -> CartanData:
    swap = {"B": "C", "C": "B"}
    transposed = tuple(zip(*c.cartan))
    return CartanData(swap.get(c.dynkin_type, c.dynkin_type), c.rank, transposed)


FAMILIES = ("gr", "odd_quadric", "even_quadric", "lg", "og", "cayley", "freudenthal")


@dataclass(frozen=True)
class CominusculeSpace:
    """
    A cominuscule space G/P_k from the standard classification.

    Quadrics are parametrized by their dimension ``d``; ``n`` is the rank
    parameter of the remaining families (``Gr(k, n)``, ``LG(n, 2n)``,
    ``OG(n, 2n)``).
    """
    family: str
    n: int = 0
    k: int = 0

    def __post_init__(self):
        f, n, k = self.family, self.n, self.k
        if f not in FAMILIES:
            raise InvalidParameters(f"unknown family {f!r}")
        if f == "gr" and not (n >= 2 and 1 <= k <= n - 1):
            raise InvalidParameters("Grassmannian needs 1 <= k <= n-1")
        if f == "odd_quadric" and not (n >= 3 and n % 2 == 1):
            raise InvalidParameters("odd quadric needs odd dimension >= 3")
        if f == "even_quadric" and not (n >= 4 and n % 2 == 0):
            raise InvalidParameters("even quadric needs even dimension >= 4")
        if f == "lg" and n < 2:
            raise InvalidParameters("LG(n, 2n) needs n >= 2")
        if f == "og" and n < 3:
            raise InvalidParameters("OG(n, 2n) needs n >= 3")

    @classmethod
    def grassmannian(cls, k: int, n: int) -> CominusculeSpace:
        return cls("gr", n, k)

    @classmethod
    def quadric(cls, d: int) -> CominusculeSpace:
        if d < 3:
            raise InvalidParameters("quadric dimension must be >= 3")
        return cls("odd_quadric" if d % 2 else "even_quadric", d)

    @classmethod
    def lagrangian_grassmannian(cls, n: int) -> CominusculeSpace:
        return cls("lg", n)

    @classmethod
    def orthogonal_grassmannian(cls, n: int) -> CominusculeSpace:
        return cls("og", n)

    @classmethod
    def cayley_plane(cls) -> CominusculeSpace:
        return cls("cayley")

    @classmethod
    def freudenthal(cls) -> CominusculeSpace:
        return cls("freudenthal")

    @property
    def name(self) -> str:
        f, n, k = self.family, self.n, self.k
        return {
            "gr": f"Gr({k},{n})",
            "odd_quadric": f"Q_{n}",
            "even_quadric": f"Q_{n}",
            "lg": f"LG({n},{2 * n})",
            "og": f"OG({n},{2 * n})",
            "cayley": "OP2",
            "freudenthal": "E7/P7",
        }[f]

    @property
    def dimension(self) -> int:
        f, n, k = self.family, self.n, self.k
        if f == "gr":
            return k * (n - k)
        if f in ("odd_quadric", "even_quadric"):
            return n
        if f == "lg":
            return n * (n + 1) // 2
        if f == "og":
            return n * (n - 1) // 2
        return 16 if f == "cayley" else 27


def space_data(s: CominusculeSpace) -> tuple[CartanData, int]:
    """Group Cartan data (not the dual) and the marked node k."""
    f, n, k = s.family, s.n, s.k
    if f == "gr":
        return cartan_matrix("A", n - 1), k
    if f == "odd_quadric":
        return cartan_matrix("B", (n + 1) // 2), 1
    if f == "even_quadric":
        return cartan_matrix("D", (n + 2) // 2), 1
    if f == "lg":
        return cartan_matrix("C", n), n
    if f == "og":
        return cartan_matrix("D", n), n
    if f == "cayley":
        return cartan_matrix("E6", 6), 6
    if f == "freudenthal":
        return cartan_matrix("E7", 7), 7
    raise InvalidParameters(f)


# cominuscule (type, k) pairs from the standard classification
def is_cominuscule(dynkin_type: str, rank: int, k: int) -> bool:
    if dynkin_type == "A":
        return 1 <= k <= rank
    if dynkin_type == "B":
        return k == 1
    if dynkin_type == "C":
        return k == rank
    if dynkin_type == "D":
        return k in (1, rank - 1, rank)
    if dynkin_type == "E6":
        return k in (1, 6)
    if dynkin_type == "E7":
        return k == 7
    return False


def catalog_spaces(max_gr: int = 8, max_quadric: int = 10, max_lg_og: int = 6) -> list[CominusculeSpace]:
    """Every catalog space up to the given sizes, in a fixed order."""
    out = [CominusculeSpace.grassmannian(k, n) for n in range(2, max_gr + 1) for k in range(1, n)]
    out += [CominusculeSpace.quadric(d) for d in range(3, max_quadric + 1)]
    out += [CominusculeSpace.lagrangian_grassmannian(n) for n in range(2, max_lg_og + 1)]
    out += [CominusculeSpace.orthogonal_grassmannian(n) for n in range(3, max_lg_og + 1)]
    out += [CominusculeSpace.cayley_plane(), CominusculeSpace.freudenthal()]
    return out
