"""
Weyl group words and elements.

An element is stored as the image of rho = (1, ..., 1) (fundamental-weight
coordinates); rho is regular, so the image determines the element. Words are
tuples of 1-based node indices read left to right, ``w = s_{i_1} ... s_{i_j}``.

>>> from cominuscule_lg.rootdata import cartan_matrix
>>> a2 = cartan_matrix("A", 2)
>>> longest_element(a2, {1, 2})
(1, 2, 1)
>>> element_of(a2, (1, 1)).is_identity
True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import Inconsistency, IndexOutOfRange, InvalidParameters
from .rootdata import CartanData, CominusculeSpace

__all__ = [
    "WeylElement", "WPrimeData", "apply_reflection", "element_of", "length",
    "is_reduced", "longest_element", "canonical_wP_word", "minimal_coset_word",
    "compute_wprime", "enumerate_subexpressions_bruteforce", "subword_product",
]

Weight = tuple[int, ...]
Word = tuple[int, ...]


def apply_reflection(c: CartanData, i: int, mu: Sequence[int]) -> Weight:
    """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    if not 1 <= i <= c.rank:
        raise IndexOutOfRange(f"node {i} outside 1..{c.rank}")
    m = mu[i - 1]
    if m == 0:
        return tuple(mu)
    col = i - 1
    return tuple(x - m * row[col] for x, row in zip(mu, c.cartan))


@dataclass(frozen=True)
class WeylElement:
    cartan: CartanData
    rho_image: Weight

    @property
    def is_identity(self) -> bool:
        return all(x == 1 for x in self.rho_image)

    def length(self) -> int:
        return _length_from_image(self.cartan, self.rho_image)

    def act(self, mu: Sequence[int]) -> Weight:
        """Apply the element to an arbitrary weight via a reduced word."""
        out = tuple(mu)
        for i in reversed(self.reduced_word()):
            out = apply_reflection(self.cartan, i, out)
        return out

    def reduced_word(self) -> Word:
        """A reduced word, choosing the smallest descent first."""
        word = []
        mu = self.rho_image
        while True:
            i = next((j for j, x in enumerate(mu, 1) if x < 0), None)
            if i is None:
                return tuple(word)
            word.append(i)
            mu = apply_reflection(self.cartan, i, mu)


def _length_from_image(c: CartanData, mu: Weight) -> int:
    # each left descent shortens the element by one
    steps = 0
    while True:
        i = next((j for j, x in enumerate(mu, 1) if x < 0), None)
        if i is None:
            return steps
        mu = apply_reflection(c, i, mu)
        steps += 1


def _image(c: CartanData, word: Iterable[int], start: Weight | None = None) -> Weight:
    mu = start if start is not None else (1,) * c.rank
    for i in reversed(tuple(word)):
        mu = apply_reflection(c, i, mu)
    return mu


def element_of(c: CartanData, word: Sequence[int]) -> WeylElement:
    return WeylElement(c, _image(c, word))


def length(e: WeylElement) -> int:
    return e.length()


def is_reduced(c: CartanData, word: Sequence[int]) -> bool:
    return element_of(c, word).length() == len(word)


def subword_product(c: CartanData, word: Sequence[int], positions: Iterable[int]) -> WeylElement:
    """Element of the subword picked out by 1-based positions."""
    return element_of(c, [word[p - 1] for p in positions])


def longest_element(c: CartanData, subset: Iterable[int]) -> Word:
    subset = sorted(set(subset))
    for i in subset:
        if not 1 <= i <= c.rank:
            raise IndexOutOfRange(f"node {i} outside 1..{c.rank}")
    mu = (1,) * c.rank
    word = []
    while True:
        i = next((j for j in subset if mu[j - 1] > 0), None)
        if i is None:
            break
        mu = apply_reflection(c, i, mu)
        word.append(i)
    # the letters were applied on the left, so the element is the reversed
    # word; the longest element is an involution, so either reading works
    return tuple(reversed(word))


_CAYLEY = (1, 3, 4, 2, 5, 6, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6)
_FREUDENTHAL = (7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 1, 3, 4, 2, 5, 6, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6, 7)


def _og_word(n: int) -> Word:
    # blocks (s_{n-1-b} ... s_{n-2}) separated by s_n / s_{n-1}, alternating
    # so that the final letter is s_n
    def tail(b: int) -> int:
        return n if (n - 2 - b) % 2 == 0 else n - 1

    word = [tail(0)]
    for b in range(1, n - 1):
        word.extend(range(n - 1 - b, n - 1))
        word.append(tail(b))
    return tuple(word)


def canonical_wP_word(s: CominusculeSpace) -> Word:
    """The fixed reduced word for w^P used to label the toric coordinates."""
    f, n, k = s.family, s.n, s.k
    if f == "gr":
        return tuple(i for b in range(n - k) for i in range(n - k - b, n - b))
    if f == "odd_quadric":
        r = (n + 1) // 2
        return tuple(range(1, r)) + (r,) + tuple(range(r - 1, 0, -1))
    if f == "even_quadric":
        r = (n + 2) // 2
        return tuple(range(1, r - 1)) + (r - 1, r) + tuple(range(r - 2, 0, -1))
    if f == "lg":
        return tuple(i for b in range(n) for i in range(n - b, n + 1))
    if f == "og":
        return _og_word(n)
    if f == "cayley":
        return _CAYLEY
    if f == "freudenthal":
        return _FREUDENTHAL
    raise InvalidParameters(f)


def minimal_coset_word(c: CartanData, k: int, weight: Sequence[int]) -> Word:
    """
    Reduced word for the minimal coset representative w in W/W_P with
    w(omega_k) = weight, found by raising the weight back to omega_k.
    """
    mu = tuple(weight)
    target = tuple(1 if i == k else 0 for i in range(1, c.rank + 1))
    word = []
    while mu != target:
        i = next((j for j, x in enumerate(mu, 1) if x < 0), None)
        if i is None:
            raise InvalidParameters(f"{weight} is not in the orbit of omega_{k}")
        word.append(i)
        mu = apply_reflection(c, i, mu)
    return tuple(word)


@dataclass(frozen=True)
class WPrimeData:
    wprime: WeylElement
    ellprime: int
    wPprime_word: Word
    wop_word: Word


def compute_wprime(c_dual: CartanData, k: int, wP_word: Sequence[int]) -> WPrimeData:
    """
    w' = w^P (w_P')^{-1}, where w_P' is the minimal representative of the
    coset w_{o,P} s_k W_P.
    """
    ell = len(wP_word)
    if not is_reduced(c_dual, wP_word):
        raise InvalidParameters("word for w^P is not reduced")
    wop = longest_element(c_dual, [i for i in range(1, c_dual.rank + 1) if i != k])
    omega = tuple(1 if i == k else 0 for i in range(1, c_dual.rank + 1))
    target = _image(c_dual, wop + (k,), omega)
    wpp_word = minimal_coset_word(c_dual, k, target)
    wprime = WeylElement(c_dual, _image(c_dual, tuple(wP_word) + tuple(reversed(wpp_word))))
    ellprime = wprime.length()
    if ellprime + len(wpp_word) != ell:
        raise Inconsistency(
            f"l(w') + l(w_P') = {ellprime} + {len(wpp_word)} != l(w^P) = {ell}")
    return WPrimeData(wprime, ellprime, wpp_word, wop)


def enumerate_subexpressions_bruteforce(
    c_dual: CartanData, wP_word: Sequence[int], wprime: WeylElement, ellprime: int,
) -> list[tuple[int, ...]]:
    """
    All increasing position tuples whose subword is a reduced word for w'.

    Dynamic programme over positions; the state is the element still to be
    produced, u^{-1} w', where u is the product of the letters chosen so far.
    Taking letter r is allowed only when it is a left descent of that
    remainder, so every kept path is reduced.
    """
    identity = (1,) * c_dual.rank
    states: dict[Weight, list[tuple[int, ...]]] = {wprime.rho_image: [()]}
    ell = len(wP_word)
    for pos, r in enumerate(wP_word, 1):
        nxt: dict[Weight, list[tuple[int, ...]]] = {}
        for v, seqs in states.items():
            nxt.setdefault(v, []).extend(seqs)
            if v[r - 1] < 0:
                v2 = apply_reflection(c_dual, r, v)
                nxt.setdefault(v2, []).extend(s + (pos,) for s in seqs)
        # drop remainders too long for the letters left
        left = ell - pos
        states = {v: s for v, s in nxt.items() if _length_from_image(c_dual, v) <= left}
    out = states.get(identity, [])
    if any(len(s) != ellprime for s in out):
        raise Inconsistency("subexpression length differs from l(w')")
    return sorted(out)
