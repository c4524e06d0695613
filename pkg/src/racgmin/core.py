"""Right-angled Coxeter presentations and their word problem.

A presentation is an ordered generator list plus the set of commuting pairs;
every other pair of distinct generators generates an infinite dihedral group.
Group elements are represented by ShortLex normal forms: tuples of generator
indices, shortest first and lexicographically least by generator order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

from . import kernels

NormalForm = tuple[int, ...]
WordLike = Union[str, Sequence[Union[int, str]]]
SubsetLike = Union[str, Iterable[Union[int, str]]]

MAX_GENERATORS = 62
INFINITY = math.inf


class PresentationError(ValueError):
    """Malformed presentation, unknown generator, or bad word."""


@dataclass(frozen=True)
class CoxeterPresentation:
    """A right-angled Coxeter system given by its commutation graph.

    ``generators`` fixes the total order used by normal forms. ``edges`` is
    the sorted tuple of index pairs ``(i, j)`` with ``i < j`` whose product
    has order 2.
    """

    generators: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    comm: np.ndarray = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise PresentationError("a presentation needs at least one generator")
        if len(gens) > MAX_GENERATORS:
            raise PresentationError(f"at most {MAX_GENERATORS} generators are supported")
        for g in gens:
            if not isinstance(g, str) or not g or g != g.strip() or len(g.split()) != 1:
                raise PresentationError(f"invalid generator name {g!r}")
        if len(set(gens)) != len(gens):
            dupes = sorted({g for g in gens if gens.count(g) > 1})
            raise PresentationError(f"duplicate generator names: {', '.join(dupes)}")
        n = len(gens)
        edges = set()
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise PresentationError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise PresentationError(f"generator {gens[i]!r} cannot commute-pair with itself")
            edges.add((min(i, j), max(i, j)))
        comm = np.zeros((n, n), dtype=np.bool_)
        for i, j in edges:
            comm[i, j] = comm[j, i] = True
        comm.setflags(write=False)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "comm", comm)
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(gens)})

    @classmethod
    def from_pairs(cls, generators: Sequence[str], commuting_pairs: Iterable[Sequence[str]]):
        gens = tuple(generators)
        index = {g: i for i, g in enumerate(gens)}
        edges = []
        seen = set()
        for pair in commuting_pairs:
            pair = tuple(pair)
            if len(pair) != 2:
                raise PresentationError(f"commuting pair must have two names, got {list(pair)}")
            unknown = [g for g in pair if g not in index]
            if unknown:
                raise PresentationError(f"unknown generator(s) in pair {list(pair)}: {', '.join(map(str, unknown))}")
            i, j = index[pair[0]], index[pair[1]]
            if i == j:
                raise PresentationError(f"self-pair {list(pair)} is not allowed")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise PresentationError(f"duplicate commuting pair {list(pair)}")
            seen.add(key)
            edges.append(key)
        return cls(gens, tuple(edges))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, g: Union[int, str]) -> int:
        if isinstance(g, (int, np.integer)) and not isinstance(g, bool):
            if 0 <= g < self.rank:
                return int(g)
            raise PresentationError(f"generator index {g} out of range")
        try:
            return self._index[g]
        except (KeyError, TypeError):
            raise PresentationError(f"unknown generator {g!r}") from None

    def word(self, w: WordLike) -> tuple[int, ...]:
        """Letters of ``w`` as indices; strings are split on whitespace."""
        if isinstance(w, str):
            w = w.split()
        unknown = [g for g in w if isinstance(g, str) and g not in self._index]
        if unknown:
            raise PresentationError(f"unknown generator(s): {', '.join(dict.fromkeys(unknown))}")
        return tuple(self.index(g) for g in w)

    def subset(self, t: SubsetLike) -> frozenset[int]:
        return frozenset(self.word(t) if isinstance(t, str) else (self.index(g) for g in t))

    def format(self, w: Iterable[int]) -> str:
        """Space-separated names; the empty word prints as ``ε``."""
        names = [self.generators[i] for i in w]
        return " ".join(names) if names else "ε"

    def names(self, t: Iterable[int]) -> list[str]:
        return [self.generators[i] for i in sorted(t)]

    def commutes(self, i: int, j: int) -> bool:
        return bool(self.comm[i, j])

    def mask(self, t: Iterable[int]) -> int:
        m = 0
        for i in t:
            m |= 1 << i
        return m

    def unmask(self, m: int) -> frozenset[int]:
        return frozenset(i for i in range(self.rank) if m >> i & 1)

    def induced(self, t: SubsetLike) -> "CoxeterPresentation":
        """The sub-presentation on ``t``, keeping the generator order."""
        keep = sorted(self.subset(t))
        pos = {g: k for k, g in enumerate(keep)}
        edges = tuple((pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos)
        return CoxeterPresentation(tuple(self.generators[i] for i in keep), edges)


def order_product(p: CoxeterPresentation, s, t):
    """Order of ``s t``: 1, 2 or ``math.inf``."""
    i, j = p.index(s), p.index(t)
    if i == j:
        return 1
    return 2 if p.comm[i, j] else INFINITY


def _as_array(letters) -> np.ndarray:
    return np.asarray(letters, dtype=kernels.WORD_DTYPE).reshape(-1)


def reduce(p: CoxeterPresentation, w: WordLike) -> NormalForm:
    """ShortLex normal form of the element spelled by ``w``."""
    letters = p.word(w)
    if not letters:
        return ()
    return tuple(int(c) for c in kernels.normal_form(_as_array(letters), p.comm))


def length(p: CoxeterPresentation, w: WordLike) -> int:
    return len(reduce(p, w))


def multiply(p: CoxeterPresentation, u: WordLike, v: WordLike) -> NormalForm:
    return reduce(p, p.word(u) + p.word(v))


def invert(p: CoxeterPresentation, u: WordLike) -> NormalForm:
    # generators are involutions
    return reduce(p, p.word(u)[::-1])


def equal(p: CoxeterPresentation, w1: WordLike, w2: WordLike) -> bool:
    return reduce(p, w1) == reduce(p, w2)


def distance(p: CoxeterPresentation, u: WordLike, v: WordLike) -> int:
    """Word-metric distance ``len(u^-1 v)``."""
    return len(reduce(p, p.word(u)[::-1] + p.word(v)))


def is_clique(p: CoxeterPresentation, t: Iterable[int]) -> bool:
    return all(p.comm[i, j] for i, j in combinations(sorted(set(t)), 2))


def generator_product(p: CoxeterPresentation, t: Iterable[int]) -> NormalForm:
    """Normal form of the product of the letters of ``t`` in generator order."""
    return reduce(p, sorted(set(t)))
