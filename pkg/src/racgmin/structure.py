"""Graph structure of a presentation: cliques, irreducible factors, verdicts.

In the right-angled setting a subset is spherical exactly when it is a
clique of the commutation graph, and the irreducible factors are the
connected components of the complementary graph whose edges are the pairs
of infinite order (the "infinity graph").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .core import CoxeterPresentation, SubsetLike, is_clique

EMPTY_BOUNDARY = "empty-boundary"
MINIMAL = "minimal"
NOT_MINIMAL = "not-minimal"


def is_spherical(p: CoxeterPresentation, t: SubsetLike) -> bool:
    return is_clique(p, p.subset(t))


def is_infinite(p: CoxeterPresentation, t: SubsetLike) -> bool:
    return not is_spherical(p, t)


def _neighbours(p: CoxeterPresentation) -> list[int]:
    return [p.mask(j for j in range(p.rank) if p.comm[i, j]) for i in range(p.rank)]


def maximal_spherical_subsets(p: CoxeterPresentation) -> list[frozenset[int]]:
    """Maximal cliques of the commutation graph, sorted lexicographically.

    Bron-Kerbosch with Tomita pivoting over bitmasks.
    """
    nbr = _neighbours(p)
    found = []

    def expand(r, cand, excl):
        if not cand and not excl:
            found.append(r)
            return
        # pivot maximizing |cand & N(u)| prunes the most branches
        u = max(_bits(cand | excl), key=lambda v: bin(cand & nbr[v]).count("1"))
        for v in _bits(cand & ~nbr[u]):
            expand(r | 1 << v, cand & nbr[v], excl & nbr[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << p.rank) - 1, 0)
    cliques = [p.unmask(m) for m in found]
    return sorted(cliques, key=lambda c: sorted(c))


def _bits(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Decomposition:
    """Irreducible factors of ``W``.

    ``components`` are ordered by their least generator; ``s_tilde`` is the
    union of components with at least two generators (the infinite factors)
    and ``finite_part`` the union of the singletons.
    """

    components: tuple[frozenset[int], ...]
    s_tilde: frozenset[int]
    finite_part: frozenset[int]

    @property
    def infinite_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.components if len(c) >= 2)


def infinity_graph_components(p: CoxeterPresentation, t: Optional[SubsetLike] = None) -> list[frozenset[int]]:
    verts = sorted(p.subset(t)) if t is not None else list(range(p.rank))
    left = set(verts)
    comps = []
    for v in verts:
        if v not in left:
            continue
        stack, comp = [v], {v}
        left.discard(v)
        while stack:
            u = stack.pop()
            for w in list(left):
                if not p.comm[u, w]:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def irreducible_components(p: CoxeterPresentation) -> Decomposition:
    comps = tuple(infinity_graph_components(p))
    s_tilde = frozenset().union(*(c for c in comps if len(c) >= 2))
    finite = frozenset().union(*(c for c in comps if len(c) == 1))
    return Decomposition(comps, s_tilde, finite)


@dataclass(frozen=True)
class MinimalityVerdict:
    outcome: Literal["minimal", "not-minimal", "empty-boundary"]
    splitting: Optional[tuple[frozenset[int], frozenset[int]]] = None

    @property
    def minimal(self) -> bool:
        return self.outcome == MINIMAL


def boundary_minimal(p: CoxeterPresentation) -> MinimalityVerdict:
    """Decide minimality of the boundary from the irreducible decomposition.

    The boundary is minimal exactly when the infinite factors form a single
    irreducible piece. A finite group has empty boundary and gets its own
    verdict. For a reducible piece the splitting is the first infinite
    factor against the union of the others.
    """
    infinite = irreducible_components(p).infinite_components
    if not infinite:
        return MinimalityVerdict(EMPTY_BOUNDARY)
    if len(infinite) == 1:
        return MinimalityVerdict(MINIMAL)
    first, rest = infinite[0], frozenset().union(*infinite[1:])
    return MinimalityVerdict(NOT_MINIMAL, (first, rest))


def parabolic_orbit_dense(p: CoxeterPresentation, t: SubsetLike) -> bool:
    """Whether the ``W``-orbit of the boundary of ``W_t`` is dense.

    True iff ``t`` meets every infinite irreducible factor in a non-clique.
    A finite ``W`` has nothing to be dense in and returns False.
    """
    t = p.subset(t)
    infinite = irreducible_components(p).infinite_components
    if not infinite:
        return False
    return all(not is_clique(p, c & t) for c in infinite)
