"""Constructive quasi-density witnesses and their ball certification.

A witness for ``W^{s0}`` starts from a maximal clique ``U0`` of the infinite
part. Every element is within ``len(U0)`` of an element whose descent set is
exactly ``U0`` (take the longest element of its ``W_U0`` coset). Right
multiplying a descent-``V`` element by a letter ``a`` outside ``V`` yields
descent set ``{t in V : a t = t a} | {a}``, so a chain of letters shrinking
``U0`` to a singleton ``{s0}`` moves all of ``W^{U0}`` into ``W^{s0}``.
The search below finds the shortest such chain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

import numpy as np

from . import kernels
from .core import CoxeterPresentation, NormalForm, SubsetLike, is_clique
from .descent import Ball, Dense, QuasiDensityVerdict, ball, deepest_hole, hole_radii, quasi_dense_check
from .structure import irreducible_components, maximal_spherical_subsets


class WitnessError(ValueError):
    """A chain step or witness violates its preconditions."""


@dataclass(frozen=True)
class QuasiDensityWitness:
    s0: int
    start_clique: frozenset[int]
    chain: tuple[int, ...]
    trace: tuple[frozenset[int], ...]
    bound_n: int

    @property
    def multiplier(self) -> NormalForm:
        return self.chain


@dataclass(frozen=True)
class Splitting:
    first: frozenset[int]
    rest: frozenset[int]


@dataclass(frozen=True)
class FiniteGroup:
    pass


WitnessOutcome = Union[QuasiDensityWitness, Splitting, FiniteGroup]


def apply_step(p: CoxeterPresentation, v: SubsetLike, a) -> frozenset[int]:
    """Descent set reached from exact descent set ``v`` after multiplying by ``a``."""
    v = p.subset(v)
    a = p.index(a)
    if a in v:
        raise WitnessError(f"step letter {p.generators[a]} already lies in {{{', '.join(p.names(v))}}}")
    if not is_clique(p, v):
        raise WitnessError(f"{{{', '.join(p.names(v))}}} is not a clique")
    return frozenset(t for t in v if p.comm[a, t]) | {a}


def _shortest_chain(p: CoxeterPresentation, start: frozenset[int], letters: list[int]):
    # BFS expanding letters in generator order: the first singleton reached
    # carries the lexicographically least among the shortest chains
    if len(start) == 1:
        return ()
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for a in letters:
            if a in v:
                continue
            nxt = apply_step(p, v, a)
            if nxt in parent:
                continue
            parent[nxt] = (v, a)
            if len(nxt) == 1:
                chain = []
                cur = nxt
                while parent[cur] is not None:
                    cur, step = parent[cur]
                    chain.append(step)
                return tuple(reversed(chain))
            queue.append(nxt)
    raise RuntimeError("no chain reaches a singleton; the infinite part is not irreducible")


def find_witness(p: CoxeterPresentation) -> WitnessOutcome:
    dec = irreducible_components(p)
    infinite = dec.infinite_components
    if not infinite:
        return FiniteGroup()
    if len(infinite) > 1:
        return Splitting(infinite[0], frozenset().union(*infinite[1:]))
    s_tilde = sorted(dec.s_tilde)
    sub = p.induced(s_tilde)
    u0 = frozenset(s_tilde[k] for k in maximal_spherical_subsets(sub)[0])
    chain = _shortest_chain(p, u0, s_tilde)
    trace = [u0]
    for a in chain:
        trace.append(apply_step(p, trace[-1], a))
    (s0,) = trace[-1]
    bound = len(u0) + len(chain) + len(dec.finite_part)
    return QuasiDensityWitness(s0, u0, chain, tuple(trace), bound)


@dataclass
class StepCheck:
    letter: Optional[int]
    source: frozenset[int]
    target: frozenset[int]
    checked: int
    failures: list[NormalForm] = field(default_factory=list)


@dataclass
class CertificationReport:
    radius: int
    steps: list[StepCheck]
    inclusion: StepCheck
    density: QuasiDensityVerdict
    bound_n: int

    @property
    def density_ok(self) -> bool:
        return isinstance(self.density, Dense) and self.density.n <= self.bound_n

    @property
    def passed(self) -> bool:
        return self.density_ok and not self.inclusion.failures and not any(s.failures for s in self.steps)


def _check_multiplier(p: CoxeterPresentation, b: Ball, source, x: Iterable[int], target, letter=None, keep=5) -> StepCheck:
    rows = b.rows_with_descent(source)
    x = np.asarray(tuple(x), dtype=kernels.WORD_DTYPE)
    masks = kernels.descents_after(b.words[rows], b.lengths[rows], x, p.comm)
    bad = rows[masks != p.mask(target)]
    return StepCheck(letter, frozenset(source), frozenset(target), len(rows), [b.element(r) for r in bad[:keep]])


def validate_witness(p: CoxeterPresentation, w: QuasiDensityWitness) -> None:
    """Replay the chain; raises :class:`WitnessError` on any inconsistency."""
    if not is_clique(p, w.start_clique):
        raise WitnessError("start clique is not a clique")
    trace = [frozenset(w.start_clique)]
    for a in w.chain:
        trace.append(apply_step(p, trace[-1], a))
    if tuple(trace) != tuple(w.trace):
        raise WitnessError("recorded trace does not match the chain")
    if trace[-1] != {w.s0}:
        raise WitnessError(f"chain ends at {{{', '.join(p.names(trace[-1]))}}}, not {{{p.generators[w.s0]}}}")


def certify_witness(p: CoxeterPresentation, w: QuasiDensityWitness, radius: int = 8, cap: Optional[int] = None) -> CertificationReport:
    """Check a witness exhaustively on the ball of the given radius.

    Every element with descent set exactly the start clique must land in
    ``W^{s0}`` after the multiplier, each chain step must map its descent set
    as predicted, and ``W^{s0}`` must be quasi-dense with constant at most
    ``bound_n``.
    """
    validate_witness(p, w)
    if radius <= w.bound_n:
        raise ValueError(f"radius {radius} must exceed the witness bound {w.bound_n}")
    b = ball(p, radius, cap)
    steps = [
        _check_multiplier(p, b, src, (a,), dst, letter=a)
        for src, a, dst in zip(w.trace, w.chain, w.trace[1:])
    ]
    inclusion = _check_multiplier(p, b, w.start_clique, w.chain, {w.s0})
    density = quasi_dense_check(p, {w.s0}, radius, w.bound_n, cap)
    return CertificationReport(radius, steps, inclusion, density, w.bound_n)


@dataclass(frozen=True)
class Hole:
    element: NormalForm
    distance: Optional[int]


def find_hole(p: CoxeterPresentation, s, radius: int = 12, n_max: int = 4, cap: Optional[int] = None) -> Optional[Hole]:
    """An element of ``B_{R-n_max}`` farther than ``n_max`` from ``W^{s}`` inside ``B_R``.

    Returns the deepest such element (ShortLex-least among ties) or None.
    """
    if not 0 <= n_max < radius:
        raise ValueError(f"need 0 <= n_max < radius, got n_max={n_max}, radius={radius}")
    t = frozenset({p.index(s)})
    b, radii = hole_radii(p, t, radius, n_max, cap)
    bad = np.flatnonzero(radii[: b.count_within(radius - n_max)] > n_max)
    if len(bad) == 0:
        return None
    row, dist = deepest_hole(p, b, t, bad)
    return Hole(b.element(row), dist)
