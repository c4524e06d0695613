"""Descent sets, coset representatives, Cayley balls and quasi-density.

The right descent set of ``w`` is ``{s : len(w s) < len(w)}``. In a
right-angled system this is the set of letters that can be commuted to the
end of a reduced word, and it is always a clique of the commutation graph.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

import numpy as np

from . import kernels
from .core import (
    CoxeterPresentation,
    NormalForm,
    PresentationError,
    SubsetLike,
    WordLike,
    generator_product,
    invert,
    is_clique,
    multiply,
    reduce,
)

CAP_ENV = "RACGMIN_BALL_CAP"
DEFAULT_CAP = 3_000_000


class BallCapExceeded(RuntimeError):
    """A ball would hold more elements than the configured cap."""

    def __init__(self, radius, cap, reached_radius, size):
        self.radius = radius
        self.cap = cap
        self.reached_radius = reached_radius
        self.size = size
        super().__init__(
            f"ball of radius {radius} exceeds cap of {cap} elements "
            f"(complete through radius {reached_radius} with {size} elements; "
            f"raise {CAP_ENV} to allow more)"
        )


class NotSphericalError(PresentationError):
    """A subset required to be spherical (a clique) is not."""


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise PresentationError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise PresentationError(f"{CAP_ENV} must be positive")
    return cap


def right_descents(p: CoxeterPresentation, w: WordLike) -> frozenset[int]:
    nf = reduce(p, w)
    if not nf:
        return frozenset()
    buf = np.asarray(nf, dtype=kernels.WORD_DTYPE)
    return p.unmask(int(kernels.descent_mask(buf, len(nf), p.comm)))


def left_descents(p: CoxeterPresentation, w: WordLike) -> frozenset[int]:
    return right_descents(p, invert(p, w))


def coset_min_rep(p: CoxeterPresentation, w: WordLike, t: SubsetLike) -> NormalForm:
    """Shortest element of the coset ``w W_t``."""
    t = p.subset(t)
    nf = reduce(p, w)
    while True:
        hit = right_descents(p, nf) & t
        if not hit:
            return nf
        nf = multiply(p, nf, (min(hit),))


def coset_longest_rep(p: CoxeterPresentation, w: WordLike, t: SubsetLike) -> NormalForm:
    """Longest element of ``w W_t`` for a clique ``t``.

    ``W_t`` is elementary abelian of order ``2**len(t)`` and its longest
    element is the product of all of ``t``.
    """
    t = p.subset(t)
    if not is_clique(p, t):
        raise NotSphericalError(f"{{{', '.join(p.names(t))}}} is not spherical")
    return multiply(p, coset_min_rep(p, w, t), generator_product(p, t))


@dataclass(eq=False)
class Ball:
    """All elements of length at most ``radius``, in ShortLex order.

    ``words`` is the packed ``(size, radius)`` letter array padded with -1;
    rows ``offsets[k]:offsets[k + 1]`` form the sphere of radius ``k``.
    ``descents`` holds the right-descent bitmask of every row.
    """

    presentation: CoxeterPresentation
    radius: int
    words: np.ndarray
    lengths: np.ndarray
    offsets: np.ndarray
    descents: np.ndarray
    _rows: dict = field(default=None, repr=False)
    _profiles: dict = field(default=None, repr=False)

    def __len__(self):
        return int(self.offsets[-1])

    def __iter__(self) -> Iterator[NormalForm]:
        for r in range(len(self)):
            yield self.element(r)

    def __contains__(self, w) -> bool:
        return self.row_of(w) is not None

    def element(self, r: int) -> NormalForm:
        return tuple(int(c) for c in self.words[r, : self.lengths[r]])

    @property
    def sphere_sizes(self) -> list[int]:
        return [int(x) for x in np.diff(self.offsets)]

    def sphere(self, k: int) -> list[NormalForm]:
        return [self.element(r) for r in range(self.offsets[k], self.offsets[k + 1])]

    def count_within(self, k: int) -> int:
        """Number of elements of length at most ``k``."""
        return int(self.offsets[min(k, self.radius) + 1])

    def row_of(self, w: WordLike) -> Optional[int]:
        if self._rows is None:
            self._rows = {self.element(r): r for r in range(len(self))}
        return self._rows.get(reduce(self.presentation, w))

    def descent_profiles(self) -> dict[frozenset[int], np.ndarray]:
        """Row indices grouped by exact right-descent set."""
        if self._profiles is None:
            masks = self.descents
            index = {}
            for m in np.unique(masks):
                rows = np.flatnonzero(masks == m)
                rows.setflags(write=False)
                index[self.presentation.unmask(int(m))] = rows
            self._profiles = index
        return self._profiles

    def rows_with_descent(self, t: SubsetLike) -> np.ndarray:
        t = self.presentation.subset(t)
        return self.descent_profiles().get(t, np.empty(0, dtype=np.int64))


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)


@functools.lru_cache(maxsize=16)
def _build_ball(p: CoxeterPresentation, radius: int, cap: int) -> Ball:
    spheres = [np.zeros((1, 0), dtype=kernels.WORD_DTYPE)]
    size = 1
    for k in range(radius):
        cur = spheres[-1]
        ok = kernels.extension_mask(cur, p.comm)
        rows, letters = np.nonzero(ok)
        if size + len(rows) > cap:
            raise BallCapExceeded(radius, cap, k, size)
        nxt = np.empty((len(rows), k + 1), dtype=kernels.WORD_DTYPE)
        nxt[:, :k] = cur[rows]
        nxt[:, k] = letters
        spheres.append(nxt)
        size += len(rows)
    words = np.full((size, radius), -1, dtype=kernels.WORD_DTYPE)
    lengths = np.empty(size, dtype=np.int64)
    offsets = np.zeros(radius + 2, dtype=np.int64)
    for k, sph in enumerate(spheres):
        lo = offsets[k]
        offsets[k + 1] = lo + len(sph)
        words[lo : offsets[k + 1], :k] = sph
        lengths[lo : offsets[k + 1]] = k
    descents = kernels.descent_masks(words, lengths, p.comm)
    _freeze(words, lengths, offsets, descents)
    return Ball(p, radius, words, lengths, offsets, descents)


def ball(p: CoxeterPresentation, radius: int, cap: Optional[int] = None) -> Ball:
    """Enumerate the Cayley ball of the given radius.

    Sphere ``k + 1`` is produced by extending each ShortLex normal form of
    length ``k`` by every letter that keeps it normal, so every element is
    generated exactly once and in ShortLex order. Raises
    :class:`BallCapExceeded` rather than truncating.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    return _build_ball(p, int(radius), default_cap() if cap is None else int(cap))


def elements_with_descent(p: CoxeterPresentation, t: SubsetLike, radius: int, cap: Optional[int] = None) -> list[NormalForm]:
    b = ball(p, radius, cap)
    return [b.element(r) for r in b.rows_with_descent(t)]


@dataclass(frozen=True)
class Dense:
    """Every center in ``B_{R-n}`` is within ``n`` of the target set."""

    n: int


@dataclass(frozen=True)
class NotWithin:
    """Some center in ``B_{R-n_max}`` is farther than ``n_max`` from every target.

    ``distance`` is the exact distance from ``counterexample`` to the nearest
    target inside the ball, or ``None`` when the ball holds no target.
    """

    n_max: int
    counterexample: NormalForm
    distance: Optional[int]


QuasiDensityVerdict = Union[Dense, NotWithin]


def _sub_array(b: Ball, rows: np.ndarray):
    return b.words[rows], b.lengths[rows]


def hole_radii(p: CoxeterPresentation, t: SubsetLike, radius: int, n_max: int, cap: Optional[int] = None):
    """Per ball element, the shortest ``x`` with descents of ``w x`` equal to ``t``.

    Returns ``(ball, radii)``; ``n_max + 1`` means no hit within the window.
    """
    b = ball(p, radius, cap)
    target = p.mask(p.subset(t))
    nx = b.count_within(n_max)
    radii = kernels.hole_radius(
        b.words, b.lengths, b.words[:nx], b.lengths[:nx], p.comm, target, radius, n_max
    )
    return b, radii


def deepest_hole(p: CoxeterPresentation, b: Ball, t: frozenset[int], rows: np.ndarray):
    """Among ``rows`` pick the one farthest from the targets in ``b``.

    Ties go to the ShortLex-least element. Returns ``(row, distance)`` with
    ``distance`` None if ``b`` has no target at all.
    """
    targets = b.rows_with_descent(t)
    if len(targets) == 0:
        return int(rows[0]), None
    aw, al = _sub_array(b, rows)
    tw, tl = _sub_array(b, targets)
    dist = kernels.min_distances(aw, al, tw, tl, p.comm)
    k = int(np.argmax(dist))
    return int(rows[k]), int(dist[k])


def quasi_dense_check(p: CoxeterPresentation, t: SubsetLike, radius: int, n_max: int, cap: Optional[int] = None) -> QuasiDensityVerdict:
    """Smallest ``n <= n_max`` with ``B_{R-n}`` inside the ``n``-neighbourhood of ``W^t``.

    Targets are the ball elements whose descent set is exactly ``t``. Only
    centers at least ``n`` away from the rim are judged so the finite window
    does not manufacture holes.
    """
    if not 0 <= n_max < radius:
        raise ValueError(f"need 0 <= n_max < radius, got n_max={n_max}, radius={radius}")
    t = p.subset(t)
    b, radii = hole_radii(p, t, radius, n_max, cap)
    for n in range(n_max + 1):
        centers = b.count_within(radius - n)
        if np.all(radii[:centers] <= n):
            return Dense(n)
    centers = b.count_within(radius - n_max)
    bad = np.flatnonzero(radii[:centers] > n_max)
    row, dist = deepest_hole(p, b, t, bad)
    return NotWithin(n_max, b.element(row), dist)
