"""Exhaustive structural checks on a Cayley ball.

Each suite walks every relevant element of ``B_R`` and records
counterexample words. Descent sets are obtained through a replaceable batch
function so the harness itself can be mutation-tested: a broken descent
engine must make at least one suite fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Optional, Sequence

import numpy as np

from . import kernels
from .core import CoxeterPresentation, is_clique, reduce
from .descent import Dense, ball, quasi_dense_check
from .structure import maximal_spherical_subsets

DescentFn = Callable[[CoxeterPresentation, np.ndarray, np.ndarray], np.ndarray]

MAX_EXAMPLES = 5


def kernel_descents(p: CoxeterPresentation, words: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    return kernels.descent_masks(words, lengths, p.comm)


def _descents_off_by_one(p, words, lengths):
    # drops the last letter before scanning
    return kernels.descent_masks(words, np.maximum(lengths - 1, 0), p.comm)


MUTATIONS: dict[str, DescentFn] = {"descent-off-by-one": _descents_off_by_one}
MUTATION_ENV = "RACGMIN_MUTATE"


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, message: str):
        self.failures += 1
        if len(self.violations) < MAX_EXAMPLES:
            self.violations.append(message)


def _arr(letters: Sequence[int]) -> np.ndarray:
    return np.asarray(tuple(letters), dtype=kernels.WORD_DTYPE)


_EMPTY = _arr(())


def _fmt(p, words, lengths, r) -> str:
    return p.format(int(c) for c in words[r, : lengths[r]])


def _clique_masks(p: CoxeterPresentation) -> set[int]:
    return {p.mask(c) for k in range(p.rank + 1) for c in combinations(range(p.rank), k) if is_clique(p, c)}


def check_length_step(p, b, descents) -> SuiteResult:
    res = SuiteResult("length-step")
    for s in range(p.rank):
        x = _arr((s,))
        for side, (pre, suf) in (("right", (_EMPTY, x)), ("left", (x, _EMPTY))):
            _, lens = kernels.concat_rows(pre, b.words, b.lengths, suf, p.comm)
            bad = np.flatnonzero(np.abs(lens - b.lengths) != 1)
            res.checked += len(lens)
            for r in bad:
                res.fail(f"{side} multiplying {_fmt(p, b.words, b.lengths, r)} by {p.generators[s]} changes length by {lens[r] - b.lengths[r]}")
    return res


def check_descent_clique(p, b, descents) -> SuiteResult:
    """Descent sets match their definition and are cliques."""
    res = SuiteResult("descent-clique")
    masks = descents(p, b.words, b.lengths)
    truth = np.zeros(len(b), dtype=np.int64)
    for s in range(p.rank):
        _, lens = kernels.concat_rows(_EMPTY, b.words, b.lengths, _arr((s,)), p.comm)
        truth |= np.where(lens < b.lengths, np.int64(1) << s, np.int64(0))
    cliques = _clique_masks(p)
    for r in range(len(b)):
        res.checked += 1
        m = int(masks[r])
        if m != truth[r]:
            res.fail(f"descents of {_fmt(p, b.words, b.lengths, r)} reported as {{{', '.join(p.names(p.unmask(m)))}}}, length test gives {{{', '.join(p.names(p.unmask(int(truth[r]))))}}}")
        elif m not in cliques:
            res.fail(f"descents {{{', '.join(p.names(p.unmask(m)))}}} of {_fmt(p, b.words, b.lengths, r)} are not a clique")
    return res


def check_maximal_clique_density(p, b, descents) -> SuiteResult:
    """Each maximal clique's descent class is within its size of everything."""
    res = SuiteResult("maximal-clique-density")
    for t in maximal_spherical_subsets(p):
        res.checked += 1
        if len(t) >= b.radius:
            res.fail(f"radius {b.radius} too small for clique {{{', '.join(p.names(t))}}}")
            continue
        verdict = quasi_dense_check(p, t, b.radius, len(t))
        if not (isinstance(verdict, Dense) and verdict.n <= len(t)):
            res.fail(f"{{{', '.join(p.names(t))}}}: {verdict}")
    return res


def check_infinite_pair_shift(p, b, descents) -> SuiteResult:
    """If ``o(st)`` is infinite, descent ``{s}`` times ``t`` has descent ``{t}``."""
    res = SuiteResult("infinite-pair-shift")
    masks = descents(p, b.words, b.lengths)
    for s, t in product(range(p.rank), repeat=2):
        if s == t or p.comm[s, t]:
            continue
        rows = np.flatnonzero((masks == 1 << s) & (b.lengths > 0))
        words, lens = kernels.concat_rows(_EMPTY, b.words[rows], b.lengths[rows], _arr((t,)), p.comm)
        got = descents(p, words, lens)
        res.checked += len(rows)
        for k in np.flatnonzero(got != 1 << t):
            res.fail(f"{_fmt(p, b.words, b.lengths, rows[k])} · {p.generators[t]} has descents {{{', '.join(p.names(p.unmask(int(got[k]))))}}}")
    return res


def check_commuting_conjugator(p, b, descents) -> SuiteResult:
    """``t w t' = w`` with ``t w`` reduced forces ``t = t'`` commuting with all of ``w``."""
    res = SuiteResult("commuting-conjugator")
    for t in range(p.rank):
        tw, twl = kernels.concat_rows(_arr((t,)), b.words, b.lengths, _EMPTY, p.comm)
        rows = np.flatnonzero(twl > b.lengths)
        for t2 in range(p.rank):
            out, lens = kernels.concat_rows(_EMPTY, tw[rows], twl[rows], _arr((t2,)), p.comm)
            res.checked += len(rows)
            width = b.words.shape[1]
            same = (lens == b.lengths[rows]) & np.all(out[:, :width] == b.words[rows], axis=1)
            for k in np.flatnonzero(same):
                r = rows[k]
                letters = b.words[r, : b.lengths[r]]
                if t != t2 or not all(p.comm[t, c] for c in letters):
                    res.fail(f"{p.generators[t]} · {_fmt(p, b.words, b.lengths, r)} · {p.generators[t2]} returns the word but the conclusion fails")
    return res


def check_clique_step(p, b, descents) -> SuiteResult:
    """Descent ``U`` times ``s`` (not in ``U``) has descent ``{t in U : st = ts} | {s}``."""
    res = SuiteResult("clique-step")
    masks = descents(p, b.words, b.lengths)
    for u in sorted(_clique_masks(p)):
        rows = np.flatnonzero(masks == u)
        if len(rows) == 0:
            continue
        members = p.unmask(u)
        for s in range(p.rank):
            if s in members:
                continue
            want = p.mask({t for t in members if p.comm[s, t]} | {s})
            words, lens = kernels.concat_rows(_EMPTY, b.words[rows], b.lengths[rows], _arr((s,)), p.comm)
            got = descents(p, words, lens)
            res.checked += len(rows)
            for k in np.flatnonzero(got != want):
                res.fail(f"{_fmt(p, b.words, b.lengths, rows[k])} · {p.generators[s]} has descents {{{', '.join(p.names(p.unmask(int(got[k]))))}}}, expected {{{', '.join(p.names(p.unmask(want)))}}}")
    return res


def check_deletion(p, b, descents, max_len: int = 6) -> SuiteResult:
    """A non-reduced word loses two letters without changing its element."""
    res = SuiteResult("deletion")
    for n in range(2, min(max_len, b.radius) + 1):
        for w in product(range(p.rank), repeat=n):
            nf = reduce(p, w)
            if len(nf) == n:
                continue
            res.checked += 1
            if not any(reduce(p, w[:i] + w[i + 1 : j] + w[j + 1 :]) == nf for i, j in combinations(range(n), 2)):
                res.fail(f"no two-letter deletion of {p.format(w)} preserves the element")
    return res


SUITES = {
    "length-step": check_length_step,
    "descent-clique": check_descent_clique,
    "maximal-clique-density": check_maximal_clique_density,
    "infinite-pair-shift": check_infinite_pair_shift,
    "commuting-conjugator": check_commuting_conjugator,
    "clique-step": check_clique_step,
    "deletion": check_deletion,
}
DEFAULT_SUITES = tuple(k for k in SUITES if k != "deletion")


def run_suites(
    p: CoxeterPresentation,
    radius: int = 6,
    names: Optional[Sequence[str]] = None,
    descents: Optional[DescentFn] = None,
    cap: Optional[int] = None,
) -> list[SuiteResult]:
    names = DEFAULT_SUITES if names is None else tuple(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    b = ball(p, radius, cap)
    descents = descents or kernel_descents
    return [SUITES[n](p, b, descents) for n in names]
