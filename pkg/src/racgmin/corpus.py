"""Shipped example presentations and seeded random ones."""

from __future__ import annotations

from importlib import resources
from itertools import combinations

import numpy as np

from .core import CoxeterPresentation
from .io import parse_presentation

_DATA = "racgmin.data"


def corpus_names() -> list[str]:
    files = resources.files(_DATA).iterdir()
    return sorted(f.name[:-5] for f in files if f.name.endswith(".json"))


def corpus_text(name: str) -> str:
    return resources.files(_DATA).joinpath(f"{name}.json").read_text(encoding="utf-8")


def load(name: str) -> CoxeterPresentation:
    p, _ = parse_presentation(corpus_text(name), f"{name}.json")
    return p


def corpus() -> dict[str, CoxeterPresentation]:
    return {name: load(name) for name in corpus_names()}


def random_presentation(n: int, seed: int, density: float = 0.5) -> CoxeterPresentation:
    """Commutation graph on ``g0 .. g{n-1}`` with independent edges."""
    rng = np.random.default_rng(seed)
    gens = tuple(f"g{i}" for i in range(n))
    edges = tuple((i, j) for i, j in combinations(range(n), 2) if rng.random() < density)
    return CoxeterPresentation(gens, edges)


FAMILY_DENSITIES = (0.45, 0.6, 0.75, 0.85)


def random_family(count: int = 20, base_seed: int = 2006) -> list[CoxeterPresentation]:
    """``count`` seeded graphs with 3 to 6 generators.

    Densities rise in blocks of four so the family mixes minimal,
    non-minimal and finite cases.
    """
    return [
        random_presentation(3 + k % 4, base_seed + k, FAMILY_DENSITIES[(k // 4) % len(FAMILY_DENSITIES)])
        for k in range(count)
    ]
