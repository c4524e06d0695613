import math
import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import commuting, oracle_nf, unlabeled_graphs
from racgmin import (
    CoxeterPresentation,
    PresentationError,
    ball,
    equal,
    invert,
    length,
    multiply,
    order_product,
    reduce,
)
from racgmin.corpus import load


@st.composite
def presentations(draw, max_rank=6):
    n = draw(st.integers(1, max_rank))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return CoxeterPresentation(tuple(f"s{i}" for i in range(n)), tuple(e for e, k in zip(pairs, keep) if k))


@st.composite
def presentation_and_words(draw, count=1, max_len=12):
    p = draw(presentations())
    words = [tuple(draw(st.lists(st.integers(0, p.rank - 1), max_size=max_len))) for _ in range(count)]
    return (p, *words)


def test_order_product(d_inf, dd):
    assert order_product(d_inf, "a", "a") == 1
    assert order_product(dd, "a", "c") == 2
    assert order_product(d_inf, "a", "b") == math.inf
    with pytest.raises(PresentationError, match="z"):
        order_product(d_inf, "a", "z")


@pytest.mark.parametrize(
    "gens, pairs, msg",
    [
        ([], [], "at least one"),
        (["a", "a"], [], "duplicate"),
        (["a", ""], [], "invalid"),
        (["a", "b"], [("a", "a")], "self-pair"),
        (["a", "b"], [("a", "b"), ("b", "a")], "duplicate commuting"),
        (["a", "b"], [("a", "x")], "unknown"),
    ],
)
def test_presentation_rejects(gens, pairs, msg):
    with pytest.raises(PresentationError, match=msg):
        CoxeterPresentation.from_pairs(gens, pairs)


def test_reduce_examples(d_inf, dd):
    assert reduce(d_inf, "a a") == ()
    assert dd.format(reduce(dd, "c a")) == "a c"
    assert dd.format(reduce(dd, "a c a")) == "c"
    with pytest.raises(PresentationError, match="q"):
        reduce(dd, "a q")


def test_reduce_matches_oracle_on_pentagon(pentagon):
    pairs = commuting(pentagon.rank, pentagon.edges)
    rng = random.Random(5)
    for _ in range(300):
        w = tuple(rng.randrange(5) for _ in range(10))
        assert reduce(pentagon, w) == oracle_nf(w, pairs)


def test_multiply_examples(d_inf, pentagon):
    assert multiply(d_inf, (), "a b a") == reduce(d_inf, "a b a")
    assert multiply(d_inf, "a b", "b a") == ()
    pairs = commuting(5, pentagon.edges)
    rng = random.Random(11)
    for _ in range(200):
        u = reduce(pentagon, [rng.randrange(5) for _ in range(rng.randrange(8))])
        v = reduce(pentagon, [rng.randrange(5) for _ in range(rng.randrange(8))])
        assert multiply(pentagon, u, v) == oracle_nf(u + v, pairs)


def test_invert_and_equal(d_inf, dd):
    assert invert(d_inf, ()) == ()
    assert invert(d_inf, "a b a") == reduce(d_inf, "a b a")
    assert dd.format(invert(dd, "a c")) == "a c"
    assert equal(d_inf, "a b", "a b")
    assert equal(dd, "a c", "c a")
    assert not equal(d_inf, "a b", "b a")


@given(presentation_and_words())
def test_reduce_length_and_parity(pw):
    p, w = pw
    nf = reduce(p, w)
    assert len(nf) <= len(w)
    assert len(nf) % 2 == len(w) % 2
    assert reduce(p, nf) == nf


@given(presentation_and_words(max_len=9))
@settings(max_examples=60)
def test_normal_form_is_shortlex_least(pw):
    p, w = pw
    nf = reduce(p, w)
    assert nf == oracle_nf(w, commuting(p.rank, p.edges))
    # no letter reaches an equal letter through commuting letters
    for i, j in combinations(range(len(nf)), 2):
        if nf[i] == nf[j]:
            assert not all(p.comm[nf[i], c] for c in nf[i + 1 : j])
    # no adjacent commuting pair is out of order
    for a, b in zip(nf, nf[1:]):
        assert not (p.comm[a, b] and a > b)


@given(presentation_and_words(count=2))
def test_invert_involution_and_inverse(pwv):
    p, u, _ = pwv
    nf = reduce(p, u)
    assert invert(p, invert(p, nf)) == nf
    assert len(invert(p, nf)) == len(nf)
    assert multiply(p, nf, invert(p, nf)) == ()


@given(presentation_and_words(count=3, max_len=8))
def test_multiply_associative_and_bounded(pw):
    p, u, v, w = pw
    assert multiply(p, multiply(p, u, v), w) == multiply(p, u, multiply(p, v, w))
    lu, lv = length(p, u), length(p, v)
    luv = len(multiply(p, u, v))
    assert abs(lu - lv) <= luv <= lu + lv
    assert luv % 2 == (lu + lv) % 2


def test_deletion_property():
    p = load("path4")
    for n in range(2, 8):
        for w in product(range(p.rank), repeat=n):
            nf = reduce(p, w)
            if len(nf) == n:
                continue
            assert any(
                reduce(p, w[:i] + w[i + 1 : j] + w[j + 1 :]) == nf for i, j in combinations(range(n), 2)
            ), w


@pytest.mark.parametrize("name", ["pentagon", "d_inf_x_z2", "free3", "hexagon"])
def test_length_step_on_ball(name):
    p = load(name)
    for nf in ball(p, 5):
        for s in range(p.rank):
            assert abs(len(multiply(p, nf, (s,))) - len(nf)) == 1
            assert abs(len(multiply(p, (s,), nf)) - len(nf)) == 1


@pytest.mark.slow
def test_normal_forms_agree_with_oracle_up_to_length_7():
    for n in range(1, 5):
        for edges in unlabeled_graphs(n):
            p = CoxeterPresentation(tuple(str(i) for i in range(n)), edges)
            pairs = commuting(n, edges)
            for k in range(8):
                for w in product(range(n), repeat=k):
                    assert reduce(p, w) == oracle_nf(w, pairs), (edges, w)
