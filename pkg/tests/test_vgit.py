import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vgitcurves.golden import (monomial_obstructions, oracle_agreement, product_law, ramphoid_system,
                               restriction_law)
from vgitcurves.vgit import (EnumerationTooLarge, StratumUnion, WeightSystem, WeightSystemError,
                             brute_force_in_minus, brute_force_in_plus, brute_force_locus,
                             certified_box_bound, in_minus, in_plus, limit_exists, minus_locus, pad_zero,
                             plus_locus, product_system, restrict_system, semi_invariant_monomials,
                             unique_closed_point)

S_BLOCK = ["s_0", "s_1", "s_2", "s_3"]


@pytest.fixture
def ramphoid():
    return ramphoid_system()


# ---------------------------------------------------------------- types

def test_weight_system_invariants():
    with pytest.raises(WeightSystemError):
        WeightSystem(1, (("a", (1,)), ("a", (2,))), (1,))
    with pytest.raises(WeightSystemError):
        WeightSystem(2, (("a", (1,)),), (1, 1))
    with pytest.raises(WeightSystemError):
        WeightSystem(0, (), ())
    assert WeightSystem(1, (), (1,)).n == 0


def test_stratum_union_is_irredundant_and_sorted():
    u = StratumUnion.of([["b", "a"], ["a"], ["c", "d"], ["d", "c", "e"]])
    assert u.strata == (("a",), ("c", "d"))
    assert u.contains_support(["b", "c"]) is True
    assert u.contains_support(["a", "c"]) is False


# ---------------------------------------------------------------- HM criterion

def test_limit_exists(ramphoid):
    assert limit_exists(ramphoid, ["n", "c"], (1,))
    assert not limit_exists(ramphoid, ["s_0"], (1,))
    assert limit_exists(ramphoid, [], (5,))
    with pytest.raises(WeightSystemError):
        limit_exists(ramphoid, ["n"], (1, 2))


def test_in_minus_and_plus(ramphoid):
    ok, lam = in_minus(ramphoid, ["n", "c"])
    assert ok and lam[0] > 0
    assert in_minus(ramphoid, ["s_2", "n"]) == (False, None)
    ok, lam = in_plus(ramphoid, S_BLOCK)
    assert ok and lam[0] < 0
    assert in_plus(ramphoid, ["c"]) == (False, None)


def test_zero_character_chambers_are_empty():
    ws = WeightSystem(2, (("x", (1, 0)), ("y", (-1, 2))), (0, 0))
    for s in ([], ["x"], ["x", "y"]):
        assert in_minus(ws, s) == (False, None)
        assert in_plus(ws, s) == (False, None)
    assert minus_locus(ws).is_empty() and plus_locus(ws).is_empty()


def test_ramphoid_loci(ramphoid):
    assert minus_locus(ramphoid) == StratumUnion.of([S_BLOCK])
    assert plus_locus(ramphoid) == StratumUnion.of([["n", "c"]])


def test_monomial_h21_loci():
    ws = WeightSystem.build((1,), [("s_0", -10), ("s_1", -8), ("s_2", -6), ("s_3", -4), ("c_1", 1)])
    assert minus_locus(ws) == StratumUnion.of([S_BLOCK])
    assert plus_locus(ws) == StratumUnion.of([["c_1"]])


def test_enumeration_cap():
    ws = WeightSystem(3, tuple((f"x{i}", (i + 1, -i, 2 * i + 1)) for i in range(30)), (1, 0, 0))
    with pytest.raises(EnumerationTooLarge):
        minus_locus(ws, cap=24)


# ---------------------------------------------------------------- oracles

def test_brute_force_examples(ramphoid):
    assert brute_force_in_minus(ramphoid, ["n", "c"], bound=1)
    assert not brute_force_in_minus(ramphoid, ["s_0"], bound=6)
    zero = WeightSystem(1, (("x", (3,)),), (0,))
    assert not brute_force_in_minus(zero, [], bound=1)
    assert not brute_force_in_plus(zero, [], bound=1)


def test_brute_force_budget():
    ws = WeightSystem(3, (("x", (1, 1, 1)),), (1, 1, 1))
    with pytest.raises(EnumerationTooLarge):
        brute_force_in_minus(ws, ["x"], bound=1000)


def test_certified_bound_grows_with_weights(ramphoid):
    assert certified_box_bound(ramphoid) == 40


def test_brute_force_locus_matches(ramphoid):
    assert brute_force_locus(ramphoid, "minus") == minus_locus(ramphoid)
    assert brute_force_locus(ramphoid, "plus") == plus_locus(ramphoid)


def test_semi_invariant_examples(ramphoid):
    neg = semi_invariant_monomials(ramphoid, "neg", 1)
    assert neg == sorted(tuple(int(j == i) for j in range(6)) for i in range(4))
    pos = set(semi_invariant_monomials(ramphoid, "pos", 2))
    e = lambda *idx: tuple(sum(1 for i in idx if i == j) for j in range(6))  # noqa: E731
    assert {e(4), e(5), e(4, 5), e(4, 4), e(5, 5)} <= pos
    opp = WeightSystem(2, (("x", (1, -1)), ("y", (-1, 1))), (1, 1))
    assert semi_invariant_monomials(opp, "neg", 4) == []


def test_product_and_restriction_examples(ramphoid):
    p = product_system(ramphoid, ramphoid)
    assert p.rank == 2 and p.n == 12
    want = StratumUnion.of([[f"{l}@1" for l in S_BLOCK], [f"{l}@2" for l in S_BLOCK]])
    assert minus_locus(p) == want
    r = restrict_system(ramphoid, ["n"])
    assert plus_locus(r) == StratumUnion.of([["c"]])
    empty = WeightSystem(1, (), (0,))
    q = product_system(ramphoid, empty)
    assert minus_locus(q) == minus_locus(ramphoid) and plus_locus(q) == plus_locus(ramphoid)


def test_weight_zero_padding_is_invisible(ramphoid):
    padded = pad_zero(ramphoid, 5)
    assert minus_locus(padded) == minus_locus(ramphoid)
    assert plus_locus(padded) == plus_locus(ramphoid)


def test_unique_closed_point():
    assert unique_closed_point(WeightSystem.build((1,), [("a", -2), ("b", -3)]))
    assert not unique_closed_point(WeightSystem.build((1,), [("a", -2), ("b", 3)]))
    assert not unique_closed_point(WeightSystem.build((1,), [("a", 0)]))
    with pytest.raises(WeightSystemError):
        unique_closed_point(WeightSystem(2, (), (1, 1)))


# ---------------------------------------------------------------- properties

@st.composite
def systems(draw, max_rank=3, max_n=6, max_w=6):
    r = draw(st.integers(1, max_rank))
    n = draw(st.integers(0, max_n))
    chi = tuple(draw(st.lists(st.integers(-2, 2), min_size=r, max_size=r)))
    w = [tuple(draw(st.lists(st.integers(-max_w, max_w), min_size=r, max_size=r))) for _ in range(n)]
    return WeightSystem(r, tuple((f"x{j}", w[j]) for j in range(n)), chi)


@settings(max_examples=60, deadline=None)
@given(systems(), st.randoms(use_true_random=False))
def test_lp_agrees_with_brute_force(ws, rnd):
    assert oracle_agreement(ws, random.Random(rnd.random())) == []


@settings(max_examples=60, deadline=None)
@given(systems(max_n=5))
def test_semi_invariants_never_contradict_lp(ws):
    assert monomial_obstructions(ws, degree=4) == []


@settings(max_examples=40, deadline=None)
@given(systems(max_rank=2, max_n=4), systems(max_rank=2, max_n=4))
def test_product_law(a, b):
    assert product_law(a, b) == []


@settings(max_examples=40, deadline=None)
@given(systems(max_n=6), st.data())
def test_restriction_law(ws, data):
    z = data.draw(st.lists(st.sampled_from(ws.labels), unique=True)) if ws.n else []
    assert restriction_law(ws, z) == []


@settings(max_examples=60, deadline=None)
@given(systems(max_n=6), st.data())
def test_membership_is_downward_closed(ws, data):
    s = data.draw(st.sets(st.integers(0, ws.n - 1))) if ws.n else set()
    if in_minus(ws, s)[0]:
        for j in s:
            assert in_minus(ws, s - {j})[0]
