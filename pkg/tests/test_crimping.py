from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vgitcurves.crimping import (EVEN, ODD, CrimpingVector, TruncatedSeries, ValuedCrimping, ValuedEntry,
                                 crimping_equivalent, crimping_weights, h_weight_table, limit_crimping,
                                 subalgebra_contains, subalgebra_generators)
from vgitcurves.golden import limit_oracle


def cv(m, *entries, parity=EVEN):
    return CrimpingVector(parity, m, tuple(F(x) for x in entries))


def test_weight_tables():
    assert crimping_weights(2, EVEN) == [1]
    assert crimping_weights(1, EVEN) == []
    assert crimping_weights(4, EVEN) == [1, 3, 5]
    assert crimping_weights(4, ODD) == [1, 2, 3]
    assert h_weight_table(1, ODD) == [-2, -3, -4]
    assert h_weight_table(2, EVEN) == [-4, -6, -8, -10]
    with pytest.raises(ValueError):
        crimping_weights(0, EVEN)


def test_vector_length_checked():
    with pytest.raises(ValueError):
        CrimpingVector(EVEN, 3, (F(1),))


def test_equivalence_examples():
    assert crimping_equivalent(cv(2, 1), cv(2, 3)) == 3
    assert crimping_equivalent(cv(3, 1, 1), cv(3, 2, 8)) == 2
    assert crimping_equivalent(cv(3, 0, 1), cv(3, 1, 1)) is None
    assert crimping_equivalent(cv(3, 1, 1), cv(3, 2, 7)) is None
    # weights (1,2) in the odd case: (1,1) ~ (-2,4) via lambda = -2
    assert crimping_equivalent(cv(3, 1, 1, parity=ODD), cv(3, -2, 4, parity=ODD)) == -2
    with pytest.raises(ValueError):
        crimping_equivalent(cv(2, 1), cv(2, 1, parity=ODD))


def test_equivalence_needs_exact_roots():
    # weight 3 only: 1 ~ 8 (lambda 2) but 1 is not equivalent to 2 over the rationals
    a = CrimpingVector(EVEN, 3, (F(0), F(1)))
    assert crimping_equivalent(a, CrimpingVector(EVEN, 3, (F(0), F(8)))) == 2
    assert crimping_equivalent(a, CrimpingVector(EVEN, 3, (F(0), F(2)))) is None


def test_generators_even():
    gens = subalgebra_generators(cv(2, 0))
    assert len(gens) == 1 + 2 * 2
    s = lambda e: TruncatedSeries.monomial(e, 8)  # noqa: E731
    assert subalgebra_contains(gens, s(2))
    assert not subalgebra_contains(gens, s(3))
    crimped = subalgebra_generators(cv(2, 1))
    assert crimped[0] == TruncatedSeries.from_coeffs([0, 0, 1, 2, 1, 0, 0, 0])
    assert not subalgebra_contains(crimped, s(3))
    assert not subalgebra_contains(crimped, s(2))
    assert subalgebra_contains(crimped, TruncatedSeries.from_coeffs([0] * 8))


def test_generators_odd():
    gens = subalgebra_generators(cv(2, 1, parity=ODD))
    T = 6
    assert len(gens) == 1 + 2 * 3
    # the diagonal (s + s^2, s) is in, the branchwise (s, 0) is not
    assert subalgebra_contains(gens, TruncatedSeries.from_coeffs([0, 1, 1, 0, 0, 0], [0, 1, 0, 0, 0, 0]))
    assert not subalgebra_contains(gens, TruncatedSeries.monomial(1, T, 0, 2))
    assert subalgebra_contains(gens, TruncatedSeries.monomial(3, T, 1, 2))


def test_truncation_too_small():
    with pytest.raises(ValueError):
        subalgebra_generators(cv(2, 0), order=7)


def test_limit_examples():
    u = F(7, 3)
    assert limit_crimping(ValuedCrimping(EVEN, 2, (ValuedEntry(-3, u),))) == (3, cv(2, u))
    b, lim = limit_crimping(ValuedCrimping(EVEN, 3, (ValuedEntry(-1, F(1)), ValuedEntry(-6, u))))
    assert b == 2 and lim == cv(3, 0, u)
    b, lim = limit_crimping(ValuedCrimping(ODD, 3, (ValuedEntry(None), ValuedEntry(None))))
    assert b == 0 and lim.is_monomial()


def test_valued_entry_invariants():
    with pytest.raises(ValueError):
        ValuedEntry(None, F(1))
    with pytest.raises(ValueError):
        ValuedEntry(2, F(0))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero = rationals.filter(lambda x: x != 0)


@st.composite
def vectors(draw):
    parity = draw(st.sampled_from([EVEN, ODD]))
    m = draw(st.integers(2, 4))
    return CrimpingVector(parity, m, tuple(draw(st.lists(rationals, min_size=m - 1, max_size=m - 1))))


@settings(max_examples=100, deadline=None)
@given(vectors(), nonzero, nonzero)
def test_equivalence_relation(c, l1, l2):
    c1, c2 = c.scaled(l1), c.scaled(l1).scaled(l2)
    assert c.scaled(crimping_equivalent(c, c)) == c
    f, g, h = crimping_equivalent(c, c1), crimping_equivalent(c1, c), crimping_equivalent(c, c2)
    assert f is not None and c.scaled(f) == c1
    assert g is not None and c1.scaled(g) == c
    assert h is not None and c.scaled(h) == c2


@settings(max_examples=40, deadline=None)
@given(vectors(), nonzero, st.lists(rationals, min_size=4, max_size=4))
def test_subalgebra_invariance(c, lam, coeffs):
    gens = subalgebra_generators(c)
    T = gens[0].order
    nb = len(gens[0].branches)
    # a generic element plus a perturbation that may leave the subalgebra
    f = gens[0]
    pert = TruncatedSeries.from_coeffs(*[[0] * (T - 4) + coeffs for _ in range(nb)])
    for g in (f, TruncatedSeries(tuple(tuple(x + y for x, y in zip(a, b))
                                       for a, b in zip(f.branches, pert.branches)))):
        inside = subalgebra_contains(gens, g)
        moved = subalgebra_contains(subalgebra_generators(c.scaled(lam)), g.substitute_scale(lam))
        assert inside == moved


@st.composite
def valued(draw):
    parity = draw(st.sampled_from([EVEN, ODD]))
    m = draw(st.integers(2, 5))
    ents = []
    for _ in range(m - 1):
        if draw(st.booleans()) and draw(st.booleans()):
            ents.append(ValuedEntry(None))
        else:
            ents.append(ValuedEntry(draw(st.integers(-15, 10)), draw(nonzero)))
    return ValuedCrimping(parity, m, tuple(ents))


@settings(max_examples=150, deadline=None)
@given(valued())
def test_limit_is_minimal_and_matches_search(v):
    b, lim = limit_crimping(v)
    assert (b, lim.entries) == limit_oracle(v)
    w = crimping_weights(v.m, v.parity)
    assert all(e.val is None or x * b + e.val >= 0 for x, e in zip(w, v.entries))
    if b:
        assert any(e.val is not None and x * (b - 1) + e.val < 0 for x, e in zip(w, v.entries))
