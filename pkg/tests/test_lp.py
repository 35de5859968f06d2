from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vgitcurves.lp import fm_feasible, lp_feasible, satisfies


@pytest.mark.parametrize("cons, want", [
    ([((1,), ">=", 1)], True),
    ([((1,), ">=", 1), ((-1,), ">=", 0)], False),
    ([((1, 1), ">=", 1), ((-4, 0), ">=", 0), ((0, -4), ">=", 0)], False),
    ([((1, -1), "==", 3), ((0, 1), "<=", -2)], True),
    ([], True),
])
def test_small_systems(cons, want):
    ok, x = lp_feasible(cons, dim=len(cons[0][0]) if cons else 2)
    assert ok is want
    ok2, _ = fm_feasible(cons, dim=len(cons[0][0]) if cons else 2)
    assert ok2 is want
    if ok:
        assert satisfies(cons, x)


def test_witness_is_exact_rational():
    ok, x = lp_feasible([((3,), ">=", 1)])
    assert ok and x[0] >= Fraction(1, 3) and isinstance(x[0], Fraction)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        lp_feasible([((1, 2), ">=", 1), ((1,), ">=", 0)])


rows = st.lists(
    st.tuples(st.lists(st.integers(-4, 4), min_size=3, max_size=3).map(tuple),
              st.sampled_from([">=", "<=", "=="]), st.integers(-3, 3)),
    min_size=1, max_size=7)


@settings(max_examples=150, deadline=None)
@given(rows)
def test_simplex_agrees_with_fourier_motzkin(cons):
    ok1, x1 = lp_feasible(cons, dim=3)
    ok2, x2 = fm_feasible(cons, dim=3)
    assert ok1 == ok2
    if ok1:
        assert satisfies(cons, x1) and satisfies(cons, x2)
