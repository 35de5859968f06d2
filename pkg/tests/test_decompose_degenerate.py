from dataclasses import replace

import pytest

from vgitcurves.curve import Component, CurveGraph, Singularity
from vgitcurves.decompose import CASES, NotStable, canonical_decomposition, reassemble
from vgitcurves.degenerate import (NO, UNKNOWN, YES, closed_limit_class, is_maximally_degenerate,
                                   maximal_degeneration)
from vgitcurves.golden import degeneration_properties, g11_family
from vgitcurves.isomorphism import curves_isomorphic
from vgitcurves.stability import stability


def _with_expect(key):
    from vgitcurves.golden import load_corpus
    return sorted(n for n, item in load_corpus().curves.items() if key in item.expect)


@pytest.mark.parametrize("name", _with_expect("case"))
def test_case_and_lengths(corpus, name):
    e = corpus.curves[name].expect
    d = canonical_decomposition(corpus.curve(name), e["k"])
    assert d.case == e["case"]
    if "link_lengths" in e:
        assert d.lengths() == e["link_lengths"]


@pytest.mark.parametrize("name", _with_expect("case"))
def test_reassembly_is_isomorphic(corpus, name):
    c, k = corpus.curve(name), corpus.curves[name].expect["k"]
    assert curves_isomorphic(reassemble(canonical_decomposition(c, k)), c)


def test_all_cases_present(corpus):
    seen = {corpus.curves[n].expect["case"] for n in _with_expect("case")}
    assert seen == set(CASES)


def test_unstable_input_rejected(corpus):
    with pytest.raises(NotStable):
        canonical_decomposition(corpus.curve("rational_nodal_tail"), 2)


@pytest.mark.parametrize("name", _with_expect("maximally_degenerate"))
def test_closedness_verdicts(corpus, name):
    e = corpus.curves[name].expect
    assert is_maximally_degenerate(corpus.curve(name), e["k"]).verdict == e["maximally_degenerate"]


def test_clause_reasons(corpus):
    v = is_maximally_degenerate(corpus.curve("genus2_internal_cusp"), 2)
    assert v.verdict == NO and v.reasons[0].startswith("clause 1 fails")
    # a crimped ramphoid cusp does not make the tail hyperelliptic
    v = is_maximally_degenerate(corpus.curve("ramphoid_tail_crimped"), 4)
    assert v.verdict == NO and v.reasons[0].startswith("clause 1 fails")
    smooth_tail = CurveGraph((Component("K", 2, ("x",)), Component("E", 1, ("y",))),
                             (Singularity(1, (("K", "x"), ("E", "y"))),))
    v = is_maximally_degenerate(smooth_tail, 2)
    assert v.verdict == NO and v.reasons[0].startswith("clause 2 fails")
    assert is_maximally_degenerate(corpus.curve("tacnodal_core_k4"), 4).verdict == UNKNOWN


def test_g11_family():
    fam = g11_family()
    assert {n: is_maximally_degenerate(c, 2).verdict for n, c in fam.items()} == \
        {"smooth": NO, "nodal": NO, "cuspidal": YES}
    for n in ("smooth", "nodal"):
        assert curves_isomorphic(maximal_degeneration(fam[n], 2), fam["cuspidal"])


@pytest.mark.parametrize("name", sorted(_with_expect("degenerates_to")))
def test_degenerates_to(corpus, name):
    e = corpus.curves[name].expect
    assert curves_isomorphic(maximal_degeneration(corpus.curve(name), e["k"]), corpus.curve(e["degenerates_to"]))


def _stable_pairs():
    from vgitcurves.golden import load_corpus
    corpus = load_corpus()
    for name in sorted(corpus.curves):
        for k in (2, 3, 4):
            if stability(corpus.curve(name), k).passed:
                yield pytest.param(name, k, id=f"{name}-A{k}")


@pytest.mark.parametrize("name, k", list(_stable_pairs()))
def test_degeneration_properties(corpus, name, k):
    c = corpus.curve(name)
    assert degeneration_properties(c, k) == []
    assert closed_limit_class(c, k) == closed_limit_class(maximal_degeneration(c, k), k)
    if k < 4:
        assert stability(c, k, "plus").passed == stability(c, k + 1, "minus").passed


def _ramphoid_tail(c1):
    core = Component("K", 2, ("x", "p"))
    tail = Component("T", 0, ("y", "r"))
    return CurveGraph((core, tail),
                      (Singularity(1, (("K", "x"), ("T", "y"))), Singularity(4, (("T", "r"),), [c1])),
                      (("K", "p"),))


def test_crimping_scaling_is_an_isomorphism():
    assert curves_isomorphic(_ramphoid_tail(1), _ramphoid_tail(3))
    assert not curves_isomorphic(_ramphoid_tail(0), _ramphoid_tail(1))


def test_weierstrass_flag_distinguishes():
    a = _ramphoid_tail(0)
    b = replace(a, components=(replace(a.components[0], weierstrass=("p",)), a.components[1]))
    assert not curves_isomorphic(a, b)
