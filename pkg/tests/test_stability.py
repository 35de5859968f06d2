import pytest

from vgitcurves.curve import Component, CurveGraph, Singularity
from vgitcurves.golden import TRUTH_TABLE
from vgitcurves.hcurves import (destabilizing_chains, destabilizing_tails, find_h_bridges, find_h_links,
                                find_h_tails, is_destabilizing)
from vgitcurves.stability import UnsupportedK, h_levels, stability


def _stability_cases():
    from vgitcurves.golden import load_corpus
    corpus = load_corpus()
    for name, item in sorted(corpus.curves.items()):
        for k, vs in sorted(item.expect.get("stability", {}).items()):
            for variant, want in sorted(vs.items()):
                yield pytest.param(name, int(k), variant, want, id=f"{name}-A{k}-{variant}")


@pytest.mark.parametrize("name, k, variant, want", list(_stability_cases()))
def test_corpus_stability(corpus, name, k, variant, want):
    assert stability(corpus.curve(name), k, variant).passed is want


@pytest.mark.parametrize("name, k, variant, want", TRUTH_TABLE)
def test_truth_table(corpus, name, k, variant, want):
    assert stability(corpus.curve(name), k, variant).passed is want


def test_levels():
    assert h_levels(2, "plain") == []
    assert h_levels(2, "plus") == [2]
    assert h_levels(4, "minus") == [2, 3]
    assert h_levels(4, "plus") == [2, 3, 4]


def test_bad_arguments(corpus):
    c = corpus.curve("smooth_genus3")
    with pytest.raises(UnsupportedK):
        stability(c, 5)
    with pytest.raises(ValueError):
        stability(c, 2, "weird")


def test_minus_excludes_top_singularity():
    cusp = CurveGraph((Component("R", 1, ("p", "q")),), (Singularity(2, (("R", "p"),)),), (("R", "q"),))
    assert stability(cusp, 2, "plain").passed
    v = stability(cusp, 2, "minus")
    assert not v.passed and v.violations[0].rule == "singularity"


def test_elliptic_tail_detection(corpus):
    c = corpus.curve("elliptic_tail_nodal")
    tails = find_h_tails(c, 1)
    assert len(tails) == 1
    t = tails[0]
    assert t.kind == "tail" and t.boundary[0].k == 1
    # only the rational cuspidal model counts as monomial
    assert not t.monomial
    assert is_destabilizing(t) and destabilizing_tails(c, 1) == tails


def test_tacnodal_tail_is_destabilizing(corpus):
    c = corpus.curve("elliptic_tail_tacnodal")
    tails = destabilizing_tails(c, 1)
    assert [t.boundary[0].k for t in tails] == [3]
    assert not stability(c, 3, "plain").passed


def test_tail_thresholds():
    from vgitcurves.hcurves import Boundary, HCurve
    tail = lambda m, k: HCurve(m, ("T",), (Boundary(("T", "q"), k),), (), True)  # noqa: E731
    assert [is_destabilizing(tail(1, k)) for k in (0, 1, 2, 3, 4)] == [True, True, False, True, True]
    assert [is_destabilizing(tail(2, k)) for k in (1, 3, 4, 5)] == [True, False, False, True]


def test_bridge_and_chain_detection(corpus):
    c = corpus.curve("elliptic_bridge_nodal")
    bridges = find_h_bridges(c, 1)
    assert len(bridges) == 1 and bridges[0].kind == "bridge"
    chains = destabilizing_chains(c, 1)
    assert len(chains) == 1 and chains[0].length == 1


def test_links_of_length(corpus):
    for L in (1, 2, 3, 4):
        links = find_h_links(corpus.curve(f"case_II_L{L}"), 1)
        assert sorted(ln.length for ln in links)[-1] == L


def test_weierstrass_declaration_matters(corpus):
    assert not stability(corpus.curve("weierstrass_tail_nodal"), 4, "plus").passed
    assert stability(corpus.curve("weierstrass_tail_undeclared"), 4, "plus").passed


def test_violations_are_witnessed(corpus):
    v = stability(corpus.curve("elliptic_tail_nodal"), 2, "plus")
    assert [x.rule for x in v.violations] == ["H_2"]
    assert "E" in v.violations[0].detail or v.violations[0].detail
    assert v.to_json()["pass"] is False
