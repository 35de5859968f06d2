import pytest

from vgitcurves import charts
from vgitcurves.crimping import crimping_weights, h_weight_table
from vgitcurves.golden import H_ONE, H_TWO, S_EVEN, S_ODD
from vgitcurves.vgit import StratumUnion, minus_locus, plus_locus


def _crosscheck_names():
    from vgitcurves.golden import load_corpus
    return sorted(n for n, item in load_corpus().curves.items() if item.expect.get("crosscheck"))


@pytest.mark.parametrize("name", _crosscheck_names())
def test_crosscheck(corpus, name):
    e = corpus.curves[name].expect
    lws = charts.build_weight_system(corpus.curve(name), e["k"])
    rep = charts.crosscheck_system(lws)
    assert rep["pass"], rep["strata_diff"]
    assert lws.case == e["case"]
    if e["rank"]:
        assert lws.rank == e["rank"]
    else:
        # rank zero is carried as a trivial character
        assert not any(lws.ws.character)


def test_ramphoid_weights(corpus):
    lws = charts.build_weight_system(corpus.curve("ramphoid_case_I"), 4)
    w = dict(lws.ws.coords)
    assert [w[f"s_1_{i}"][0] for i in range(4)] == H_ONE[2][::-1]
    assert w["c_1_1"] == (1,) and w["n_1"] == (1,)
    assert lws.ws.character == (1,)
    assert all(w[l] == (0,) for l, t in lws.tags.items() if t == "kore")


def test_iprime_weights(corpus):
    lws = charts.build_weight_system(corpus.curve("case_Iprime_k2"), 2)
    assert dict(lws.ws.coords) == {"s_1_0": (-6, 0), "s_1_1": (-4, 0), "s_2_0": (0, -6),
                                   "s_2_1": (0, -4), "n": (1, 1)}
    assert lws.expected_h() == StratumUnion.of([["n"]])


def test_link_weights(corpus):
    lws = charts.build_weight_system(corpus.curve("case_II_L3"), 3)
    w = dict(lws.ws.coords)
    assert [w[f"s_1_2_{i}"][1] for i in range(3)] == H_TWO[1][::-1]
    assert [w[f"n_1_{i}"] for i in range(4)] == [(1, 0, 0), (1, 1, 0), (0, 1, 1), (0, 0, 1)]


def test_idprime_m1_locus(corpus):
    lws = charts.build_weight_system(corpus.curve("g11_cuspidal"), 2)
    assert lws.expected_h() == StratumUnion.of([[]])
    assert plus_locus(lws.ws) == StratumUnion.of([[]])


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_weight_tables(m):
    assert crimping_weights(m, "even") == S_EVEN[m]
    assert crimping_weights(m, "odd") == S_ODD[m]
    assert h_weight_table(m, "even") == H_ONE[m]
    assert h_weight_table(m, "odd") == H_TWO[m]


@pytest.mark.parametrize("core_block", [0, 1, 7])
def test_kore_block_is_invisible(corpus, core_block):
    lws = charts.build_weight_system(corpus.curve("case_II_L2"), 3, core_block)
    assert sum(1 for t in lws.tags.values() if t == "kore") == core_block
    assert charts.crosscheck_system(lws)["pass"]


@pytest.mark.parametrize("name", ["ramphoid_case_I", "case_II_L3", "case_Iprime_k4"])
def test_negative_controls(corpus, name):
    k = corpus.curves[name].expect["k"]
    lws = charts.build_weight_system(corpus.curve(name), k)
    assert not charts.crosscheck_system(charts.flip_node_sign(lws))["pass"]


def test_not_maximally_degenerate_rejected(corpus):
    with pytest.raises(charts.NotMaximallyDegenerate):
        charts.build_weight_system(corpus.curve("g11_smooth"), 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("m", [1, 2])
def test_chain_formula(r, m):
    ws = charts.chain_system(r, m)
    assert plus_locus(ws) == charts.chain_chamber_formula(r, m)
    assert minus_locus(ws) == charts.chain_minus_formula(r, m)


def test_chain_formula_matches_corpus(corpus):
    ws = corpus.system("chain_m1_r3")
    assert plus_locus(ws) == charts.chain_chamber_formula(3, 1)
    assert plus_locus(corpus.system("flipped_node_control")) != charts.chain_chamber_formula(3, 1)


@pytest.mark.parametrize("name", ["ramphoid", "monomial_even_m1", "monomial_even_m2", "monomial_even_m3",
                                  "chain_m1_r3", "zero_character", "opposite_rank2", "h_table_odd_m1",
                                  "h_table_even_m2", "crimping_even_m3", "mixed_rank2"])
def test_corpus_systems(corpus, name):
    item = corpus.systems[name]
    ws = corpus.system(name)
    want = item.expect
    assert minus_locus(ws) == StratumUnion.of(want["minus"])
    assert plus_locus(ws) == StratumUnion.of(want["plus"])
