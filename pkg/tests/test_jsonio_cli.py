import io
import json
from importlib.resources import files

import pytest

from vgitcurves import cli, jsonio
from vgitcurves.isomorphism import curves_isomorphic

CORPUS = files("vgitcurves") / "corpus"


def _docs(kind):
    return sorted(p.name for p in (CORPUS / kind).iterdir() if p.name.endswith(".json"))


def _strip(doc):
    return {k: v for k, v in doc.items() if k not in ("note", "expect")}


@pytest.mark.parametrize("name", _docs("curves"))
def test_curve_round_trip(name):
    doc = _strip(json.loads((CORPUS / "curves" / name).read_text()))
    c = jsonio.curve_from_json(doc)
    again = jsonio.curve_from_json(jsonio.curve_to_json(c))
    assert again == c
    assert jsonio.curve_to_json(again) == jsonio.curve_to_json(c)
    assert curves_isomorphic(again, c)


@pytest.mark.parametrize("name", _docs("systems"))
def test_system_round_trip(name):
    doc = _strip(json.loads((CORPUS / "systems" / name).read_text()))
    ws = jsonio.weight_system_from_json(doc)
    assert jsonio.weight_system_from_json(jsonio.weight_system_to_json(ws)) == ws


@pytest.mark.parametrize("name", _docs("valued"))
def test_valued_round_trip(name):
    doc = _strip(json.loads((CORPUS / "valued" / name).read_text()))
    v = jsonio.valued_from_json(doc)
    assert jsonio.valued_from_json(jsonio.valued_to_json(v)) == v


def test_strata_round_trip():
    from vgitcurves.vgit import StratumUnion
    for u in (StratumUnion.of([]), StratumUnion.of([[]]), StratumUnion.of([["a", "b"], ["c"]])):
        assert jsonio.strata_from_json(jsonio.strata_to_json(u)) == u


@pytest.mark.parametrize("doc, pointer", [
    ({"components": [{"id": "A", "genus": "x", "points": []}]}, "/components/0/genus"),
    ({"components": "nope"}, "/components"),
    ({}, "/components"),
])
def test_curve_schema_pointers(doc, pointer):
    with pytest.raises(jsonio.SchemaError) as info:
        jsonio.curve_from_json(doc)
    assert info.value.pointer == pointer


def test_system_schema_pointer():
    with pytest.raises(jsonio.SchemaError) as info:
        jsonio.weight_system_from_json({"rank": 1, "character": [1], "coords": [{"label": "a", "weight": [1, 2]}]})
    assert info.value.pointer.startswith("/coords/0")


def test_dumps_is_canonical():
    assert jsonio.dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


# ---------------------------------------------------------------- CLI

def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def curve_path(name):
    return str(CORPUS / "curves" / f"{name}.json")


def test_stability_exit_codes():
    assert run("stability", curve_path("elliptic_tail_nodal"), "--k", "2")[0] == cli.OK
    code, out, _ = run("stability", curve_path("elliptic_tail_nodal"), "--k", "2", "--variant", "plus", "--json")
    assert code == cli.NEGATIVE and json.loads(out)["pass"] is False


def test_closed_exit_codes():
    assert run("closed", curve_path("g11_cuspidal"), "--k", "2")[0] == cli.OK
    assert run("closed", curve_path("g11_smooth"), "--k", "2")[0] == cli.NEGATIVE
    assert run("closed", curve_path("tacnodal_core_k4"), "--k", "4")[0] == cli.UNKNOWN_EXIT


def test_unstable_input_is_negative():
    code, out, _ = run("decompose", curve_path("rational_nodal_tail"), "--k", "2", "--json")
    assert code == cli.NEGATIVE and json.loads(out)["error"] == "NotStable"


def test_commands_produce_json():
    code, out, _ = run("decompose", curve_path("case_II_L3"), "--k", "3", "--json")
    assert code == cli.OK and json.loads(out)["link_lengths"] == [3]
    code, out, _ = run("crosscheck", curve_path("case_II_L3"), "--k", "3", "--json")
    assert code == cli.OK and json.loads(out)["pass"]
    code, out, _ = run("weights", curve_path("ramphoid_case_I"), "--k", "4", "--core-block", "0", "--json")
    assert code == cli.OK and "k_1" not in json.loads(out)["labels"]
    code, out, _ = run("degenerate", curve_path("g11_smooth"), "--k", "2", "--json")
    assert code == cli.OK and curves_isomorphic(jsonio.curve_from_json(json.loads(out)),
                                                jsonio.curve_from_json(_strip(json.loads(
                                                    (CORPUS / "curves" / "g11_cuspidal.json").read_text()))))
    code, out, _ = run("chambers", str(CORPUS / "systems" / "ramphoid.json"), "--json")
    assert code == cli.OK and json.loads(out)["plus"] == {"strata": [["c", "n"]]}
    code, out, _ = run("chain-formula", "--r", "3", "--m", "1", "--verify", "--json")
    assert code == cli.OK and json.loads(out)["lp_agrees"] is True
    code, out, _ = run("limit-crimp", str(CORPUS / "valued" / "even_m2_pole3.json"), "--json")
    assert code == cli.OK and json.loads(out)["b"] == 3


def test_text_output_has_no_color_off_tty():
    code, out, _ = run("stability", curve_path("smooth_genus3"), "--k", "3")
    assert code == cli.OK and out == "A_3 plain: stable\n"


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"components": [{"id": "A", "genus": "x", "points": []}]}')
    code, _, err = run("stability", str(bad), "--k", "2")
    assert code == cli.INPUT_ERROR and "/components/0/genus" in err
    bad.write_text("{not json")
    assert run("stability", str(bad), "--k", "2")[0] == cli.INPUT_ERROR
    assert run("stability", str(tmp_path / "missing.json"), "--k", "2")[0] == cli.INPUT_ERROR
    assert run("stability", curve_path("smooth_genus3"), "--k", "7")[0] == cli.INPUT_ERROR
    assert run("chain-formula", "--r", "0", "--m", "1")[0] == cli.INPUT_ERROR
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"components": [{"id": "A", "genus": 1, "points": ["p"]}], "marks": []}))
    code, _, err = run("stability", str(invalid), "--k", "2")
    assert code == cli.INPUT_ERROR and "neither marked" in err
    code, _, _ = run("chambers", str(CORPUS / "systems" / "ramphoid.json"), "--cap", "0")
    assert code == cli.INPUT_ERROR


def test_json_output_is_byte_stable():
    args = ("crosscheck", curve_path("case_IIdprime_L3"), "--k", "3", "--json")
    assert run(*args)[1] == run(*args)[1]
