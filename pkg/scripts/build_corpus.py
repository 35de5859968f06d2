"""Regenerate the bundled golden corpus under src/vgitcurves/corpus/.

Expected verdicts are written by hand below; nothing here calls the library's
decision procedures, so the corpus stays an independent reference.
"""

from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1] / "src" / "vgitcurves" / "corpus"


def comp(cid, genus, points, weierstrass=()):
    return {"id": cid, "genus": genus, "points": list(points), "weierstrass": list(weierstrass)}


def sing(k, *branches, crimping=None):
    if crimping is None:
        crimping = ["0"] if k == 4 else []
    return {"k": k, "branches": [list(b) for b in branches], "crimping": crimping}


def curve(components, singularities, marks=(), decls=(), note="", expect=None):
    return {"components": components, "singularities": singularities, "marks": [list(m) for m in marks],
            "h_declarations": list(decls), "note": note, "expect": expect or {}}


def genus2_core(cid="K", pts=("x",)):
    # generic genus-2 component, no Weierstrass declarations
    return comp(cid, 2, pts)


def cusp_tail(cid, at):
    return [comp(cid, 0, ("q", "p"))], [sing(1, at, (cid, "q")), sing(2, (cid, "p"))]


def ramphoid_tail(cid, at, c="0"):
    return [comp(cid, 0, ("q", "p"))], [sing(1, at, (cid, "q")), sing(4, (cid, "p"), crimping=[c])]


def tac_bridge(a, b):
    """Monomial H_{1,2}-bridge: rational a and b joined at a tacnode; free points a.u, b.v."""
    return [comp(a, 0, ("u", "t")), comp(b, 0, ("t", "v"))], [sing(3, (a, "t"), (b, "t"))]


def link(prefix, length):
    """Bridges joined end to end at nodes; returns comps, sings, first end, last end."""
    comps, sings = [], []
    prev = None
    first = None
    for j in range(1, length + 1):
        a, b = f"{prefix}{j}a", f"{prefix}{j}b"
        cs, ss = tac_bridge(a, b)
        comps += cs
        sings += ss
        if prev is None:
            first = (a, "u")
        else:
            sings.append(sing(1, prev, (a, "u")))
        prev = (b, "v")
    return comps, sings, first, prev


CURVES: dict[str, dict] = {}
SYSTEMS: dict[str, dict] = {}


def add(name, doc):
    CURVES[name] = doc


# ---------------------------------------------------------------- stability truth table

add("elliptic_tail_nodal", curve(
    [genus2_core("K"), comp("E", 1, ("q",))], [sing(1, ("K", "x"), ("E", "q"))],
    note="Genus-3 stable curve with a nodally attached elliptic tail; removed from the A_2^+ locus, "
         "kept in the A_2 locus.",
    expect={"stability": {"2": {"minus": True, "plain": True, "plus": False}, "3": {"minus": False}}}))

add("elliptic_tail_tacnodal", curve(
    [genus2_core("K", ("x",)), comp("E", 1, ("q",))], [sing(3, ("K", "x"), ("E", "q"))],
    note="Elliptic tail meeting a genus-2 component in a tacnode; a tacnodally attached elliptic "
         "tail is a destabilizing H_{1,1}-curve, so the curve is not A_3-stable.",
    expect={"stability": {"3": {"plain": False, "plus": False}, "4": {"minus": False}}}))

add("elliptic_bridge_nodal", curve(
    [genus2_core("K", ("x", "y")), comp("E", 1, ("q1", "q2"))],
    [sing(1, ("K", "x"), ("E", "q1")), sing(1, ("K", "y"), ("E", "q2"))],
    note="Elliptic bridge attached at two nodes; removed at A_3^+ but A_3-stable.",
    expect={"stability": {"3": {"minus": True, "plain": True, "plus": False}, "4": {"minus": False}}}))

add("weierstrass_tail_nodal", curve(
    [genus2_core("K"), comp("W", 2, ("q",), ("q",))], [sing(1, ("K", "x"), ("W", "q"))],
    note="Genus-2 tail attached at a node through a declared Weierstrass point; a destabilizing "
         "H_{2,1}-tail for A_4^+ only.",
    expect={"stability": {"4": {"plain": True, "plus": False}}}))

add("weierstrass_tail_undeclared", curve(
    [genus2_core("K"), comp("W", 2, ("q",))], [sing(1, ("K", "x"), ("W", "q"))],
    note="Same shape without the Weierstrass declaration: no H-structure is derived, so A_4^+-stable.",
    expect={"stability": {"4": {"plain": True, "plus": True}}}))

add("elliptic_cusp_attached", curve(
    [comp("E", 1, ("p",))], [sing(2, ("E", "p"))],
    note="Genus-1 component carrying a cusp: an elliptic tail with A_2-attaching; A_2 is below the "
         "tail threshold A_3, so the curve survives A_3.",
    expect={"stability": {"3": {"plain": True, "plus": True}}}))

add("smooth_genus3", curve(
    [comp("C", 3, ())], [],
    note="Smooth genus-3 curve: stable for every k and variant.",
    expect={"stability": {str(k): {v: True for v in ("minus", "plain", "plus")} for k in (2, 3, 4)}}))

add("rational_nodal_tail", curve(
    [genus2_core("K"), comp("R", 0, ("q",))], [sing(1, ("K", "x"), ("R", "q"))],
    note="Rational tail with a single node: omega has degree -1 on it, not stable.",
    expect={"stability": {"2": {"plain": False}}}))

# ---------------------------------------------------------------- (g,n) = (1,1) family

add("g11_smooth", curve(
    [comp("E", 1, ("p",))], [], marks=[("E", "p")],
    note="Smooth one-pointed elliptic curve; degenerates isotrivially to the cuspidal rational curve.",
    expect={"k": 2, "maximally_degenerate": "no", "degenerates_to": "g11_cuspidal"}))

add("g11_nodal", curve(
    [comp("R", 0, ("a", "b", "p"))], [sing(1, ("R", "a"), ("R", "b"))], marks=[("R", "p")],
    note="One-pointed nodal rational curve; degenerates isotrivially to the cuspidal rational curve.",
    expect={"k": 2, "maximally_degenerate": "no", "degenerates_to": "g11_cuspidal"}))

add("g11_cuspidal", curve(
    [comp("R", 0, ("q", "p"))], [sing(2, ("R", "p"))], marks=[("R", "q")],
    note="One-pointed rational cuspidal curve: the unique closed point of the (1,1) A_2 stack (Case I'').",
    expect={"k": 2, "maximally_degenerate": "yes", "case": "I''", "crosscheck": True, "rank": 1}))

# ---------------------------------------------------------------- maximally degenerate, even k

cs, ss = cusp_tail("T", ("K", "x"))
add("case_I_k2_r1", curve(
    [genus2_core("K")] + cs, ss,
    note="Genus-2 core with one nodal monomial H_{1,1}-tail (rational cuspidal).",
    expect={"k": 2, "maximally_degenerate": "yes", "case": "I", "crosscheck": True, "rank": 1}))

c1, s1 = cusp_tail("T1", ("K", "x"))
c2, s2 = cusp_tail("T2", ("K", "y"))
add("case_I_k2_r2", curve(
    [genus2_core("K", ("x", "y"))] + c1 + c2, s1 + s2,
    note="Genus-2 core with two nodal monomial H_{1,1}-tails.",
    expect={"k": 2, "maximally_degenerate": "yes", "case": "I", "crosscheck": True, "rank": 2}))

cs, ss = ramphoid_tail("T", ("K", "x"))
add("ramphoid_case_I", curve(
    [genus2_core("K")] + cs, ss,
    note="Genus-2 core with one nodal monomial ramphoid tail: the worked ramphoid example, "
         "s weights -10,-8,-6,-4 and n, c of weight 1.",
    expect={"k": 4, "maximally_degenerate": "yes", "case": "I", "crosscheck": True, "rank": 1,
            "stability": {"4": {"minus": False, "plain": True, "plus": False}}}))

c1, s1 = ramphoid_tail("T1", ("K", "x"))
c2, s2 = ramphoid_tail("T2", ("K", "y"))
add("case_I_k4_r2", curve(
    [genus2_core("K", ("x", "y"))] + c1 + c2, s1 + s2,
    note="Genus-2 core with two nodal monomial H_{2,1}-tails.",
    expect={"k": 4, "maximally_degenerate": "yes", "case": "I", "crosscheck": True, "rank": 2}))

add("case_Iprime_k2", curve(
    [comp("A", 0, ("q", "p")), comp("B", 0, ("q", "p"))],
    [sing(1, ("A", "q"), ("B", "q")), sing(2, ("A", "p")), sing(2, ("B", "p"))],
    note="Two rational cuspidal curves joined at a node (Case I').",
    expect={"k": 2, "maximally_degenerate": "yes", "case": "I'", "crosscheck": True, "rank": 2}))

add("case_Iprime_k4", curve(
    [comp("A", 0, ("q", "p")), comp("B", 0, ("q", "p"))],
    [sing(1, ("A", "q"), ("B", "q")), sing(4, ("A", "p"), crimping=["0"]), sing(4, ("B", "p"), crimping=["0"])],
    note="Two monomial ramphoid curves joined at a node (Case I').",
    expect={"k": 4, "maximally_degenerate": "yes", "case": "I'", "crosscheck": True, "rank": 2}))

add("case_Idprime_k4", curve(
    [comp("R", 0, ("q", "p"))], [sing(4, ("R", "p"), crimping=["0"])], marks=[("R", "q")],
    note="One-pointed monomial H_{2,1}-curve (Case I'').",
    expect={"k": 4, "maximally_degenerate": "yes", "case": "I''", "crosscheck": True, "rank": 1}))

# ---------------------------------------------------------------- maximally degenerate, odd k

for L in (1, 2, 3, 4):
    lc, ls, first, last = link("Z", L)
    add(f"case_II_L{L}", curve(
        [genus2_core("K", ("x", "y"))] + lc,
        ls + [sing(1, ("K", "x"), first), sing(1, ("K", "y"), last)],
        note=f"Genus-2 core with one H_{{1,2}}-link of length {L} (monomial tacnodal bridges) attached "
             "at two nodes.",
        expect={"k": 3, "maximally_degenerate": "yes", "case": "II", "crosscheck": True, "rank": L,
                "link_lengths": [L]}))

lc, ls, first, last = link("Z", 2)
add("case_II_marked_end", curve(
    [genus2_core("K")] + lc, ls + [sing(1, ("K", "x"), first)], marks=[last],
    note="Genus-2 core with a length-2 link whose far end is a marked point; no node coordinate "
         "at the marked end.",
    expect={"k": 3, "maximally_degenerate": "yes", "case": "II", "crosscheck": True, "rank": 2,
            "link_lengths": [2]}))

for L in (1, 2):
    lc, ls, first, last = link("Z", L)
    add(f"case_IIprime_L{L}", curve(
        lc, ls, marks=[first, last],
        note=f"H_{{1,2}}-link of length {L} with both ends marked (Case II').",
        expect={"k": 3, "maximally_degenerate": "yes", "case": "II'", "crosscheck": True, "rank": L}))

for L in (1, 2, 3):
    lc, ls, first, last = link("Z", L)
    add(f"case_IIdprime_L{L}", curve(
        lc, ls + [sing(1, last, first)],
        note=f"Cyclic H_{{1,2}}-link of length {L}: the two ends are joined at a node (Case II'').",
        expect={"k": 3, "maximally_degenerate": "yes", "case": "II''", "crosscheck": True, "rank": L}))

# ---------------------------------------------------------------- not maximally degenerate

add("genus2_internal_cusp", curve(
    [comp("K", 1, ("c", "p"))], [sing(2, ("K", "c"))], marks=[("K", "p")],
    note="Genus-1 component with a cusp and a mark (arithmetic genus 2): the cusp is not on a nodal "
         "elliptic tail, so clause 1 fails; degeneration sprouts a monomial tail.",
    expect={"k": 2, "maximally_degenerate": "no"}))

add("ramphoid_crimped_internal", curve(
    [comp("K", 2, ("r", "p"))], [sing(4, ("K", "r"), crimping=["2"])], marks=[("K", "p")],
    note="Genus-2 component with a crimped ramphoid cusp and one mark (arithmetic genus 4); the "
         "ramphoid cusp moves to a nodal monomial tail under degeneration.",
    expect={"k": 4, "maximally_degenerate": "no"}))

cs, ss = ramphoid_tail("T", ("K", "x"), c="3")
add("ramphoid_tail_crimped", curve(
    [genus2_core("K")] + cs, ss,
    note="Nodal rational tail with a crimped ramphoid cusp: not hyperelliptic, so the A_4 point is "
         "not on an H-tail and clause 1 fails.",
    expect={"k": 4, "maximally_degenerate": "no"}))

add("smooth_genus2", curve(
    [comp("C", 2, ())], [],
    note="Smooth genus-2 curve at k=2: clauses 1 and 2 are vacuous and the core is closed, so it "
         "counts as maximally degenerate.",
    expect={"k": 2, "maximally_degenerate": "yes", "case": "I", "crosscheck": True, "rank": 0}))

cs, ss = ramphoid_tail("T", ("K", "x"))
add("tacnodal_core_k4", curve(
    [comp("K", 0, ("a", "b", "x"))] + cs, [sing(3, ("K", "a"), ("K", "b"))] + ss,
    note="Monomial ramphoid tail on a rational core with a self-tacnode; closedness of a tacnodal "
         "core is not characterized, so the verdict is unknown.",
    expect={"k": 4, "maximally_degenerate": "unknown"}))


# ---------------------------------------------------------------- weight systems

def system(rank, chi, coords, minus, plus, note):
    return {"rank": rank, "character": list(chi),
            "coords": [{"label": l, "weights": list(w)} for l, w in coords],
            "note": note, "expect": {"minus": minus, "plus": plus}}


SYSTEMS["ramphoid"] = system(
    1, (1,), [("s_0", (-10,)), ("s_1", (-8,)), ("s_2", (-6,)), ("s_3", (-4,)), ("n", (1,)), ("c", (1,))],
    [["s_0", "s_1", "s_2", "s_3"]], [["c", "n"]],
    "Deformations of a nodal ramphoid tail.")
for m in (1, 2, 3):
    s = [(f"s_{l}", (2 * l - 4 * m - 2,)) for l in range(2 * m)]
    c = [(f"c_{l}", (2 * l - 1,)) for l in range(1, m)]
    SYSTEMS[f"monomial_even_m{m}"] = system(
        1, (1,), s + c, [[x for x, _ in s]], [[x for x, _ in c]],
        f"Monomial H_{{{m},1}}-curve: singularity block against crimping block.")
SYSTEMS["chain_m1_r3"] = system(
    3, (1, 1, 1),
    [(f"s_{j}_{l}", tuple(l - 4 if i == j - 1 else 0 for i in range(3))) for j in (1, 2, 3) for l in range(3)]
    + [("n_0", (1, 0, 0)), ("n_1", (1, 1, 0)), ("n_2", (0, 1, 1)), ("n_3", (0, 0, 1))],
    [[f"s_{j}_{l}" for l in range(3)] for j in (1, 2, 3)],
    sorted([["n_0", "n_1"], ["n_1", "n_2"], ["n_2", "n_3"], ["n_0", "n_3", "s_2_0", "s_2_1", "s_2_2"]]),
    "H_{1,2}-chain of length 3 with end nodes.")
SYSTEMS["zero_character"] = system(
    2, (0, 0), [("x", (1, 0)), ("y", (-1, 2))], [], [],
    "Trivial character: no 1-PS pairs nonzero with it, so both chambers are empty.")
SYSTEMS["opposite_rank2"] = system(
    2, (1, 1), [("x", (1, -1)), ("y", (-1, 1))], [[]], [[]],
    "Weights on the antidiagonal: the 1-PS (1,1) fixes every coordinate and pairs positively with the "
    "character, so every point lies in both chambers.")
SYSTEMS["h_table_odd_m1"] = system(
    1, (1,), [("s_0", (-2,)), ("s_1", (-3,)), ("s_2", (-4,))], [["s_0", "s_1", "s_2"]], [[]],
    "Weight table of the H_{1,2} quotient: all weights negative, origin is the unique closed point.")
SYSTEMS["h_table_even_m2"] = system(
    1, (1,), [("s_0", (-4,)), ("s_1", (-6,)), ("s_2", (-8,)), ("s_3", (-10,))], [["s_0", "s_1", "s_2", "s_3"]], [[]],
    "Weight table of the H_{2,1} quotient.")
SYSTEMS["crimping_even_m3"] = system(
    1, (1,), [("c_1", (1,)), ("c_2", (3,))], [[]], [["c_1", "c_2"]],
    "Crimping weights for A_6: positive, so the monomial point is the unique closed orbit.")
SYSTEMS["mixed_rank2"] = system(
    2, (1, 1), [("a", (-1, 0)), ("b", (0, -1)), ("c", (1, 1)), ("d", (2, -1))],
    [["a"], ["b", "d"]], [["c"]],
    "Small rank-2 system with overlapping strata, hand-checked against its HM inequalities.")
SYSTEMS["flipped_node_control"] = system(
    3, (1, 1, 1),
    [(f"s_{j}_{l}", tuple(l - 4 if i == j - 1 else 0 for i in range(3))) for j in (1, 2, 3) for l in range(3)]
    + [("n_0", (-1, 0, 0)), ("n_1", (1, 1, 0)), ("n_2", (0, 1, 1)), ("n_3", (0, 0, 1))],
    None, None,
    "Negative control: chain of length 3 with the sign of n_0 flipped; must disagree with the chain formula.")


VALUED = {
    "even_m2_pole3": {"parity": "even", "m": 2, "entries": [{"val": -3, "lead": "2/1"}],
                      "note": "Single weight-1 entry with a pole of order 3: three blow-ups, leading term survives.",
                      "expect": {"b": 3, "limit": ["2/1"]}},
    "even_m3_mixed": {"parity": "even", "m": 3, "entries": [{"val": -1, "lead": "1/1"}, {"val": -6, "lead": "5/2"}],
                      "note": "Weights 1 and 3: b = 2 is forced by the second entry, the first entry dies.",
                      "expect": {"b": 2, "limit": ["0/1", "5/2"]}},
    "odd_m3_regular": {"parity": "odd", "m": 3, "entries": [{"val": 2, "lead": "1/1"}, {"val": "inf", "lead": "0/1"}],
                       "note": "No poles: b = 0 and the limit is the monomial point.",
                       "expect": {"b": 0, "limit": ["0/1", "0/1"]}},
}


def main() -> None:
    for sub, docs in (("curves", CURVES), ("systems", SYSTEMS), ("valued", VALUED)):
        d = ROOT / sub
        d.mkdir(parents=True, exist_ok=True)
        for old in d.glob("*.json"):
            old.unlink()
        for name, doc in docs.items():
            (d / f"{name}.json").write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    print(f"wrote {len(CURVES)} curves, {len(SYSTEMS)} systems and {len(VALUED)} valued crimpings under {ROOT}")


if __name__ == "__main__":
    main()
