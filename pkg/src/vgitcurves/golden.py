"""The bundled corpus and the ten acceptance checks run by ``corpus-run``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from . import charts, jsonio
from .crimping import (EVEN, ODD, CrimpingVector, ValuedCrimping, ValuedEntry, crimping_equivalent,
                       crimping_weights, h_weight_table, limit_crimping)
from .curve import CurveGraph, arithmetic_genus
from .decompose import canonical_decomposition
from .degenerate import NO, is_maximally_degenerate, maximal_degeneration
from .isomorphism import curves_isomorphic
from .stability import stability
from .vgit import (MINUS, PLUS, StratumUnion, WeightSystem, brute_force_masks, in_minus, in_plus,
                   minus_locus, plus_locus, product_labels, product_system, restrict_system,
                   semi_invariant_monomials, unique_closed_point)

SEED = 20240611


@dataclass
class CorpusItem:
    name: str
    doc: dict

    @property
    def expect(self) -> dict:
        return self.doc.get("expect", {})


@dataclass
class Corpus:
    curves: dict[str, CorpusItem] = field(default_factory=dict)
    systems: dict[str, CorpusItem] = field(default_factory=dict)

    def curve(self, name: str) -> CurveGraph:
        return jsonio.curve_from_json(self.curves[name].doc)

    def system(self, name: str) -> WeightSystem:
        return jsonio.weight_system_from_json(self.systems[name].doc)


def load_corpus() -> Corpus:
    import json

    root = resources.files("vgitcurves") / "corpus"
    out = Corpus()
    for sub, target in (("curves", out.curves), ("systems", out.systems)):
        for f in sorted((root / sub).iterdir(), key=lambda p: p.name):
            if f.name.endswith(".json"):
                name = f.name[:-5]
                target[name] = CorpusItem(name, json.loads(f.read_text()))
    return out


@dataclass
class CriterionResult:
    id: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> dict:
        # wall-clock time is left out so reports stay byte-stable
        return {"id": self.id, "title": self.title, "pass": self.passed, "details": self.details}


class _Check:
    def __init__(self):
        self.ok = True
        self.details: list[str] = []

    def __call__(self, cond: bool, msg: str) -> None:
        if not cond:
            self.ok = False
            self.details.append(msg)

    def note(self, msg: str) -> None:
        self.details.append(msg)


# ---------------------------------------------------------------- criteria

def ramphoid_system() -> WeightSystem:
    return WeightSystem.build((1,), [("s_0", -10), ("s_1", -8), ("s_2", -6), ("s_3", -4), ("n", 1), ("c", 1)])


def criterion_1(corpus: Corpus) -> _Check:
    ck = _Check()
    ws = ramphoid_system()
    t = time.perf_counter()
    mi, pl = minus_locus(ws), plus_locus(ws)
    dt = time.perf_counter() - t
    ck(mi == StratumUnion.of([["s_0", "s_1", "s_2", "s_3"]]), f"minus locus {mi}")
    ck(pl == StratumUnion.of([["n", "c"]]), f"plus locus {pl}")
    ck(dt < 0.1, f"runtime {dt:.3f}s exceeds 0.1s")
    return ck


def monomial_even_system(m: int) -> WeightSystem:
    s = [(f"s_{l}", 2 * l - 4 * m - 2) for l in range(2 * m)]
    c = [(f"c_{l}", 2 * l - 1) for l in range(1, m)]
    return WeightSystem.build((1,), s + c)


def criterion_2(corpus: Corpus) -> _Check:
    ck = _Check()
    for m in (1, 2, 3):
        ws = monomial_even_system(m)
        s = [l for l in ws.labels if l.startswith("s_")]
        c = [l for l in ws.labels if l.startswith("c_")]
        ck(minus_locus(ws) == StratumUnion.of([s]), f"m={m}: minus {minus_locus(ws)}")
        ck(plus_locus(ws) == StratumUnion.of([c]), f"m={m}: plus {plus_locus(ws)}")
        doc = corpus.systems.get(f"monomial_even_m{m}")
        ck(doc is not None and jsonio.weight_system_from_json(doc.doc) == ws, f"m={m}: corpus system differs")
    return ck


def criterion_3(corpus: Corpus) -> _Check:
    ck = _Check()
    t = time.perf_counter()
    for m in (1, 2):
        for r in range(1, 6):
            ws = charts.chain_system(r, m)
            got, want = plus_locus(ws), charts.chain_chamber_formula(r, m)
            ck(got == want, f"r={r} m={m}: missing {want.minus(got)} extra {got.minus(want)}")
            ck(minus_locus(ws) == charts.chain_minus_formula(r, m), f"r={r} m={m}: minus locus differs")
    dt = time.perf_counter() - t
    ck(dt < 10, f"runtime {dt:.2f}s exceeds 10s")
    return ck


def criterion_4(corpus: Corpus) -> _Check:
    ck = _Check()
    cases, lengths, count = set(), [], 0
    for name, item in corpus.curves.items():
        e = item.expect
        if not e.get("crosscheck"):
            continue
        c, k = corpus.curve(name), e["k"]
        lws = charts.build_weight_system(c, k)
        rep = charts.crosscheck_system(lws)
        ck(rep["pass"], f"{name}: {rep['strata_diff']}")
        ck(lws.case == e["case"], f"{name}: case {lws.case}, expected {e['case']}")
        if e.get("rank"):
            ck(lws.rank == e["rank"], f"{name}: rank {lws.rank}, expected {e['rank']}")
        cases.add(lws.case)
        lengths += canonical_decomposition(c, k).lengths()
        count += 1
    ck(count >= 12, f"only {count} crosscheck curves")
    ck(cases == set(charts_cases()), f"cases covered {sorted(cases)}")
    ck(max(lengths, default=0) >= 4, f"longest link {max(lengths, default=0)}")
    for name in ("ramphoid_case_I", "case_II_L3"):
        lws = charts.build_weight_system(corpus.curve(name), corpus.curves[name].expect["k"])
        bad = charts.crosscheck_system(charts.flip_node_sign(lws))
        ck(not bad["pass"], f"negative control {name} unexpectedly passed")
    ws = corpus.system("flipped_node_control")
    ck(plus_locus(ws) != charts.chain_chamber_formula(3, 1), "flipped chain system matched the chain formula")
    ck.note(f"{count} curves, cases {', '.join(sorted(cases))}, links up to length {max(lengths, default=0)}")
    return ck


def charts_cases() -> tuple[str, ...]:
    from .decompose import CASES

    return CASES


def random_system(rng: random.Random, max_rank: int = 3, max_n: int = 8, max_w: int = 6) -> WeightSystem:
    r = rng.randint(1, max_rank)
    n = rng.randint(0, max_n)
    chi = tuple(rng.randint(-2, 2) for _ in range(r))
    if rng.random() < 0.8 and not any(chi):
        chi = (1,) * r
    coords = [(f"x{j}", tuple(rng.randint(-max_w, max_w) for _ in range(r))) for j in range(n)]
    return WeightSystem(r, tuple(coords), chi)


def _supports(ws: WeightSystem, rng: random.Random, limit: int = 24) -> list[frozenset[int]]:
    if ws.n <= 4:
        return [frozenset(j for j in range(ws.n) if (mask >> j) & 1) for mask in range(1 << ws.n)]
    return [frozenset(j for j in range(ws.n) if rng.random() < p)
            for p in (0.3, 0.5, 0.7) for _ in range(limit // 3)]


def oracle_agreement(ws: WeightSystem, rng: random.Random) -> list[str]:
    """Compare the LP decision with the brute-force 1-PS box on sampled supports and on the loci."""
    errs = []
    for which, dec in ((MINUS, in_minus), (PLUS, in_plus)):
        masks = brute_force_masks(ws, which)
        for s in _supports(ws, rng):
            want = sum(1 << j for j in s)
            bf = any(m & want == want for m in masks)
            lp, lam = dec(ws, s)
            if lp != bf:
                errs.append(f"{which} {sorted(s)}: lp={lp} brute={bf} on {ws.to_json()}")
            if lp:
                sign = 1 if which == MINUS else -1
                ok = sign * sum(a * b for a, b in zip(ws.character, lam)) >= 1 and all(
                    sum(a * b for a, b in zip(ws.coords[j][1], lam)) >= 0 for j in s)
                if not ok:
                    errs.append(f"{which} {sorted(s)}: witness {lam} does not certify")
        locus = minus_locus(ws) if which == MINUS else plus_locus(ws)
        labels = ws.labels
        bl = StratumUnion.of([[labels[j] for j in range(ws.n) if not (m >> j) & 1] for m in masks])
        if locus != bl:
            errs.append(f"{which} locus {locus} vs brute {bl} on {ws.to_json()}")
    return errs


def monomial_obstructions(ws: WeightSystem, degree: int = 6) -> list[str]:
    """A nonvanishing semi-invariant of the wrong sign rules a point out of the chamber."""
    errs = []
    for sign, dec in (("neg", in_minus), ("pos", in_plus)):
        seen = set()
        for a in semi_invariant_monomials(ws, sign, degree):
            s = frozenset(j for j, x in enumerate(a) if x)
            if s in seen:
                continue
            seen.add(s)
            if dec(ws, s)[0]:
                errs.append(f"{sign} monomial {a} is nonzero on a point the LP puts in the chamber")
    return errs


def product_law(ws1: WeightSystem, ws2: WeightSystem) -> list[str]:
    errs = []
    p = product_system(ws1, ws2)
    m1, m2 = product_labels(ws1, ws2)
    for name, loc in (("minus", minus_locus), ("plus", plus_locus)):
        want = StratumUnion.of([[m1[l] for l in J] for J in loc(ws1).strata]
                               + [[m2[l] for l in J] for J in loc(ws2).strata])
        got = loc(p)
        if got != want:
            errs.append(f"product {name}: {got} vs {want}")
    return errs


def restriction_law(ws: WeightSystem, z: list[str]) -> list[str]:
    errs = []
    sub = restrict_system(ws, z)
    for name, loc in (("minus", minus_locus), ("plus", plus_locus)):
        want = StratumUnion.of([[l for l in J if l not in z] for J in loc(ws).strata])
        got = loc(sub)
        if got != want:
            errs.append(f"restriction {name} to V({','.join(z)}): {got} vs {want}")
    return errs


def criterion_5(corpus: Corpus, systems: int = 200, pairs: int = 100) -> _Check:
    ck = _Check()
    rng = random.Random(SEED)
    for _ in range(systems):
        ws = random_system(rng)
        for e in oracle_agreement(ws, rng) + monomial_obstructions(ws):
            ck(False, e)
    for _ in range(pairs):
        a, b = random_system(rng, max_n=5), random_system(rng, max_n=5)
        for e in product_law(a, b):
            ck(False, e)
        z = [l for l in a.labels if rng.random() < 0.4]
        for e in restriction_law(a, z):
            ck(False, e)
    ck.details = ck.details[:10]
    ck.note(f"{systems} random systems, {pairs} product/restriction pairs, seed {SEED}")
    return ck


TRUTH_TABLE = (
    ("elliptic_tail_nodal", 2, "plain", True),
    ("elliptic_tail_nodal", 2, "plus", False),
    ("elliptic_tail_tacnodal", 3, "plain", False),
    ("elliptic_bridge_nodal", 3, "plain", True),
    ("elliptic_bridge_nodal", 3, "plus", False),
    ("weierstrass_tail_nodal", 4, "plain", True),
    ("weierstrass_tail_nodal", 4, "plus", False),
    ("elliptic_cusp_attached", 3, "plain", True),
)


def criterion_6(corpus: Corpus) -> _Check:
    ck = _Check()
    for name, k, variant, want in TRUTH_TABLE:
        v = stability(corpus.curve(name), k, variant)
        ck(v.passed == want, f"{name} k={k} {variant}: got {v.passed}, expected {want}")
    for name, item in corpus.curves.items():
        c = corpus.curve(name)
        for k, vs in item.expect.get("stability", {}).items():
            for variant, want in vs.items():
                got = stability(c, int(k), variant).passed
                ck(got == want, f"{name} k={k} {variant}: got {got}, expected {want}")
    return ck


def g11_family() -> dict[str, CurveGraph]:
    """Smooth elliptic, nodal rational and cuspidal rational one-pointed curves."""
    from .curve import Component, Singularity

    return {
        "smooth": CurveGraph((Component("E", 1, ("p",)),), (), (("E", "p"),)),
        "nodal": CurveGraph((Component("R", 0, ("a", "b", "p")),), (Singularity(1, (("R", "a"), ("R", "b"))),),
                            (("R", "p"),)),
        "cuspidal": CurveGraph((Component("R", 0, ("q", "p")),), (Singularity(2, (("R", "p"),)),),
                               (("R", "q"),)),
    }


def criterion_7(corpus: Corpus) -> _Check:
    ck = _Check()
    fam = g11_family()
    verdicts = {n: is_maximally_degenerate(c, 2).verdict for n, c in fam.items()}
    ck(verdicts == {"smooth": "no", "nodal": "no", "cuspidal": "yes"}, f"verdicts {verdicts}")
    for n in ("smooth", "nodal"):
        ck(curves_isomorphic(maximal_degeneration(fam[n], 2), fam["cuspidal"]), f"{n} does not degenerate to cuspidal")
    for n in ("g11_smooth", "g11_nodal", "g11_cuspidal"):
        ck(curves_isomorphic(corpus.curve(n), fam[n.split("_")[1]]), f"corpus {n} differs from the generated family")
    return ck


def degeneration_properties(c: CurveGraph, k: int) -> list[str]:
    errs = []
    g = maximal_degeneration(c, k)
    if arithmetic_genus(g) != arithmetic_genus(c):
        errs.append(f"genus {arithmetic_genus(c)} -> {arithmetic_genus(g)}")
    if len(g.marks) != len(c.marks):
        errs.append("mark count changed")
    if not stability(g, k).passed:
        errs.append("degeneration is not stable")
    if is_maximally_degenerate(g, k).verdict == NO:
        errs.append("degeneration is not maximally degenerate")
    if not curves_isomorphic(maximal_degeneration(g, k), g):
        errs.append("not idempotent")
    return errs


def criterion_8(corpus: Corpus) -> _Check:
    ck = _Check()
    runs = 0
    for name in corpus.curves:
        c = corpus.curve(name)
        for k in (2, 3, 4):
            if not stability(c, k).passed:
                continue
            runs += 1
            for e in degeneration_properties(c, k):
                ck(False, f"{name} k={k}: {e}")
    ck.note(f"{runs} (curve, k) pairs")
    return ck


def random_valued(rng: random.Random) -> ValuedCrimping:
    parity = rng.choice((EVEN, ODD))
    m = rng.randint(2, 5)
    entries = []
    for _ in range(m - 1):
        if rng.random() < 0.2:
            entries.append(ValuedEntry(None))
        else:
            entries.append(ValuedEntry(rng.randint(-12, 8), Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4))))
    return ValuedCrimping(parity, m, tuple(entries))


def limit_oracle(v: ValuedCrimping) -> tuple[int, tuple[Fraction, ...]]:
    """Smallest b by linear search, then read off the surviving leading terms."""
    ws = crimping_weights(v.m, v.parity)
    b = 0
    while not all(e.val is None or w * b + e.val >= 0 for w, e in zip(ws, v.entries)):
        b += 1
    return b, tuple(e.lead if e.val is not None and w * b + e.val == 0 else Fraction(0)
                    for w, e in zip(ws, v.entries))


def random_crimping(rng: random.Random) -> CrimpingVector:
    parity = rng.choice((EVEN, ODD))
    m = rng.randint(2, 4)
    return CrimpingVector(parity, m, tuple(Fraction(rng.choice([0, 1, -2, 3]), rng.randint(1, 3)) for _ in range(m - 1)))


def _scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.choice([1, 2, 3]))


# verbatim tables, m = 1..5
S_EVEN = {1: [], 2: [1], 3: [1, 3], 4: [1, 3, 5], 5: [1, 3, 5, 7]}
S_ODD = {1: [], 2: [1], 3: [1, 2], 4: [1, 2, 3], 5: [1, 2, 3, 4]}
H_ONE = {m: [-x for x in range(4, 4 * m + 3, 2)] for m in range(1, 6)}
H_TWO = {m: [-x for x in range(2, 2 * m + 3)] for m in range(1, 6)}


def criterion_9(corpus: Corpus) -> _Check:
    ck = _Check()
    rng = random.Random(SEED + 9)
    for _ in range(50):
        v = random_valued(rng)
        b, lim = limit_crimping(v)
        ob, olim = limit_oracle(v)
        ck((b, lim.entries) == (ob, olim), f"limit of {v}: {(b, lim.entries)} vs oracle {(ob, olim)}")
        if b > 0:
            ws = crimping_weights(v.m, v.parity)
            ck(any(e.val is not None and w * (b - 1) + e.val < 0 for w, e in zip(ws, v.entries)),
               f"b={b} is not minimal for {v}")
    for _ in range(50):
        c = random_crimping(rng)
        l1, l2 = _scalar(rng), _scalar(rng)
        c1 = c.scaled(l1)
        c2 = c1.scaled(l2)
        r = crimping_equivalent(c, c)
        ck(r is not None and c.scaled(r) == c, f"reflexivity fails on {c}")
        f = crimping_equivalent(c, c1)
        g = crimping_equivalent(c1, c)
        ck(f is not None and c.scaled(f) == c1, f"{c} ~ {c1} not found")
        ck(g is not None and c1.scaled(g) == c, f"symmetry fails on {c}, {c1}")
        h = crimping_equivalent(c, c2)
        ck(h is not None and c.scaled(h) == c2, f"transitivity fails on {c}, {c2}")
        if not c.is_monomial():
            ck(crimping_equivalent(c, CrimpingVector.monomial(c.m, c.parity)) is None,
               f"{c} equivalent to the monomial point")
    for m in range(1, 6):
        for got, want, what in ((crimping_weights(m, EVEN), S_EVEN[m], "S one-pointed"),
                                (crimping_weights(m, ODD), S_ODD[m], "S two-pointed"),
                                (h_weight_table(m, EVEN), H_ONE[m], "H one-pointed"),
                                (h_weight_table(m, ODD), H_TWO[m], "H two-pointed")):
            ck(list(got) == want, f"{what} m={m}: {got} vs {want}")
            ws = WeightSystem.build((1,), [(f"x{i}", w) for i, w in enumerate(got)])
            ck(unique_closed_point(ws), f"{what} m={m}: origin is not the unique closed point")
    return ck


CRITERIA: tuple[tuple[int, str, Callable[[Corpus], _Check]], ...] = (
    (1, "ramphoid worked example chambers", criterion_1),
    (2, "monomial-curve chambers, m = 1, 2, 3", criterion_2),
    (3, "chain chambers against the closed formula", criterion_3),
    (4, "local VGIT crosscheck on the curve corpus", criterion_4),
    (5, "LP against brute-force 1-PS oracle", criterion_5),
    (6, "stability truth table", criterion_6),
    (7, "closed points of the (1,1) family", criterion_7),
    (8, "degeneration properties on the corpus", criterion_8),
    (9, "crimping limits, orbits and weight tables", criterion_9),
)


def run_criteria(corpus: Corpus | None = None, only: set[int] | None = None) -> list[CriterionResult]:
    corpus = corpus or load_corpus()
    out = []
    for cid, title, fn in CRITERIA:
        if only and cid not in only:
            continue
        t = time.perf_counter()
        try:
            ck = fn(corpus)
            res = CriterionResult(cid, title, ck.ok, ck.details)
        except Exception as exc:  # a crash is a failed criterion, reported with its message
            res = CriterionResult(cid, title, False, [f"{type(exc).__name__}: {exc}"])
        res.seconds = time.perf_counter() - t
        out.append(res)
    return out


def item_reports(corpus: Corpus) -> list[dict]:
    """Per-item JSON verdicts; deterministic, used for the byte-stability check."""
    reps = []
    for name, item in corpus.curves.items():
        c = corpus.curve(name)
        rep: dict = {"name": name, "kind": "curve", "genus": arithmetic_genus(c), "stability": {}}
        for k in (2, 3, 4):
            rep["stability"][str(k)] = {v: stability(c, k, v).passed for v in ("minus", "plain", "plus")}
        k = item.expect.get("k")
        if k is not None and stability(c, k).passed:
            rep["maximally_degenerate"] = is_maximally_degenerate(c, k).verdict
            rep["decomposition"] = canonical_decomposition(c, k).summary()
            if item.expect.get("crosscheck"):
                rep["crosscheck"] = charts.crosscheck_local_vgit(c, k)
        reps.append(rep)
    for name, item in corpus.systems.items():
        ws = corpus.system(name)
        mi, pl = minus_locus(ws), plus_locus(ws)
        rep = {"name": name, "kind": "system", "minus": mi.to_json(), "plus": pl.to_json()}
        e = item.expect
        if e.get("minus") is not None:
            rep["matches_expected"] = mi == StratumUnion.of(e["minus"]) and pl == StratumUnion.of(e["plus"])
        reps.append(rep)
    return reps
