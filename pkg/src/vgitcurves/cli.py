"""Command-line interface: ``vgitcurves <command> ...``.

Exit codes: 0 ok, 1 negative verdict, 2 input error, 3 unknown verdict.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import charts, golden, jsonio
from .curve import validate
from .crimping import format_rational, limit_crimping
from .decompose import DecompositionError, NotStable, canonical_decomposition
from .degenerate import NO, UNKNOWN, YES, is_maximally_degenerate, maximal_degeneration
from .isomorphism import TooLarge
from .stability import VARIANTS, stability
from .vgit import DEFAULT_CAP, EnumerationTooLarge, minus_locus, plus_locus

OK, NEGATIVE, INPUT_ERROR, UNKNOWN_EXIT = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class Report:
    doc: dict
    text: list[str] = field(default_factory=list)
    code: int = OK


class _Style:
    def __init__(self, stream):
        self.on = hasattr(stream, "isatty") and stream.isatty() and "NO_COLOR" not in os.environ

    def verdict(self, word: str, good: bool | None) -> str:
        if not self.on:
            return word
        color = {True: "32", False: "31", None: "33"}[good]
        return f"\033[{color}m{word}\033[0m"


# ---------------------------------------------------------------- loaders

def _curve(path: str):
    c = jsonio.curve_from_json(jsonio.load_path(path))
    problems = validate(c)
    if problems:
        raise InputError("invalid curve: " + "; ".join(problems))
    return c


def _require_stable(c, k: int, variant: str) -> None:
    v = stability(c, k, variant)
    if not v.passed:
        raise NotStable(f"curve is not stable for k={k}, variant {variant}: {v.violations[0].detail}")


# ---------------------------------------------------------------- commands

def cmd_stability(a, st: _Style) -> Report:
    c = _curve(a.file)
    v = stability(c, a.k, a.variant)
    text = [f"A_{a.k} {a.variant}: " + st.verdict("stable" if v.passed else "not stable", v.passed)]
    text += [f"  [{x.rule}] {x.detail}" for x in v.violations]
    return Report(v.to_json(), text, OK if v.passed else NEGATIVE)


def cmd_decompose(a, st: _Style) -> Report:
    c = _curve(a.file)
    _require_stable(c, a.k, a.variant)
    d = canonical_decomposition(c, a.k)
    s = d.summary()
    text = [f"case {d.case}", f"core components: {', '.join(s['core_components']) or '(none)'}"]
    for i, app in enumerate(d.appendages, start=1):
        text.append(f"appendage {i}: {', '.join(app.components)}")
    return Report(s, text)


def cmd_closed(a, st: _Style) -> Report:
    c = _curve(a.file)
    _require_stable(c, a.k, a.variant)
    v = is_maximally_degenerate(c, a.k)
    good = {YES: True, NO: False, UNKNOWN: None}[v.verdict]
    text = ["maximally degenerate: " + st.verdict(v.verdict, good)] + [f"  {r}" for r in v.reasons]
    code = {YES: OK, NO: NEGATIVE, UNKNOWN: UNKNOWN_EXIT}[v.verdict]
    return Report(v.to_json(), text, code)


def cmd_degenerate(a, st: _Style) -> Report:
    c = _curve(a.file)
    _require_stable(c, a.k, a.variant)
    g = maximal_degeneration(c, a.k)
    doc = jsonio.curve_to_json(g)
    text = [f"{len(g.components)} components, {len(g.singularities)} singularities, {len(g.marks)} marks"]
    text += [f"  {x.id}: genus {x.genus}" for x in g.components]
    return Report(doc, text)


def cmd_weights(a, st: _Style) -> Report:
    c = _curve(a.file)
    _require_stable(c, a.k, a.variant)
    lws = charts.build_weight_system(c, a.k, a.core_block)
    text = [f"case {lws.case}, rank {lws.rank}, character {list(lws.ws.character)}"]
    text += [f"  {l:>10}  {lws.tags[l]:<12} {list(w)}" for l, w in lws.ws.coords]
    return Report(lws.to_json(), text)


def cmd_chambers(a, st: _Style) -> Report:
    ws = jsonio.weight_system_from_json(jsonio.load_path(a.file))
    mi, pl = minus_locus(ws, a.cap), plus_locus(ws, a.cap)
    return Report({"minus": mi.to_json(), "plus": pl.to_json()}, [f"minus: {mi}", f"plus:  {pl}"])


def cmd_crosscheck(a, st: _Style) -> Report:
    c = _curve(a.file)
    _require_stable(c, a.k, a.variant)
    rep = charts.crosscheck_local_vgit(c, a.k, a.core_block, a.cap)
    text = [f"case {rep['case']}, rank {rep['rank']}: " + st.verdict("pass" if rep["pass"] else "fail", rep["pass"])]
    for side in ("minus", "plus"):
        for kind in ("missing", "extra"):
            for J in rep["strata_diff"][side][kind]:
                text.append(f"  {side} {kind}: V({', '.join(J)})")
    return Report(rep, text, OK if rep["pass"] else NEGATIVE)


def cmd_chain_formula(a, st: _Style) -> Report:
    if a.r < 1 or a.m < 1:
        raise InputError("r and m must be >= 1")
    plus = charts.chain_chamber_formula(a.r, a.m)
    minus = charts.chain_minus_formula(a.r, a.m)
    doc = {"r": a.r, "m": a.m, "minus": minus.to_json(), "plus": plus.to_json()}
    text = [f"minus: {minus}", f"plus:  {plus}"]
    if a.verify:
        ws = charts.chain_system(a.r, a.m)
        ok = plus_locus(ws, a.cap) == plus and minus_locus(ws, a.cap) == minus
        doc["lp_agrees"] = ok
        text.append("LP agrees: " + st.verdict("yes" if ok else "no", ok))
        return Report(doc, text, OK if ok else NEGATIVE)
    return Report(doc, text)


def cmd_limit_crimp(a, st: _Style) -> Report:
    v = jsonio.valued_from_json(jsonio.load_path(a.file))
    b, lim = limit_crimping(v)
    doc = {"b": b, "limit": lim.to_json(), "monomial": lim.is_monomial()}
    return Report(doc, [f"b = {b}", "limit = (" + ", ".join(format_rational(x) for x in lim.entries) + ")"])


def cmd_corpus_run(a, st: _Style) -> Report:
    corpus = golden.load_corpus()
    only = set(a.only) if a.only else None
    results = golden.run_criteria(corpus, only)
    first = jsonio.dumps(golden.item_reports(corpus))
    second = jsonio.dumps(golden.item_reports(corpus))
    stable = first == second
    if only is None or 10 in only:
        listed = only is not None or {r.id for r in results} == set(range(1, 10))
        r10 = golden.CriterionResult(10, "CLI summary and byte-stable JSON reports", stable and listed,
                                     [] if stable else ["item reports differ between two runs"])
        results.append(r10)
    ok = all(r.passed for r in results)
    doc = {"pass": ok, "criteria": [r.to_json() for r in results],
           "corpus": {"curves": len(corpus.curves), "systems": len(corpus.systems)}}
    if a.items:
        doc["items"] = golden.item_reports(corpus)
    text = [f"corpus: {len(corpus.curves)} curves, {len(corpus.systems)} weight systems", ""]
    for r in results:
        text.append(f"criterion {r.id:>2}  {st.verdict('PASS' if r.passed else 'FAIL', r.passed)}  "
                    f"{r.title}  ({r.seconds:.2f}s)")
        text += [f"      {d}" for d in r.details[:5]]
    text += ["", "overall: " + st.verdict("PASS" if ok else "FAIL", ok)]
    return Report(doc, text, OK if ok else NEGATIVE)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vgitcurves", description="VGIT chambers and A_k-stable curves.")
    sub = p.add_subparsers(dest="command", required=True)

    def output(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="fmt", action="store_const", const="json", help="machine-readable output")
        g.add_argument("--text", dest="fmt", action="store_const", const="text", help="human-readable output (default)")
        sp.set_defaults(fmt="text")

    def curve_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="curve JSON")
        sp.add_argument("--k", type=int, choices=(2, 3, 4), required=True)
        sp.add_argument("--variant", choices=VARIANTS, default="plain")
        output(sp)
        sp.set_defaults(func=fn)
        return sp

    curve_cmd("stability", cmd_stability, "A_k stability verdict with witnesses")
    curve_cmd("decompose", cmd_decompose, "canonical decomposition into core and appendages")
    curve_cmd("closed", cmd_closed, "maximal degeneracy (closed point) verdict")
    curve_cmd("degenerate", cmd_degenerate, "isotrivial degeneration to a maximally degenerate curve")
    for name, fn, help_ in (("weights", cmd_weights, "torus weights on first-order deformations"),
                            ("crosscheck", cmd_crosscheck, "compare VGIT chambers with the expected loci")):
        sp = curve_cmd(name, fn, help_)
        sp.add_argument("--core-block", type=int, default=None, help="number of weight-zero coordinates")
        if name == "crosscheck":
            sp.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sp = sub.add_parser("chambers", help="minus and plus chambers of a weight system")
    sp.add_argument("file", help="weight-system JSON")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on weight rays")
    output(sp)
    sp.set_defaults(func=cmd_chambers)

    sp = sub.add_parser("chain-formula", help="closed-form chambers of an H_{m,2}-chain")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="also compute the chambers by LP")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    output(sp)
    sp.set_defaults(func=cmd_chain_formula)

    sp = sub.add_parser("limit-crimp", help="limit of a crimping family over a DVR")
    sp.add_argument("file", help="valued crimping JSON")
    output(sp)
    sp.set_defaults(func=cmd_limit_crimp)

    sp = sub.add_parser("corpus-run", help="run the bundled golden corpus and the acceptance checks")
    sp.add_argument("--only", type=int, nargs="*", help="criterion ids to run")
    sp.add_argument("--items", action="store_true", help="include per-item reports in the JSON output")
    output(sp)
    sp.set_defaults(func=cmd_corpus_run)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    st = _Style(stdout)
    try:
        rep = a.func(a, st)
    except (jsonio.SchemaError, InputError, EnumerationTooLarge, TooLarge) as exc:
        print(f"input error: {exc}", file=stderr)
        return INPUT_ERROR
    except (NotStable, charts.NotMaximallyDegenerate, DecompositionError) as exc:
        rep = Report({"error": type(exc).__name__, "message": str(exc)}, [str(exc)], NEGATIVE)
    if a.fmt == "json":
        stdout.write(jsonio.dumps(rep.doc))
    else:
        stdout.write("\n".join(rep.text) + "\n")
    return rep.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
