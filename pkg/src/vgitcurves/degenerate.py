"""Maximal degeneracy (closed points) and isotrivial degeneration to it."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .curve import Component, CurveGraph, Point, Singularity, crimping_length
from .decompose import Decomposition, NotStable, canonical_decomposition
from .hcurves import HCurve, destabilizing_chains, destabilizing_tails
from .isomorphism import curves_isomorphic, invariant_hash
from .stability import stability

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class ClosednessVerdict:
    verdict: str
    reasons: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {"maximally_degenerate": self.verdict, "reasons": list(self.reasons)}


def nodal_appendages(c: CurveGraph, k: int) -> list[HCurve]:
    """Nodally attached H_{m,1}-tails (k even) or H_{m,2}-bridges (k odd)."""
    m = k // 2
    if k % 2 == 0:
        return destabilizing_tails(c, m)
    return [ch.bridges[0] for ch in destabilizing_chains(c, m) if ch.length == 1]


def _require_stable(c: CurveGraph, k: int) -> None:
    v = stability(c, k, "plain")
    if not v.passed:
        raise NotStable(f"curve is not A_{k}-stable: {v.violations[0].detail}")


def core_closed(d: Decomposition) -> tuple[str, str]:
    """Closedness of the core as an A_k^- curve."""
    if d.k in (2, 3):
        return YES, f"closed in the A_{d.k}^- stack (every point closed)"
    core = d.core
    if core is None or all(s.k != 3 for s in core.singularities):
        return YES, "core is tacnode-free, closed among pseudostable curves"
    return UNKNOWN, "core carries tacnodes; closed points of the A_4^- stack are not characterized"


def is_maximally_degenerate(c: CurveGraph, k: int) -> ClosednessVerdict:
    _require_stable(c, k)
    apps = nodal_appendages(c, k)
    covered = {s for a in apps for s in a.internal}
    reasons = []
    loose = [s for s, sing in enumerate(c.singularities) if sing.k == k and s not in covered]
    if loose:
        reasons.append(f"clause 1 fails: A_{k} singularit{'y' if len(loose) == 1 else 'ies'} "
                       f"{loose} not on a nodally attached H-{'tail' if k % 2 == 0 else 'bridge'}")
    nonmono = [a for a in apps if not a.monomial]
    if nonmono:
        reasons.append("clause 2 fails: non-monomial appendage with nodal or marked attaching on "
                       + "; ".join(",".join(a.components) for a in nonmono))
    if reasons:
        return ClosednessVerdict(NO, tuple(reasons))
    verdict, why = core_closed(canonical_decomposition(c, k))
    return ClosednessVerdict(verdict, ("clauses 1 and 2 hold", why))


# ---------------------------------------------------------------- surgery

class _Builder:
    """Mutable copy of a curve used during surgery."""

    def __init__(self, c: CurveGraph):
        self.comps: dict[str, Component] = {x.id: x for x in c.components}
        self.sings: list[Singularity | None] = list(c.singularities)
        self.marks: list[Point] = list(c.marks)
        self.decls = list(c.h_declarations)
        self.counter = 0

    def new_comp(self, points: tuple[str, ...]) -> str:
        while True:
            self.counter += 1
            cid = f"z{self.counter}"
            if cid not in self.comps:
                break
        self.comps[cid] = Component(cid, 0, points)
        return cid

    def add_point(self, cid: str, stem: str) -> str:
        comp = self.comps[cid]
        i = 1
        while f"{stem}{i}" in comp.points:
            i += 1
        pid = f"{stem}{i}"
        self.comps[cid] = replace(comp, points=comp.points + (pid,))
        return pid

    def remove_comp(self, cid: str) -> None:
        del self.comps[cid]
        self.decls = [d for d in self.decls if all(p[0] != cid for p in d.points)]

    def build(self) -> CurveGraph:
        sings = tuple(s for s in self.sings if s is not None)
        used = {p for s in sings for p in s.branches} | set(self.marks)
        comps = []
        for comp in self.comps.values():
            pts = tuple(p for p in comp.points if (comp.id, p) in used)
            comps.append(replace(comp, points=pts, weierstrass=tuple(w for w in comp.weierstrass if w in pts)))
        decls = tuple(d for d in self.decls if all(p in used for p in d.points))
        return CurveGraph(tuple(comps), sings, tuple(self.marks), decls)


def _zero(k: int) -> tuple[Fraction, ...]:
    return (Fraction(0),) * crimping_length(k)


def _sprout(c: CurveGraph, k: int) -> CurveGraph:
    covered = {s for a in nodal_appendages(c, k) for s in a.internal}
    b = _Builder(c)
    for s, sing in enumerate(c.singularities):
        if sing.k != k or s in covered:
            continue
        b.sings[s] = None
        ends = []
        for p in sing.branches:
            z = b.new_comp(("a", "b"))
            b.sings.append(Singularity(1, (p, (z, "a"))))
            ends.append((z, "b"))
        b.sings.append(Singularity(k, tuple(ends), _zero(k)))
    return b.build()


def _contract_semistable(c: CurveGraph) -> CurveGraph:
    while True:
        target = None
        for comp in c.components:
            if comp.genus or c.marks_on(comp.id) or len(comp.points) != 2:
                continue
            ss = c.sings_on(comp.id)
            if len(ss) != 2 or any(c.singularities[s].k != 1 for s in ss):
                continue
            if any(all(x == comp.id for x, _ in c.singularities[s].branches) for s in ss):
                continue
            target = (comp.id, ss)
            break
        if target is None:
            return c
        cid, (s1, s2) = target
        outer = [p for s in (s1, s2) for p in c.singularities[s].branches if p[0] != cid]
        sings = [x for i, x in enumerate(c.singularities) if i not in (s1, s2)]
        sings.append(Singularity(1, tuple(outer)))
        comps = tuple(x for x in c.components if x.id != cid)
        c = CurveGraph(comps, tuple(sings), c.marks, c.h_declarations)


def _monomialize(c: CurveGraph, k: int) -> CurveGraph:
    apps = [a for a in nodal_appendages(c, k) if not a.monomial]
    if not apps:
        return c
    b = _Builder(c)
    for a in apps:
        for cid in a.components:
            b.remove_comp(cid)
        for s in a.internal:
            b.sings[s] = None
        if k % 2 == 0:
            z = b.new_comp(("q", "p"))
            b.sings.append(Singularity(k, ((z, "p"),), _zero(k)))
            ends = [(z, "q")]
        else:
            z1, z2 = b.new_comp(("q", "t")), b.new_comp(("q", "t"))
            b.sings.append(Singularity(k, ((z1, "t"), (z2, "t")), _zero(k)))
            ends = [(z1, "q"), (z2, "q")]
        for bd, new in zip(a.boundary, ends):
            if bd.mark is not None:
                b.marks[bd.mark] = new
                continue
            old = b.sings[bd.sing]
            if old is None:
                continue
            b.sings[bd.sing] = replace(old, branches=tuple(new if p == bd.point else p for p in old.branches))
        # a bridge whose two ends meet at one node: both branches were rewritten above
    return b.build()


def maximal_degeneration(c: CurveGraph, k: int) -> CurveGraph:
    """Sprout A_k points onto nodal appendages, blow down semistable P^1s, make appendages monomial.

    The recursive degeneration of the core is the identity here: with the
    closedness rules in :func:`core_closed` a core is either closed or its
    status is unknown.
    """
    _require_stable(c, k)
    out = _monomialize(_contract_semistable(_sprout(c, k)), k)
    return out


# ---------------------------------------------------------------- closed limits

@dataclass(frozen=True, eq=False)
class ClosedLimitClass:
    k: int
    case: str
    core: CurveGraph | None
    core_tags: tuple[str, ...]
    lengths: tuple[tuple[str, tuple[int, ...]], ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedLimitClass):
            return NotImplemented
        if (self.k, self.case, self.lengths) != (other.k, other.case, other.lengths):
            return False
        if self.core is None or other.core is None:
            return self.core is other.core
        return curves_isomorphic(self.core, other.core, self.core_tags, other.core_tags)

    def __hash__(self) -> int:
        h = "" if self.core is None else invariant_hash(self.core, self.core_tags)
        return hash((self.k, self.case, self.lengths, h))

    def to_json(self) -> dict:
        return {"k": self.k, "case": self.case,
                "core_components": 0 if self.core is None else len(self.core.components),
                "link_lengths": {key: list(v) for key, v in self.lengths}}


def closed_limit_class(c: CurveGraph, k: int) -> ClosedLimitClass:
    d = canonical_decomposition(maximal_degeneration(c, k), k)
    groups: dict[str, list[int]] = {}
    if k % 2:
        for ln in d.appendages:
            key = "-".join(str(b.attaching) for b in ln.ends)
            groups.setdefault(key, []).append(ln.length)
    lengths = tuple(sorted((key, tuple(sorted(v))) for key, v in groups.items()))
    return ClosedLimitClass(k, d.case, d.core, d.core_mark_tags, lengths)
