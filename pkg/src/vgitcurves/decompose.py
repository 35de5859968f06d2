"""Canonical decomposition of an A_k-stable curve into core and appendages.

Even k = 2m: the appendages are the destabilizing H_{m,1}-tails.
Odd k = 2m+1: the appendages are the links formed by destabilizing
H_{m,2}-chains glued end to end at nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveGraph, HDeclaration, Point, Singularity
from .hcurves import Boundary, Chain, HCurve, Link, destabilizing_chains, destabilizing_tails
from .stability import stability

CASES = ("I", "I'", "I''", "II", "II'", "II''")


class NotStable(ValueError):
    pass


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Decomposition:
    k: int
    case: str
    core: CurveGraph | None
    core_mark_tags: tuple[str, ...]
    appendages: tuple[HCurve | Link, ...]
    pieces: tuple[CurveGraph, ...]
    cut: tuple[Singularity, ...]
    marks: tuple[Point, ...]
    h_declarations: tuple[HDeclaration, ...]

    @property
    def m(self) -> int:
        return self.k // 2

    @property
    def r(self) -> int:
        return len(self.appendages)

    def lengths(self) -> list[int]:
        return [a.length for a in self.appendages if isinstance(a, Link)]

    def core_pieces(self) -> list[CurveGraph]:
        if self.core is None:
            return []
        return [self.core.subcurve(p) for p in self.core.connected_pieces()]

    def summary(self) -> dict:
        out = {"k": self.k, "case": self.case, "appendages": len(self.appendages),
               "core_components": [] if self.core is None else self.core.ids}
        if self.k % 2:
            out["link_lengths"] = self.lengths()
            out["link_ends"] = [[str(b.attaching) for b in a.ends] for a in self.appendages]
        else:
            out["tail_attaching"] = [str(a.boundary[0].attaching) for a in self.appendages]
        return out


def _other(c: CurveGraph, b: Boundary) -> Point:
    sing = c.singularities[b.sing]
    return sing.branches[1] if sing.branches[0] == b.point else sing.branches[0]


def _order_links(c: CurveGraph, chains: list[Chain], m: int) -> list[Link]:
    """Group chains that meet at nodes and orient each group end to end."""
    # (chain, end) -> partner (chain, end) when the two ends form a node
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    for i, a in enumerate(chains):
        for ea, ba in enumerate(a.ends):
            for j, b in enumerate(chains):
                for eb, bb in enumerate(b.ends):
                    if (i, ea) == (j, eb):
                        continue
                    if ba.sing is not None and ba.sing == bb.sing and ba.k == 1 and ba.point != bb.point:
                        partner[(i, ea)] = (j, eb)
    seen: set[int] = set()
    links = []
    for start in range(len(chains)):
        if start in seen:
            continue
        group = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for e in (0, 1):
                if (i, e) in partner:
                    j = partner[(i, e)][0]
                    if j not in group:
                        group.add(j)
                        stack.append(j)
        seen |= group
        free = [(i, e) for i in sorted(group) for e in (0, 1) if (i, e) not in partner]
        cyclic = not free
        i, e = free[0] if free else (min(group), 0)
        path: list[Chain] = []
        visited = set()
        while i not in visited:
            visited.add(i)
            ch = chains[i] if e == 0 else chains[i].reversed()
            path.append(ch)
            nxt = partner.get((i, 1 - e))
            if nxt is None:
                break
            i, e = nxt
        if visited != group:
            raise DecompositionError("chains do not assemble into a single link")
        links.append(Link(m, tuple(path), cyclic))
    return links


def canonical_decomposition(c: CurveGraph, k: int) -> Decomposition:
    verdict = stability(c, k, "plain")
    if not verdict.passed:
        raise NotStable(f"curve is not A_{k}-stable: {verdict.violations[0].detail}")
    m = k // 2
    all_ids = set(c.ids)
    if k % 2 == 0:
        return _decompose_even(c, k, m, all_ids)
    return _decompose_odd(c, k, m, all_ids)


def _pieces(c: CurveGraph, apps, boundary_of) -> tuple[CurveGraph, ...]:
    out = []
    for a in apps:
        extra = [b.point for b in boundary_of(a) if b.sing is not None]
        out.append(c.subcurve(a.components, extra_marks=extra))
    return tuple(out)


def _decompose_even(c: CurveGraph, k: int, m: int, all_ids: set[str]) -> Decomposition:
    tails = destabilizing_tails(c, m)
    mk = lambda case, core, tags, apps, cut: Decomposition(  # noqa: E731
        k, case, core, tags, tuple(apps), _pieces(c, apps, lambda t: t.boundary),
        tuple(c.singularities[s] for s in cut), c.marks, c.h_declarations)
    marked = [t for t in tails if t.boundary[0].k == 0]
    if marked:
        return mk("I''", None, (), marked[:1], [])
    if len(tails) == 2:
        a, b = tails
        if set(a.components) | set(b.components) == all_ids and a.boundary[0].sing == b.boundary[0].sing:
            return mk("I'", None, (), tails, [a.boundary[0].sing])
    used: set[str] = set()
    for t in tails:
        if used & set(t.components):
            raise DecompositionError("destabilizing tails share a component")
        used |= set(t.components)
    core_ids = [x for x in c.ids if x not in used]
    if not core_ids:
        raise DecompositionError("no core left after removing tails")
    extra = [_other(c, t.boundary[0]) for t in tails]
    core = c.subcurve(core_ids, extra_marks=extra)
    tags = tuple(f"p{i}" for i, p in enumerate(c.marks) if p[0] in core_ids) + tuple("q" for _ in tails)
    return mk("I", core, tags, tails, [t.boundary[0].sing for t in tails])


def _decompose_odd(c: CurveGraph, k: int, m: int, all_ids: set[str]) -> Decomposition:
    chains = destabilizing_chains(c, m)
    used: set[str] = set()
    for ch in chains:
        if used & set(ch.components):
            raise DecompositionError("destabilizing chains share a component")
        used |= set(ch.components)
    links = _order_links(c, chains, m)
    z = {x for ln in links for x in ln.components}

    def mk(case, core, tags, apps, cut):
        return Decomposition(k, case, core, tags, tuple(apps), _pieces(c, apps, lambda ln: ln.ends),
                             tuple(c.singularities[s] for s in cut), c.marks, c.h_declarations)

    if z == all_ids:
        if len(links) != 1:
            raise DecompositionError("several links cover the whole curve")
        ln = links[0]
        if ln.cyclic:
            return mk("II''", None, (), [ln], [])
        if all(b.k == 0 for b in ln.ends):
            return mk("II'", None, (), [ln], [])
        raise DecompositionError("a link covering the curve must be cyclic or doubly marked")
    oriented = []
    for ln in links:
        if ln.cyclic:
            raise DecompositionError("cyclic link inside a curve with a core")
        if ln.ends[0].k == 0:
            ln = Link(m, tuple(ch.reversed() for ch in reversed(ln.chains)))
        oriented.append(ln)
    core_ids = [x for x in c.ids if x not in z]
    extra, tags, cut = [], [], []
    for ln in oriented:
        for b in ln.ends:
            if b.sing is not None:
                extra.append(_other(c, b))
                tags.append(f"q:L{ln.length}")
                cut.append(b.sing)
    core = c.subcurve(core_ids, extra_marks=extra)
    tags = tuple(f"p{i}" for i, p in enumerate(c.marks) if p[0] in core_ids) + tuple(tags)
    return mk("II", core, tags, oriented, cut)


def reassemble(d: Decomposition) -> CurveGraph:
    """Glue the core and the appendage pieces back along the cut singularities."""
    graphs = ([d.core] if d.core is not None else []) + list(d.pieces)
    comps = []
    sings: list[Singularity] = []
    for g in graphs:
        for comp in g.components:
            comps.append(comp)
        for s in g.singularities:
            if s not in sings:
                sings.append(s)
    for s in d.cut:
        if s not in sings:
            sings.append(s)
    used = {p for s in sings for p in s.branches} | set(d.marks)
    merged = {}
    for comp in comps:
        if comp.id in merged:
            raise DecompositionError(f"component {comp.id} appears in two pieces")
        merged[comp.id] = comp
    # pieces were trimmed to used points; restore point lists from the union
    from dataclasses import replace

    out_comps = []
    for comp in merged.values():
        pts = tuple(dict.fromkeys(p for cid, p in sorted(used) if cid == comp.id))
        out_comps.append(replace(comp, points=pts))
    return CurveGraph(tuple(out_comps), tuple(sings), d.marks, d.h_declarations)
