"""Detection of hyperelliptic tails, bridges, chains and links.

An H_{m,1}-curve is always irreducible and an H_{m,2}-curve has at most two
components, so candidate subcurves are single components or adjacent pairs.
Hyperelliptic structure is recognised by the following rules; anything else
has to be declared on the curve:

* an irreducible one-pointed subcurve of arithmetic genus one is H_{1,1};
* a two-pointed subcurve of arithmetic genus one with ample ``omega(q1+q2)``
  and no elliptic tail is H_{1,2};
* a rational component whose only singularity is one A_{2m} is H_{m,1}
  exactly when the crimping vanishes (likewise two rational components
  joined at one A_{2m+1} for H_{m,2});
* a Weierstrass declaration ``q`` on an irreducible subcurve of genus m, or
  an explicit ``h_declarations`` entry, supplies the structure.

No marked point other than an attaching point may lie on the subcurve.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .curve import CurveGraph, Point, delta, h_type


@dataclass(frozen=True)
class AttachingType:
    k: int  # 0 encodes a marked point

    @property
    def marked(self) -> bool:
        return self.k == 0

    def __str__(self) -> str:
        return "marked" if self.k == 0 else {1: "nodal"}.get(self.k, f"A_{self.k}")


@dataclass(frozen=True)
class Boundary:
    point: Point
    k: int
    sing: int | None = None
    mark: int | None = None

    @property
    def attaching(self) -> AttachingType:
        return AttachingType(self.k)


@dataclass(frozen=True)
class HCurve:
    """An H_{m,1}-tail (one boundary point) or H_{m,2}-bridge (two)."""

    m: int
    components: tuple[str, ...]
    boundary: tuple[Boundary, ...]
    internal: tuple[int, ...]
    monomial: bool

    @property
    def n(self) -> int:
        return len(self.boundary)

    @property
    def kind(self) -> str:
        return "tail" if self.n == 1 else "bridge"

    def flipped(self) -> "HCurve":
        return HCurve(self.m, self.components, self.boundary[::-1], self.internal, self.monomial)

    def key(self) -> tuple:
        return (self.components, tuple(sorted(b.point for b in self.boundary)))


@dataclass(frozen=True)
class Chain:
    """Bridges ``b_1..b_r``; the exit of ``b_i`` meets the entry of ``b_{i+1}`` at an A_{2m+1}."""

    m: int
    bridges: tuple[HCurve, ...]

    @property
    def length(self) -> int:
        return len(self.bridges)

    @property
    def ends(self) -> tuple[Boundary, Boundary]:
        return self.bridges[0].boundary[0], self.bridges[-1].boundary[1]

    @property
    def components(self) -> tuple[str, ...]:
        return tuple(x for b in self.bridges for x in b.components)

    def reversed(self) -> "Chain":
        return Chain(self.m, tuple(b.flipped() for b in reversed(self.bridges)))

    def key(self) -> tuple:
        fwd = tuple(b.key() for b in self.bridges)
        return min(fwd, fwd[::-1])


@dataclass(frozen=True)
class Link:
    """Chains ``C_1..C_r`` joined end to end at nodes."""

    m: int
    chains: tuple[Chain, ...]
    cyclic: bool = False

    @property
    def length(self) -> int:
        return len(self.chains)

    @property
    def ends(self) -> tuple[Boundary, Boundary]:
        return self.chains[0].ends[0], self.chains[-1].ends[1]

    @property
    def bridges(self) -> tuple[HCurve, ...]:
        return tuple(b for ch in self.chains for b in ch.bridges)

    @property
    def components(self) -> tuple[str, ...]:
        return tuple(x for ch in self.chains for x in ch.components)


# ---------------------------------------------------------------- local data

@dataclass
class _Local:
    marks: list[int]
    crossing: list[tuple[int, int]]  # (singularity, branch on this side)
    self_two: list[int]              # two-branch singularities with both branches here
    uni: list[int]


def _local(c: CurveGraph, comps: set[str]) -> dict[str, _Local]:
    out = {x: _Local([], [], [], []) for x in comps}
    for i, (cid, _) in enumerate(c.marks):
        if cid in out:
            out[cid].marks.append(i)
    for s, sing in enumerate(c.singularities):
        owners = [cid for cid, _ in sing.branches]
        if len(owners) == 1:
            if owners[0] in out:
                out[owners[0]].uni.append(s)
            continue
        a, b = owners
        if a == b:
            if a in out:
                out[a].self_two.append(s)
            continue
        for br, cid in enumerate(owners):
            other = owners[1 - br]
            if cid in out and other not in comps:
                out[cid].crossing.append((s, br))
    return out


def _bd_sing(c: CurveGraph, s: int, br: int) -> Boundary:
    sing = c.singularities[s]
    return Boundary(sing.branches[br], sing.k, sing=s)


def _bd_mark(c: CurveGraph, i: int) -> Boundary:
    return Boundary(c.marks[i], 0, mark=i)


def _declared(c: CurveGraph, points: Iterable[Point], m: int, n: int) -> bool:
    want = set(points)
    t = h_type(m, n)
    return any(d.type == t and set(d.points) == want for d in c.h_declarations)


def _is_h1(c: CurveGraph, cid: str, q: Point, internal: list[int], m: int) -> tuple[bool, bool]:
    """(is H_{m,1}, is monomial) for an irreducible one-pointed candidate."""
    comp = c.component(cid)
    sings = [c.singularities[s] for s in internal]
    if comp.genus == 0 and len(sings) == 1 and sings[0].k == 2 * m:
        mono = sings[0].is_monomial()
        return mono, mono
    if m == 1:
        return True, False
    if q[0] == cid and q[1] in comp.weierstrass:
        return True, False
    return _declared(c, [q], m, 1), False


def find_h_tails(c: CurveGraph, m: int) -> list[HCurve]:
    out = []
    for cid in c.ids:
        L = _local(c, {cid})[cid]
        options: list[tuple[Boundary, list[int]]] = []
        base = [_bd_sing(c, s, br) for s, br in L.crossing] + [_bd_mark(c, i) for i in L.marks]
        if len(base) == 1:
            options.append((base[0], L.self_two + L.uni))
        elif not base:
            for u in L.uni:
                options.append((_bd_sing(c, u, 0), L.self_two + [x for x in L.uni if x != u]))
        comp = c.component(cid)
        for bd, internal in options:
            pa = comp.genus + sum(delta(c.singularities[s].k) for s in internal)
            if pa != m:
                continue
            ok, mono = _is_h1(c, cid, bd.point, internal, m)
            if ok:
                out.append(HCurve(m, (cid,), (bd,), tuple(sorted(internal)), mono))
    return out


def _pair_ample(c: CurveGraph, comps: tuple[str, ...], joins: list[int]) -> bool:
    # each component carries one boundary point; joins contribute their conductors
    from .curve import conductor

    for cid in comps:
        deg = -2 + 1
        for s in joins:
            for x, _ in c.singularities[s].branches:
                if x == cid:
                    deg += conductor(c.singularities[s].k)
        if deg <= 0:
            return False
    return True


def find_h_bridges(c: CurveGraph, m: int) -> list[HCurve]:
    out: list[HCurve] = []
    seen = set()

    def emit(h: HCurve):
        if h.key() not in seen:
            seen.add(h.key())
            out.append(h)

    for cid in c.ids:
        L = _local(c, {cid})[cid]
        comp = c.component(cid)
        base = [_bd_sing(c, s, br) for s, br in L.crossing] + [_bd_mark(c, i) for i in L.marks]
        options: list[tuple[list[Boundary], list[int]]] = []
        need = 2 - len(base)
        if need == 0:
            options.append((base, L.self_two + L.uni))
        elif need == 1:
            for u in L.uni:
                options.append((base + [_bd_sing(c, u, 0)], L.self_two + [x for x in L.uni if x != u]))
        elif need == 2:
            for u, w in itertools.combinations(L.uni, 2):
                options.append(([_bd_sing(c, u, 0), _bd_sing(c, w, 0)],
                                L.self_two + [x for x in L.uni if x not in (u, w)]))
            for s in L.self_two:
                options.append(([_bd_sing(c, s, 0), _bd_sing(c, s, 1)],
                                [x for x in L.self_two if x != s] + L.uni))
        for bds, internal in options:
            pa = comp.genus + sum(delta(c.singularities[s].k) for s in internal)
            if pa != m:
                continue
            if m == 1 or _declared(c, [b.point for b in bds], m, 2):
                emit(HCurve(m, (cid,), tuple(bds), tuple(sorted(internal)), False))

    for _, a, b in list(c.edges()):
        if a == b:
            continue
        pair = tuple(sorted((a, b), key=c.ids.index))
        if any(h.components == pair for h in out):
            continue
        if c.component(a).genus or c.component(b).genus:
            continue
        ploc = _local(c, set(pair))
        if any(ploc[x].self_two for x in pair):
            continue
        joins = sorted({s for s, x, y in c.edges() if {x, y} == set(pair)})
        per = {}
        for x in pair:
            P = ploc[x]
            per[x] = ([_bd_sing(c, s, br) for s, br in P.crossing] + [_bd_mark(c, i) for i in P.marks]
                      + [_bd_sing(c, u, 0) for u in P.uni])
        options = []
        if all(len(per[x]) == 1 for x in pair):
            options.append(([per[pair[0]][0], per[pair[1]][0]], joins))
        elif all(len(per[x]) == 0 for x in pair):
            for s in joins:
                sing = c.singularities[s]
                br0 = 0 if sing.branches[0][0] == pair[0] else 1
                options.append(([_bd_sing(c, s, br0), _bd_sing(c, s, 1 - br0)], [j for j in joins if j != s]))
        for bds, internal in options:
            pa = sum(delta(c.singularities[s].k) for s in internal) - 1
            if pa != m or not _pair_ample(c, pair, internal):
                continue
            single = len(internal) == 1 and c.singularities[internal[0]].k == 2 * m + 1
            mono = single and c.singularities[internal[0]].is_monomial()
            if single and not mono:
                ok = False
            else:
                ok = m == 1 or mono or _declared(c, [b.point for b in bds], m, 2)
            if ok:
                emit(HCurve(m, pair, tuple(bds), tuple(internal), mono))
    return out


def _joined(x: Boundary, y: Boundary, k: int) -> bool:
    return x.sing is not None and x.sing == y.sing and x.k == k and x.point != y.point


def find_h_chains(c: CurveGraph, m: int) -> list[Chain]:
    bridges = find_h_bridges(c, m)
    oriented = [b for h in bridges for b in (h, h.flipped())]
    out: dict[tuple, Chain] = {}

    def grow(path: list[HCurve], used: set[str]):
        ch = Chain(m, tuple(path))
        out.setdefault(ch.key(), ch)
        exit_ = path[-1].boundary[1]
        for nb in oriented:
            if used & set(nb.components):
                continue
            if _joined(exit_, nb.boundary[0], 2 * m + 1):
                grow(path + [nb], used | set(nb.components))

    for b in oriented:
        grow([b], set(b.components))
    return list(out.values())


def is_link_end(b: Boundary, m: int) -> bool:
    return b.k in (0, 1) or b.k > 2 * m + 1


def find_h_links(c: CurveGraph, m: int) -> list[Link]:
    chains = find_h_chains(c, m)
    oriented = [x for ch in chains for x in (ch, ch.reversed())]
    out: dict[tuple, Link] = {}

    def grow(path: list[Chain], used: set[str]):
        a, b = path[0].ends[0], path[-1].ends[1]
        if is_link_end(a, m) and is_link_end(b, m):
            key = tuple(ch.key() for ch in path)
            key = min(key, key[::-1])
            out.setdefault(key, Link(m, tuple(path)))
        for nb in oriented:
            if used & set(nb.components):
                continue
            if _joined(b, nb.ends[0], 1):
                grow(path + [nb], used | set(nb.components))

    for ch in oriented:
        grow([ch], set(ch.components))
    return list(out.values())


def is_destabilizing(app: HCurve | Chain) -> bool:
    """Tails: attaching node, mark or A_l with l >= 2m+1.  Chains: both ends node, mark or l >= 2m+2."""
    if isinstance(app, HCurve) and app.n == 1:
        k = app.boundary[0].k
        return k in (0, 1) or k >= 2 * app.m + 1
    ends = app.ends if isinstance(app, Chain) else app.boundary
    return all(b.k in (0, 1) or b.k >= 2 * app.m + 2 for b in ends)


def destabilizing_tails(c: CurveGraph, m: int) -> list[HCurve]:
    return [t for t in find_h_tails(c, m) if is_destabilizing(t)]


def destabilizing_chains(c: CurveGraph, m: int) -> list[Chain]:
    return [ch for ch in find_h_chains(c, m) if is_destabilizing(ch)]
