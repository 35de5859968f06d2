"""Combinatorial model of pointed curves with A_k-singularities.

Components carry their geometric genus and a list of named points.  Every
point is either a smooth marked point or one branch of a singularity; a
singularity of type A_k has one branch when k is even and two when k is odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator

from .crimping import EVEN, ODD, CrimpingVector, parse_rational

Point = tuple[str, str]


def n_branches(k: int) -> int:
    return 1 if k % 2 == 0 else 2


def delta(k: int) -> int:
    return (k + 1) // 2


def conductor(k: int) -> int:
    """Contribution of one branch of an A_k point to the degree of the dualizing sheaf."""
    return k if k % 2 == 0 else (k + 1) // 2


def crimping_length(k: int) -> int:
    m = k // 2
    return max(m - 1, 0)


@dataclass(frozen=True)
class Component:
    id: str
    genus: int = 0
    points: tuple[str, ...] = ()
    weierstrass: tuple[str, ...] = ()


@dataclass(frozen=True)
class Singularity:
    k: int
    branches: tuple[Point, ...]
    crimping: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(tuple(b) for b in self.branches))
        object.__setattr__(self, "crimping", tuple(parse_rational(x) for x in self.crimping))

    @property
    def unibranch(self) -> bool:
        return self.k % 2 == 0

    def is_monomial(self) -> bool:
        return all(x == 0 for x in self.crimping)

    def crimping_vector(self) -> CrimpingVector | None:
        m = self.k // 2
        if m < 1:
            return None
        return CrimpingVector(EVEN if self.k % 2 == 0 else ODD, m, self.crimping)


@dataclass(frozen=True)
class HDeclaration:
    points: tuple[Point, ...]
    type: str  # "H_{m,1}" or "H_{m,2}"

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))

    @property
    def m(self) -> int:
        return int(self.type.split("{")[1].split(",")[0])

    @property
    def n(self) -> int:
        return int(self.type.split(",")[1].rstrip("}"))


def h_type(m: int, n: int) -> str:
    return f"H_{{{m},{n}}}"


@dataclass(frozen=True)
class CurveGraph:
    components: tuple[Component, ...]
    singularities: tuple[Singularity, ...] = ()
    marks: tuple[Point, ...] = ()
    h_declarations: tuple[HDeclaration, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(tuple(p) for p in self.marks))

    # ------------------------------------------------------------ lookups
    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.components]

    def roles(self) -> dict[Point, tuple]:
        """Map each used point to ``("mark", i)`` or ``("sing", s, b)``."""
        out: dict[Point, tuple] = {}
        for i, p in enumerate(self.marks):
            out[p] = ("mark", i)
        for s, sing in enumerate(self.singularities):
            for b, p in enumerate(sing.branches):
                out[p] = ("sing", s, b)
        return out

    def marks_on(self, cid: str) -> list[int]:
        return [i for i, (c, _) in enumerate(self.marks) if c == cid]

    def sings_on(self, cid: str) -> list[int]:
        return [s for s, sing in enumerate(self.singularities) if any(c == cid for c, _ in sing.branches)]

    def edges(self) -> Iterator[tuple[int, str, str]]:
        """Two-branch singularities joining distinct components."""
        for s, sing in enumerate(self.singularities):
            if len(sing.branches) == 2:
                (a, _), (b, _) = sing.branches
                if a != b:
                    yield s, a, b

    def adjacency(self) -> dict[str, set[str]]:
        adj = {c.id: set() for c in self.components}
        for _, a, b in self.edges():
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def connected_pieces(self, subset: Iterable[str] | None = None) -> list[list[str]]:
        allowed = set(self.ids if subset is None else subset)
        adj = self.adjacency()
        seen: set[str] = set()
        pieces = []
        for cid in self.ids:
            if cid not in allowed or cid in seen:
                continue
            stack, piece = [cid], []
            seen.add(cid)
            while stack:
                x = stack.pop()
                piece.append(x)
                for y in sorted(adj[x]):
                    if y in allowed and y not in seen:
                        seen.add(y)
                        stack.append(y)
            pieces.append(sorted(piece, key=self.ids.index))
        return pieces

    def is_connected(self) -> bool:
        return len(self.connected_pieces()) <= 1

    # ------------------------------------------------------------ surgery helpers
    def subcurve(self, comps: Iterable[str], extra_marks: Iterable[Point] = (),
                 drop: Iterable[int] = ()) -> "CurveGraph":
        """Components ``comps`` with their internal singularities.

        Singularities in ``drop`` and those leaving ``comps`` are removed;
        ``extra_marks`` become marked points after the surviving original marks.
        """
        keep = set(comps)
        drop = set(drop)
        sings = tuple(s for i, s in enumerate(self.singularities)
                      if i not in drop and all(c in keep for c, _ in s.branches))
        marks = tuple(p for p in self.marks if p[0] in keep) + tuple(extra_marks)
        used = {p for s in sings for p in s.branches} | set(marks)
        comps_out = []
        for c in self.components:
            if c.id in keep:
                pts = tuple(p for p in c.points if (c.id, p) in used)
                comps_out.append(replace(c, points=pts, weierstrass=tuple(w for w in c.weierstrass if w in pts)))
        decls = tuple(d for d in self.h_declarations if all(p in used for p in d.points))
        return CurveGraph(tuple(comps_out), sings, marks, decls)

    def fresh_id(self, stem: str) -> str:
        taken = set(self.ids)
        i = 1
        while f"{stem}{i}" in taken:
            i += 1
        return f"{stem}{i}"


# ---------------------------------------------------------------- checks

def validate(c: CurveGraph, require_connected: bool = True) -> list[str]:
    """List every violated structural invariant (empty list means valid)."""
    problems: list[str] = []
    ids = [x.id for x in c.components]
    if len(set(ids)) != len(ids):
        problems.append("duplicate component ids")
    if not c.components:
        problems.append("no components")
    pts: dict[Point, int] = {}
    for comp in c.components:
        if comp.genus < 0:
            problems.append(f"component {comp.id}: negative genus")
        if len(set(comp.points)) != len(comp.points):
            problems.append(f"component {comp.id}: duplicate point ids")
        for p in comp.points:
            pts[(comp.id, p)] = 0
        for w in comp.weierstrass:
            if w not in comp.points:
                problems.append(f"component {comp.id}: weierstrass point {w} is not a point of the component")
    for i, p in enumerate(c.marks):
        if p not in pts:
            problems.append(f"mark {i}: unknown point {p}")
        else:
            pts[p] += 1
    for s, sing in enumerate(c.singularities):
        if sing.k < 1:
            problems.append(f"singularity {s}: A_{sing.k} is not a singularity type")
            continue
        if len(sing.branches) != n_branches(sing.k):
            problems.append(f"singularity {s}: A_{sing.k} needs {n_branches(sing.k)} branch(es), got {len(sing.branches)}")
        if len(sing.crimping) != crimping_length(sing.k):
            problems.append(f"singularity {s}: crimping vector for A_{sing.k} needs {crimping_length(sing.k)} entries")
        for p in sing.branches:
            if p not in pts:
                problems.append(f"singularity {s}: unknown point {p}")
            else:
                pts[p] += 1
    for p, count in pts.items():
        if count == 0:
            problems.append(f"point {p} is neither marked nor a singular branch")
        elif count > 1:
            problems.append(f"point {p} is used {count} times (a marked point on a singular branch, or a shared branch)")
    for d in c.h_declarations:
        try:
            m, n = d.m, d.n
        except (IndexError, ValueError):
            problems.append(f"h_declaration {d.type!r}: unknown type")
            continue
        if n not in (1, 2) or m < 1 or len(d.points) != n:
            problems.append(f"h_declaration {d.type}: needs {n} point(s) and m >= 1")
        for p in d.points:
            if p not in pts:
                problems.append(f"h_declaration {d.type}: unknown point {p}")
    if require_connected and not problems and not c.is_connected():
        problems.append("curve is disconnected")
    if not problems and arithmetic_genus(c) < 0 and require_connected:
        problems.append("negative arithmetic genus")
    return problems


def arithmetic_genus(c: CurveGraph) -> int:
    pieces = max(1, len(c.connected_pieces()))
    return (sum(x.genus for x in c.components) + sum(delta(s.k) for s in c.singularities)
            - len(c.components) + pieces)


def omega_degree(c: CurveGraph, cid: str) -> int:
    comp = c.component(cid)
    deg = 2 * comp.genus - 2 + len(c.marks_on(cid))
    for sing in c.singularities:
        for cc, _ in sing.branches:
            if cc == cid:
                deg += conductor(sing.k)
    return deg


def is_ample(c: CurveGraph) -> bool:
    return all(omega_degree(c, x.id) > 0 for x in c.components)


def relabel(c: CurveGraph, mapping: dict[str, str]) -> CurveGraph:
    """Rename components (used to test isomorphism invariance)."""
    f = lambda p: (mapping.get(p[0], p[0]), p[1])  # noqa: E731
    comps = tuple(replace(x, id=mapping.get(x.id, x.id)) for x in c.components)
    sings = tuple(replace(s, branches=tuple(f(p) for p in s.branches)) for s in c.singularities)
    marks = tuple(f(p) for p in c.marks)
    decls = tuple(replace(d, points=tuple(f(p) for p in d.points)) for d in c.h_declarations)
    return CurveGraph(comps, sings, marks, decls)
