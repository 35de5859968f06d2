"""Torus weights on first-order deformations of a maximally degenerate curve.

Each monomial H-appendage contributes a G_m factor.  Coordinates are tagged
``kore`` (weight 0), ``crimping`` (c), ``singularity`` (s) or ``node`` (n).
The expected S- and H-loci are generated from closed formulas and compared
with the chambers computed by :mod:`vgitcurves.vgit`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .curve import CurveGraph, arithmetic_genus
from .decompose import Decomposition, canonical_decomposition
from .degenerate import NO, is_maximally_degenerate
from .vgit import DEFAULT_CAP, StratumUnion, WeightSystem, minus_locus, plus_locus

KORE, CRIMP, SING, NODE = "kore", "crimping", "singularity", "node"


class NotMaximallyDegenerate(ValueError):
    pass


@dataclass(frozen=True)
class LabeledWeightSystem:
    ws: WeightSystem
    case: str
    tags: dict[str, str] = field(default_factory=dict, compare=False)
    s_blocks: tuple[tuple[str, ...], ...] = ()
    h_sets: tuple[tuple[str, ...], ...] = ()

    @property
    def rank(self) -> int:
        return self.ws.rank

    def expected_s(self) -> StratumUnion:
        return StratumUnion.of(self.s_blocks)

    def expected_h(self) -> StratumUnion:
        return StratumUnion.of(self.h_sets)

    def to_json(self) -> dict:
        doc = self.ws.to_json()
        doc["case"] = self.case
        doc["labels"] = {l: self.tags[l] for l in self.ws.labels}
        return doc


def _unit(rank: int, *idx: int) -> tuple[int, ...]:
    v = [0] * rank
    for i in idx:
        v[i] += 1
    return tuple(v)


def _scale(v: tuple[int, ...], a: int) -> tuple[int, ...]:
    return tuple(a * x for x in v)


class _Acc:
    def __init__(self, rank: int):
        self.rank = rank
        self.coords: list[tuple[str, tuple[int, ...]]] = []
        self.tags: dict[str, str] = {}

    def add(self, label: str, weight: tuple[int, ...], tag: str) -> str:
        self.coords.append((label, weight))
        self.tags[label] = tag
        return label


def _even_factor(acc: _Acc, prefix: str, axis: int, m: int) -> tuple[list[str], list[str]]:
    e = _unit(acc.rank, axis)
    s = [acc.add(f"s{prefix}_{l}", _scale(e, 2 * l - 4 * m - 2), SING) for l in range(2 * m)]
    c = [acc.add(f"c{prefix}_{l}", _scale(e, 2 * l - 1), CRIMP) for l in range(1, m)]
    return s, c


def _odd_factor(acc: _Acc, prefix: str, axis: int, m: int) -> list[str]:
    e = _unit(acc.rank, axis)
    return [acc.add(f"s{prefix}_{l}", _scale(e, l - 2 * m - 2), SING) for l in range(2 * m + 1)]


def link_h_sets(s_blocks: list[list[str]], node: Callable[[int], str | None], cyclic: bool = False) -> list[set[str]]:
    """Vanishing sets ``{n_nu, s_{nu+2}, s_{nu+4}, ..., s_{nu+2mu-2}, n_{nu+2mu-1}}``.

    Bridges are numbered ``1..L``; ``node(j)`` is the node after bridge ``j``
    (``node(0)`` precedes bridge 1), or ``None`` when that node is absent.
    A cyclic link reads bridge and node indices modulo ``L``.
    """
    L = len(s_blocks)
    out = []
    if cyclic:
        for mu in range(1, (L + 1) // 2 + 1):
            for nu in range(L):
                J = set()
                for j in (nu, nu + 2 * mu - 1):
                    lab = node((j - 1) % L + 1)
                    if lab is not None:
                        J.add(lab)
                for t in range(1, mu):
                    J.update(s_blocks[(nu + 2 * t - 1) % L])
                out.append(J)
        return out
    mu = 1
    while L - 2 * mu + 1 >= 0:
        for nu in range(L - 2 * mu + 2):
            J = set()
            for j in (nu, nu + 2 * mu - 1):
                lab = node(j)
                if lab is not None:
                    J.add(lab)
            for t in range(1, mu):
                J.update(s_blocks[nu + 2 * t - 1])
            out.append(J)
        mu += 1
    return out


def chain_system(r: int, m: int) -> WeightSystem:
    """The H_{m,2}-chain of length r with both end nodes: factors t_1..t_r."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be >= 1")
    acc = _Acc(r)
    for j in range(1, r + 1):
        _odd_factor(acc, f"_{j}", j - 1, m)
    acc.add("n_0", _unit(r, 0), NODE)
    for j in range(1, r):
        acc.add(f"n_{j}", _unit(r, j - 1, j), NODE)
    acc.add(f"n_{r}", _unit(r, r - 1), NODE)
    return WeightSystem(r, tuple(acc.coords), (1,) * r)


def chain_chamber_formula(r: int, m: int) -> StratumUnion:
    """Plus chamber of :func:`chain_system` from the closed index formula (no LP)."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be >= 1")
    blocks = [[f"s_{j}_{l}" for l in range(2 * m + 1)] for j in range(1, r + 1)]
    return StratumUnion.of(link_h_sets(blocks, lambda j: f"n_{j}"))


def chain_minus_formula(r: int, m: int) -> StratumUnion:
    return StratumUnion.of([[f"s_{j}_{l}" for l in range(2 * m + 1)] for j in range(1, r + 1)])


def default_core_block(d: Decomposition) -> int:
    total = 0
    for piece in d.core_pieces():
        total += max(0, 3 * arithmetic_genus(piece) - 3 + len(piece.marks))
    return total


def weight_system_from_decomposition(d: Decomposition, core_block: int | None = None) -> LabeledWeightSystem:
    m = d.m
    s_blocks: list[list[str]] = []
    h_sets: list[set[str]] = []
    if d.k % 2 == 0:
        if d.case == "I":
            r = len(d.appendages)
            acc = _Acc(max(r, 1))
            for i in range(1, r + 1):
                s, c = _even_factor(acc, f"_{i}", i - 1, m)
                n = acc.add(f"n_{i}", _unit(r, i - 1), NODE)
                s_blocks.append(s)
                h_sets.append(set(c) | {n})
        elif d.case == "I'":
            acc = _Acc(2)
            cs = []
            for i in (1, 2):
                s, c = _even_factor(acc, f"_{i}", i - 1, m)
                s_blocks.append(s)
                cs.append(c)
            n = acc.add("n", _unit(2, 0, 1), NODE)
            h_sets = [set(c) | {n} for c in cs]
        else:
            acc = _Acc(1)
            s, c = _even_factor(acc, "", 0, m)
            s_blocks.append(s)
            h_sets.append(set(c))
    else:
        links = list(d.appendages)
        if any(ch.length != 1 for ln in links for ch in ln.chains):
            raise NotMaximallyDegenerate("links must consist of single bridges")
        if d.case == "II":
            rank = sum(ln.length for ln in links)
            acc = _Acc(max(rank, 1))
            axis = 0
            for i, ln in enumerate(links, start=1):
                L = ln.length
                blocks = [_odd_factor(acc, f"_{i}_{j}", axis + j - 1, m) for j in range(1, L + 1)]
                nodes: dict[int, str] = {}
                nodes[0] = acc.add(f"n_{i}_0", _unit(acc.rank, axis), NODE)
                for j in range(1, L):
                    nodes[j] = acc.add(f"n_{i}_{j}", _unit(acc.rank, axis + j - 1, axis + j), NODE)
                if ln.ends[1].k != 0:
                    nodes[L] = acc.add(f"n_{i}_{L}", _unit(acc.rank, axis + L - 1), NODE)
                s_blocks.extend(blocks)
                h_sets.extend(link_h_sets(blocks, nodes.get))
                axis += L
        else:
            ln = links[0]
            L = ln.length
            acc = _Acc(L)
            blocks = [_odd_factor(acc, f"_{j}", j - 1, m) for j in range(1, L + 1)]
            nodes = {}
            if d.case == "II'":
                for j in range(1, L):
                    nodes[j] = acc.add(f"n_{j}", _unit(L, j - 1, j), NODE)
                h_sets = link_h_sets(blocks, nodes.get)
            else:
                for j in range(1, L + 1):
                    nodes[j] = acc.add(f"n_{j}", _unit(L, j - 1, j % L), NODE)
                h_sets = link_h_sets(blocks, nodes.get, cyclic=True)
            s_blocks = blocks
    count = default_core_block(d) if core_block is None else core_block
    for j in range(1, count + 1):
        acc.add(f"k_{j}", (0,) * acc.rank, KORE)
    # no appendage means a finite automorphism group: encode as the trivial character
    chi = (1,) * acc.rank if d.appendages else (0,) * acc.rank
    ws = WeightSystem(acc.rank, tuple(acc.coords), chi)
    return LabeledWeightSystem(ws, d.case, acc.tags, tuple(tuple(b) for b in s_blocks),
                               tuple(tuple(sorted(h)) for h in h_sets))


def build_weight_system(c: CurveGraph, k: int, core_block: int | None = None) -> LabeledWeightSystem:
    v = is_maximally_degenerate(c, k)
    if v.verdict == NO:
        raise NotMaximallyDegenerate("; ".join(v.reasons))
    return weight_system_from_decomposition(canonical_decomposition(c, k), core_block)


def expected_s_locus(c: CurveGraph, k: int) -> StratumUnion:
    return build_weight_system(c, k).expected_s()


def expected_h_locus(c: CurveGraph, k: int) -> StratumUnion:
    return build_weight_system(c, k).expected_h()


def _diff(got: StratumUnion, want: StratumUnion) -> dict:
    return {"missing": [list(J) for J in want.minus(got)], "extra": [list(J) for J in got.minus(want)]}


def crosscheck_system(lws: LabeledWeightSystem, cap: int = DEFAULT_CAP) -> dict:
    minus = minus_locus(lws.ws, cap)
    plus = plus_locus(lws.ws, cap)
    ok = minus == lws.expected_s() and plus == lws.expected_h()
    return {"pass": ok, "case": lws.case, "rank": lws.rank,
            "strata_diff": {"minus": _diff(minus, lws.expected_s()), "plus": _diff(plus, lws.expected_h())}}


def crosscheck_local_vgit(c: CurveGraph, k: int, core_block: int | None = None, cap: int = DEFAULT_CAP) -> dict:
    return crosscheck_system(build_weight_system(c, k, core_block), cap)


def flip_node_sign(lws: LabeledWeightSystem, which: int = 0) -> LabeledWeightSystem:
    """Negative control: negate the weight of one node coordinate."""
    nodes = [l for l in lws.ws.labels if lws.tags.get(l) == NODE]
    if not nodes:
        raise ValueError("no node coordinate to perturb")
    target = nodes[which % len(nodes)]
    coords = tuple((l, tuple(-x for x in w) if l == target else w) for l, w in lws.ws.coords)
    return replace(lws, ws=WeightSystem(lws.ws.rank, coords, lws.ws.character))
