"""Isomorphism of combinatorial curves.

Curves are encoded as vertex-labelled graphs (components, points,
singularities, declarations) and compared with networkx's VF2 matcher.
Crimping vectors match when they lie in one orbit of the rescaling action.
"""

from __future__ import annotations

from typing import Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .crimping import crimping_equivalent
from .curve import CurveGraph

DEFAULT_COMPONENT_CAP = 12


class TooLarge(ValueError):
    pass


def _graph(c: CurveGraph, mark_tags: Sequence[str] | None) -> nx.Graph:
    tags = list(mark_tags) if mark_tags is not None else [f"p{i}" for i in range(len(c.marks))]
    mark_of = {p: tags[i] for i, p in enumerate(c.marks)}
    g = nx.Graph()
    for comp in c.components:
        g.add_node(("c", comp.id), kind="comp", label=comp.genus)
        for p in comp.points:
            node = ("p", comp.id, p)
            g.add_node(node, kind="pt", label=(mark_of.get((comp.id, p)), p in comp.weierstrass))
            g.add_edge(("c", comp.id), node)
    for s, sing in enumerate(c.singularities):
        g.add_node(("s", s), kind="sing", label=sing.k, crimp=sing.crimping_vector())
        for cid, p in sing.branches:
            g.add_edge(("s", s), ("p", cid, p))
    for i, d in enumerate(c.h_declarations):
        g.add_node(("d", i), kind="decl", label=d.type)
        for cid, p in d.points:
            g.add_edge(("d", i), ("p", cid, p))
    return g


def _node_match(a: dict, b: dict) -> bool:
    if a["kind"] != b["kind"] or a["label"] != b["label"]:
        return False
    if a["kind"] == "sing":
        ca, cb = a["crimp"], b["crimp"]
        if ca is None or cb is None:
            return ca is cb
        return crimping_equivalent(ca, cb) is not None
    return True


def curves_isomorphic(c1: CurveGraph, c2: CurveGraph, tags1: Sequence[str] | None = None,
                      tags2: Sequence[str] | None = None, cap: int = DEFAULT_COMPONENT_CAP) -> bool:
    """Isomorphism preserving genera, singularity types, crimping orbits, declarations and marks.

    Marks are matched by tag; by default the tag is the mark index, so mark
    order is respected.  Equal tags make marks interchangeable.
    """
    if max(len(c1.components), len(c2.components)) > cap:
        raise TooLarge(f"more than {cap} components")
    if (len(c1.components), len(c1.singularities), len(c1.marks)) != (
            len(c2.components), len(c2.singularities), len(c2.marks)):
        return False
    g1, g2 = _graph(c1, tags1), _graph(c2, tags2)
    return GraphMatcher(g1, g2, node_match=_node_match).is_isomorphic()


def invariant_hash(c: CurveGraph, tags: Sequence[str] | None = None) -> str:
    """An isomorphism invariant (crimping orbits are not distinguished)."""
    g = _graph(c, tags)
    for n, data in g.nodes(data=True):
        data["h"] = f"{data['kind']}:{data['label']}"
    return nx.weisfeiler_lehman_graph_hash(g, node_attr="h")
