"""Plus/minus chambers of a diagonal torus action on affine space.

A point ``x`` lies in ``V-`` (resp. ``V+``) iff some one-parameter subgroup
``lam`` has ``<chi, lam> > 0`` (resp. ``< 0``) and ``lim lam(t).x`` exists,
i.e. ``<w_j, lam> >= 0`` on every nonzero coordinate of ``x``.  Membership
only depends on the support of ``x``, so both chambers are finite unions of
coordinate subspaces ``V(J)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .lp import lp_feasible

DEFAULT_CAP = 24
MINUS, PLUS = "minus", "plus"


class WeightSystemError(ValueError):
    pass


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    rank: int
    coords: tuple[tuple[str, tuple[int, ...]], ...]
    character: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple((str(l), tuple(int(x) for x in w)) for l, w in self.coords))
        object.__setattr__(self, "character", tuple(int(x) for x in self.character))
        if self.rank < 1:
            raise WeightSystemError("rank must be >= 1")
        if len(self.character) != self.rank:
            raise WeightSystemError(f"character has length {len(self.character)}, expected {self.rank}")
        seen = set()
        for label, w in self.coords:
            if len(w) != self.rank:
                raise WeightSystemError(f"weight of {label!r} has length {len(w)}, expected {self.rank}")
            if label in seen:
                raise WeightSystemError(f"duplicate label {label!r}")
            seen.add(label)

    @classmethod
    def build(cls, character: Sequence[int], coords: Iterable[tuple[str, Sequence[int] | int]]) -> "WeightSystem":
        """Convenience constructor; scalar weights are allowed in rank 1."""
        character = tuple(character)
        cs = []
        for label, w in coords:
            cs.append((label, (w,) if isinstance(w, int) else tuple(w)))
        return cls(len(character), tuple(cs), character)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def labels(self) -> list[str]:
        return [l for l, _ in self.coords]

    @property
    def weights(self) -> list[tuple[int, ...]]:
        return [w for _, w in self.coords]

    def index(self, label: str) -> int:
        for i, (l, _) in enumerate(self.coords):
            if l == label:
                return i
        raise KeyError(label)

    def support(self, s: Iterable[str | int]) -> frozenset[int]:
        """Normalise a support given by labels or indices to index form."""
        out = set()
        for x in s:
            if isinstance(x, int):
                if not 0 <= x < self.n:
                    raise WeightSystemError(f"support index {x} out of range")
                out.add(x)
            else:
                out.add(self.index(x))
        return frozenset(out)

    def max_weight(self) -> int:
        return max((abs(x) for w in self.weights for x in w), default=0)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "character": list(self.character),
            "coords": [{"label": l, "weights": list(w)} for l, w in self.coords],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "WeightSystem":
        try:
            coords = tuple((c["label"], tuple(c["weights"])) for c in doc["coords"])
            return cls(int(doc["rank"]), coords, tuple(doc["character"]))
        except (KeyError, TypeError) as exc:
            raise WeightSystemError(f"malformed weight system: {exc}") from exc


@dataclass(frozen=True)
class StratumUnion:
    """Irredundant union of coordinate subspaces ``V(J)``, keyed by label sets."""

    strata: tuple[tuple[str, ...], ...] = field(default=())

    @classmethod
    def of(cls, sets: Iterable[Iterable[str]]) -> "StratumUnion":
        uniq = {frozenset(s) for s in sets}
        minimal = [J for J in uniq if not any(K < J for K in uniq)]
        return cls(tuple(sorted(tuple(sorted(J)) for J in minimal)))

    @property
    def sets(self) -> list[frozenset[str]]:
        return [frozenset(J) for J in self.strata]

    def is_empty(self) -> bool:
        return not self.strata

    def contains_support(self, support: Iterable[str]) -> bool:
        """Is a point with this (label) support inside the union?"""
        s = set(support)
        return any(not (set(J) & s) for J in self.strata)

    def union(self, other: "StratumUnion") -> "StratumUnion":
        return StratumUnion.of([*self.strata, *other.strata])

    def minus(self, other: "StratumUnion") -> list[tuple[str, ...]]:
        o = set(other.strata)
        return [J for J in self.strata if J not in o]

    def to_json(self) -> dict:
        return {"strata": [list(J) for J in self.strata]}

    @classmethod
    def from_json(cls, doc: dict) -> "StratumUnion":
        return cls.of(doc["strata"])

    def __str__(self) -> str:
        if not self.strata:
            return "{}"
        return " u ".join("V(" + ",".join(J) + ")" for J in self.strata)


def _pair(w: Sequence[int], lam: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(w, lam))


def limit_exists(ws: WeightSystem, s: Iterable[str | int], lam: Sequence[int]) -> bool:
    if len(lam) != ws.rank:
        raise WeightSystemError(f"one-parameter subgroup has length {len(lam)}, expected {ws.rank}")
    return all(_pair(ws.coords[j][1], lam) >= 0 for j in ws.support(s))


def _sign(which: str) -> int:
    if which == MINUS:
        return 1
    if which == PLUS:
        return -1
    raise ValueError(f"chamber must be {MINUS!r} or {PLUS!r}")


def _feasible(rank: int, character: Sequence[int], sign: int, rows: Iterable[Sequence[int]]):
    cons = [([sign * c for c in character], ">=", 1)]
    cons += [(list(w), ">=", 0) for w in rows]
    return lp_feasible(cons, rank)


def _integer_witness(point: Sequence[Fraction]) -> tuple[int, ...]:
    den = reduce(lcm, (x.denominator for x in point), 1)
    return tuple(int(x * den) for x in point)


def in_chamber(ws: WeightSystem, s: Iterable[str | int], which: str) -> tuple[bool, tuple[int, ...] | None]:
    sign = _sign(which)
    idx = ws.support(s)
    ok, point = _feasible(ws.rank, ws.character, sign, (ws.coords[j][1] for j in sorted(idx)))
    if not ok:
        return False, None
    return True, _integer_witness(point)


def in_minus(ws: WeightSystem, s: Iterable[str | int]) -> tuple[bool, tuple[int, ...] | None]:
    """HM test for ``V-``: feasibility of ``<chi,lam> >= 1`` and ``<w_j,lam> >= 0`` on the support."""
    return in_chamber(ws, s, MINUS)


def in_plus(ws: WeightSystem, s: Iterable[str | int]) -> tuple[bool, tuple[int, ...] | None]:
    return in_chamber(ws, s, PLUS)


def _direction(w: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, (abs(x) for x in w), 0)
    return tuple(x // g for x in w) if g else tuple(w)


def constraint_classes(ws: WeightSystem) -> tuple[list[int], list[tuple[tuple[int, ...], list[int]]]]:
    """Split coordinates into weight-zero ones and groups sharing a weight ray.

    Coordinates whose weights are positive multiples of each other impose the
    same condition ``<w, lam> >= 0``, so a maximal feasible support contains
    all or none of each group; weight-zero coordinates impose nothing.
    """
    zero: list[int] = []
    groups: dict[tuple[int, ...], list[int]] = {}
    for j, (_, w) in enumerate(ws.coords):
        if not any(w):
            zero.append(j)
        else:
            groups.setdefault(_direction(w), []).append(j)
    return zero, list(groups.items())


def maximal_supports(ws: WeightSystem, which: str, cap: int = DEFAULT_CAP) -> list[frozenset[int]]:
    """All maximal supports ``S`` (index sets) with ``x`` of support ``S`` in the chamber."""
    sign = _sign(which)
    zero, groups = constraint_classes(ws)
    if len(groups) > cap:
        raise EnumerationTooLarge(
            f"enumeration too large: {len(groups)} independent weight rays exceed the cap of {cap}")
    dirs = [d for d, _ in groups]
    memo: dict[frozenset[int], bool] = {}
    # a witness lam certifies every subset of {i : <d_i, lam> >= 0}
    known_ok: list[frozenset[int]] = []
    known_bad: list[frozenset[int]] = []

    def feasible(cls: frozenset[int]) -> bool:
        if cls in memo:
            return memo[cls]
        if any(cls <= m for m in known_ok):
            ans = True
        elif any(b <= cls for b in known_bad):
            ans = False
        else:
            ans, point = _feasible(ws.rank, ws.character, sign, (dirs[i] for i in sorted(cls)))
            if ans:
                known_ok.append(frozenset(i for i, d in enumerate(dirs) if _pair(d, point) >= 0))
            else:
                known_bad.append(cls)
        memo[cls] = ans
        return ans

    if not feasible(frozenset()):
        return []
    found: list[frozenset[int]] = []

    def rec(i: int, cur: frozenset[int]) -> None:
        if i == len(dirs):
            if all(not feasible(cur | {j}) for j in range(len(dirs)) if j not in cur):
                found.append(cur)
            return
        grown = cur | {i}
        if feasible(grown):
            rec(i + 1, grown)
            # leaving i out only pays off if later choices block it
            rec(i + 1, cur)
        else:
            rec(i + 1, cur)

    rec(0, frozenset())
    out = []
    for cls in found:
        idx = set(zero)
        for i in cls:
            idx.update(groups[i][1])
        out.append(frozenset(idx))
    return out


def locus(ws: WeightSystem, which: str, cap: int = DEFAULT_CAP) -> StratumUnion:
    labels = ws.labels
    strata = []
    for sup in maximal_supports(ws, which, cap):
        strata.append([labels[j] for j in range(ws.n) if j not in sup])
    return StratumUnion.of(strata)


def minus_locus(ws: WeightSystem, cap: int = DEFAULT_CAP) -> StratumUnion:
    return locus(ws, MINUS, cap)


def plus_locus(ws: WeightSystem, cap: int = DEFAULT_CAP) -> StratumUnion:
    return locus(ws, PLUS, cap)


# ---------------------------------------------------------------- oracles

DEFAULT_BUDGET = 20_000_000


def certified_box_bound(ws: WeightSystem) -> int:
    return 4 * ws.rank * max(1, ws.max_weight())


class _Grid:
    """Cached integer box ``[-B, B]^r`` for the brute-force oracle."""

    _cache: dict[tuple[int, int], object] = {}

    @classmethod
    def get(cls, rank: int, bound: int):
        import numpy as np

        key = (rank, bound)
        if key not in cls._cache:
            if len(cls._cache) > 4:
                cls._cache.clear()
            axis = np.arange(-bound, bound + 1, dtype=np.int32)
            mesh = np.meshgrid(*([axis] * rank), indexing="ij")
            cls._cache[key] = np.stack([m.ravel() for m in mesh], axis=1)
        return cls._cache[key]


def _check_budget(rank: int, bound: int, budget: int) -> None:
    if rank * (2 * bound + 1) ** rank > budget:
        raise EnumerationTooLarge(f"box [-{bound},{bound}]^{rank} exceeds the enumeration budget {budget}")


def brute_force_masks(ws: WeightSystem, which: str, bound: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> set[int]:
    """Bitmasks ``{j : <w_j, lam> >= 0}`` over all box points with the right character sign."""
    import numpy as np

    sign = _sign(which)
    bound = certified_box_bound(ws) if bound is None else bound
    _check_budget(ws.rank, bound, budget)
    grid = _Grid.get(ws.rank, bound)
    chi = np.asarray(ws.character, dtype=np.int64)
    keep = (grid @ chi) * sign > 0
    pts = grid[keep]
    if len(pts) == 0:
        return set()
    if ws.n == 0:
        return {0}
    wmat = np.asarray(ws.weights, dtype=np.int32).T
    mask = ((pts @ wmat) >= 0) @ (np.int64(1) << np.arange(ws.n, dtype=np.int64))
    if ws.n <= 20:
        present = np.zeros(1 << ws.n, dtype=bool)
        present[mask] = True
        return {int(x) for x in np.flatnonzero(present)}
    return {int(x) for x in np.unique(mask)}


def brute_force_in_chamber(ws: WeightSystem, s: Iterable[str | int], which: str,
                           bound: int | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    idx = ws.support(s)
    want = sum(1 << j for j in idx)
    return any(m & want == want for m in brute_force_masks(ws, which, bound, budget))


def brute_force_in_minus(ws: WeightSystem, s: Iterable[str | int], bound: int | None = None,
                         budget: int = DEFAULT_BUDGET) -> bool:
    return brute_force_in_chamber(ws, s, MINUS, bound, budget)


def brute_force_in_plus(ws: WeightSystem, s: Iterable[str | int], bound: int | None = None,
                        budget: int = DEFAULT_BUDGET) -> bool:
    return brute_force_in_chamber(ws, s, PLUS, bound, budget)


def brute_force_locus(ws: WeightSystem, which: str, bound: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> StratumUnion:
    masks = brute_force_masks(ws, which, bound, budget)
    labels = ws.labels
    return StratumUnion.of([[labels[j] for j in range(ws.n) if not (m >> j) & 1] for m in masks])


def semi_invariant_monomials(ws: WeightSystem, sign: str, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors ``a`` with ``|a| <= degree`` and ``W a = nu chi`` for some ``nu`` of the given sign.

    ``sign`` is ``"neg"`` or ``"pos"``.  With the zero character every
    invariant monomial qualifies (any ``nu`` works).
    """
    if degree < 1:
        raise ValueError("degree bound must be >= 1")
    if sign not in ("neg", "pos"):
        raise ValueError("sign must be 'neg' or 'pos'")
    want = -1 if sign == "neg" else 1
    chi = ws.character
    pivot = next((i for i, c in enumerate(chi) if c), None)
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(ws.n), d):
            a = [0] * ws.n
            for j in combo:
                a[j] += 1
            wa = [sum(a[j] * ws.coords[j][1][i] for j in range(ws.n)) for i in range(ws.rank)]
            if pivot is None:
                if not any(wa):
                    out.append(tuple(a))
                continue
            if wa[pivot] % chi[pivot]:
                continue
            nu = wa[pivot] // chi[pivot]
            if nu * want > 0 and all(x == nu * c for x, c in zip(wa, chi)):
                out.append(tuple(a))
    return sorted(out)


def product_labels(ws1: WeightSystem, ws2: WeightSystem) -> tuple[dict[str, str], dict[str, str]]:
    """Label maps used by :func:`product_system` (suffixes only on collision)."""
    if set(ws1.labels) & set(ws2.labels):
        return ({l: f"{l}@1" for l in ws1.labels}, {l: f"{l}@2" for l in ws2.labels})
    return ({l: l for l in ws1.labels}, {l: l for l in ws2.labels})


def product_system(ws1: WeightSystem, ws2: WeightSystem) -> WeightSystem:
    m1, m2 = product_labels(ws1, ws2)
    z1, z2 = (0,) * ws1.rank, (0,) * ws2.rank
    coords = [(m1[l], w + z2) for l, w in ws1.coords]
    coords += [(m2[l], z1 + w) for l, w in ws2.coords]
    return WeightSystem(ws1.rank + ws2.rank, tuple(coords), ws1.character + ws2.character)


def restrict_system(ws: WeightSystem, vanishing: Iterable[str | int]) -> WeightSystem:
    """The action on ``V(Z)``: drop the coordinates in ``Z``."""
    z = ws.support(vanishing)
    coords = tuple(c for j, c in enumerate(ws.coords) if j not in z)
    return WeightSystem(ws.rank, coords, ws.character)


def pad_zero(ws: WeightSystem, count: int, prefix: str = "k_") -> WeightSystem:
    extra = tuple((f"{prefix}{i + 1}", (0,) * ws.rank) for i in range(count))
    return WeightSystem(ws.rank, ws.coords + extra, ws.character)


def unique_closed_point(ws: WeightSystem) -> bool:
    """Rank one: the origin is the only closed orbit iff all weights are nonzero of one sign."""
    if ws.rank != 1:
        raise WeightSystemError("unique_closed_point is only supported in rank 1")
    ws_ = [w[0] for w in ws.weights]
    return all(w > 0 for w in ws_) or all(w < 0 for w in ws_)
