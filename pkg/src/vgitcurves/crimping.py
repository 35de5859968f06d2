"""Crimping data of A_k-singularities.

A crimping vector ``(c_1, ..., c_{m-1})`` records how a smooth branch (or a
pair of branches) is pinched into an A_{2m} (resp. A_{2m+1}) singularity.
Rescaling the branch coordinate acts on ``c_l`` with weight ``2l-1`` (even)
or ``l`` (odd); the zero vector is the monomial singularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

EVEN, ODD = "even", "odd"
INF = "inf"


def _check(m: int, parity: str) -> None:
    if m < 1:
        raise ValueError("m must be >= 1")
    if parity not in (EVEN, ODD):
        raise ValueError("parity must be 'even' or 'odd'")


def crimping_weights(m: int, parity: str) -> list[int]:
    """G_m-weights on the crimping coordinates: 1,3,...,2m-3 (even) or 1,...,m-1 (odd)."""
    _check(m, parity)
    if parity == EVEN:
        return [2 * l - 1 for l in range(1, m)]
    return list(range(1, m))


def h_weight_table(m: int, parity: str) -> list[int]:
    """Weights of the G_m-action presenting the hyperelliptic stacks.

    One-pointed: -4,-6,...,-(4m+2).  Two-pointed: -2,-3,...,-(2m+2).
    """
    _check(m, parity)
    if parity == EVEN:
        return [-2 * l for l in range(2, 2 * m + 2)]
    return [-l for l in range(2, 2 * m + 3)]


def parse_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise ValueError(f"not a rational: {x!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CrimpingVector:
    parity: str
    m: int
    entries: tuple[Fraction, ...] = ()

    def __post_init__(self):
        _check(self.m, self.parity)
        object.__setattr__(self, "entries", tuple(parse_rational(e) for e in self.entries))
        if len(self.entries) != self.m - 1:
            raise ValueError(f"crimping vector for m={self.m} needs {self.m - 1} entries, got {len(self.entries)}")

    @classmethod
    def monomial(cls, m: int, parity: str) -> "CrimpingVector":
        return cls(parity, m, (Fraction(0),) * (m - 1))

    @property
    def weights(self) -> list[int]:
        return crimping_weights(self.m, self.parity)

    def is_monomial(self) -> bool:
        return all(e == 0 for e in self.entries)

    def scaled(self, lam: Fraction) -> "CrimpingVector":
        lam = Fraction(lam)
        return CrimpingVector(self.parity, self.m, tuple(lam ** w * c for w, c in zip(self.weights, self.entries)))

    def to_json(self) -> list[str]:
        return [format_rational(e) for e in self.entries]


def _int_root(n: int, k: int) -> int | None:
    """Exact nonnegative integer k-th root, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    # fall back to bisection for large values
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** k
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_roots(q: Fraction, k: int) -> list[Fraction]:
    """All rational ``x`` with ``x**k == q``."""
    q = Fraction(q)
    if k == 0:
        return []
    if q == 0:
        return [Fraction(0)]
    num, den = abs(q.numerator), q.denominator
    a, b = _int_root(num, k), _int_root(den, k)
    if a is None or b is None:
        return []
    x = Fraction(a, b)
    if k % 2 == 0:
        return [x, -x] if q > 0 else []
    return [x if q > 0 else -x]


def _bezout(ws: Sequence[int]) -> tuple[int, list[int]]:
    """gcd of the weights together with integer coefficients realising it."""
    g, coeffs = 0, []
    for w in ws:
        if g == 0:
            g, coeffs = w, [1]
            continue
        # extended Euclid on (g, w)
        old_r, r = g, w
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            qq = old_r // r
            old_r, r = r, old_r - qq * r
            old_s, s = s, old_s - qq * s
            old_t, t = t, old_t - qq * t
        coeffs = [c * old_s for c in coeffs] + [old_t]
        g = old_r
    return g, coeffs


def crimping_equivalent(c: CrimpingVector, c2: CrimpingVector) -> Fraction | None:
    """A rational ``lam != 0`` with ``c2_l = lam**w_l * c_l`` for every ``l``, or None."""
    if (c.m, c.parity) != (c2.m, c2.parity):
        raise ValueError("crimping vectors of different type")
    ws = c.weights
    support = []
    for w, a, b in zip(ws, c.entries, c2.entries):
        if (a == 0) != (b == 0):
            return None
        if a != 0:
            support.append((w, b / a))
    if not support:
        return Fraction(1)
    g, coeffs = _bezout([w for w, _ in support])
    target = Fraction(1)
    for x, (_, ratio) in zip(coeffs, support):
        target *= ratio ** x
    for lam in rational_roots(target, g):
        if lam != 0 and all(lam ** w == ratio for w, ratio in support):
            return lam
    return None


# ------------------------------------------------------------ subalgebras

@dataclass(frozen=True)
class TruncatedSeries:
    """A tuple of branches, each a coefficient list modulo ``s^T``.

    Even singularities use one branch; odd ones a pair.
    """

    branches: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def monomial(cls, exponent: int, order: int, branch: int = 0, nbranches: int = 1) -> "TruncatedSeries":
        out = []
        for b in range(nbranches):
            coeffs = [Fraction(0)] * order
            if b == branch and exponent < order:
                coeffs[exponent] = Fraction(1)
            out.append(tuple(coeffs))
        return cls(tuple(out))

    @classmethod
    def from_coeffs(cls, *branches: Sequence) -> "TruncatedSeries":
        return cls(tuple(tuple(parse_rational(x) for x in b) for b in branches))

    @property
    def order(self) -> int:
        return len(self.branches[0])

    def valuation(self) -> int:
        v = self.order
        for b in self.branches:
            for i, x in enumerate(b):
                if x != 0:
                    v = min(v, i)
                    break
        return v

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = []
        for a, b in zip(self.branches, other.branches):
            T = len(a)
            prod = [Fraction(0)] * T
            for i, x in enumerate(a):
                if x == 0:
                    continue
                for j in range(T - i):
                    if b[j] != 0:
                        prod[i + j] += x * b[j]
            out.append(tuple(prod))
        return TruncatedSeries(tuple(out))

    def substitute_scale(self, lam: Fraction) -> "TruncatedSeries":
        """``f(s) -> f(lam s)`` on every branch."""
        lam = Fraction(lam)
        return TruncatedSeries(tuple(tuple(x * lam ** i for i, x in enumerate(b)) for b in self.branches))

    def flat(self) -> list[Fraction]:
        return [x for b in self.branches for x in b]


def subalgebra_generators(c: CrimpingVector, order: int | None = None) -> list[TruncatedSeries]:
    """Truncated generators of the crimped subalgebra.

    Even: ``(s + c_1 s^2 + ... + c_{m-1} s^{2m-2})^2, s^{2m}, ..., s^{4m-1}`` mod ``s^{4m}``.
    Odd: ``(s_1 + c_1 s_1^2 + ... + c_{m-1} s_1^m, s_2)``, ``(s_1^j, 0)``, ``(0, s_2^j)``
    for ``j = m+1..2m+1``, each branch modulo ``s^{2m+2}``.
    """
    m = c.m
    if c.parity == EVEN:
        need = 4 * m
        T = need if order is None else order
        if T < need:
            raise ValueError(f"truncation order {T} is below {need}")
        base = [Fraction(0)] * T
        base[1] = Fraction(1)
        for l, cl in enumerate(c.entries, start=1):
            if 2 * l < T:
                base[2 * l] += cl
        b = TruncatedSeries((tuple(base),))
        return [b * b] + [TruncatedSeries.monomial(j, T) for j in range(2 * m, 4 * m)]
    need = 2 * m + 2
    T = need if order is None else order
    if T < need:
        raise ValueError(f"truncation order {T} is below {need}")
    first = [Fraction(0)] * T
    first[1] = Fraction(1)
    for l, cl in enumerate(c.entries, start=1):
        first[l + 1] += cl
    second = [Fraction(0)] * T
    second[1] = Fraction(1)
    gens = [TruncatedSeries((tuple(first), tuple(second)))]
    gens += [TruncatedSeries.monomial(j, T, 0, 2) for j in range(m + 1, 2 * m + 2)]
    gens += [TruncatedSeries.monomial(j, T, 1, 2) for j in range(m + 1, 2 * m + 2)]
    return gens


def _span_products(gens: Sequence[TruncatedSeries]) -> list[TruncatedSeries]:
    """All products of generators that survive truncation, plus the unit."""
    T = gens[0].order
    nb = len(gens[0].branches)
    one = TruncatedSeries(tuple(tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(T)) for _ in range(nb)))
    live = [g for g in gens if g.valuation() < T]
    out = [one]
    frontier = [(one, 0)]
    while frontier:
        nxt = []
        for prod, start in frontier:
            for i in range(start, len(live)):
                p = prod * live[i]
                if p.valuation() < T:
                    out.append(p)
                    nxt.append((p, i))
        frontier = nxt
    return out


def _in_span(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> bool:
    """Exact row reduction: is ``target`` a linear combination of ``vectors``?"""
    basis: list[tuple[int, list[Fraction]]] = []

    def reduce(v: list[Fraction]) -> list[Fraction]:
        for piv, row in basis:
            if v[piv] != 0:
                f = v[piv] / row[piv]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    for vec in vectors:
        v = reduce(list(vec))
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is not None:
            basis.append((piv, v))
    return not any(reduce(list(target)))


def subalgebra_contains(gens: Sequence[TruncatedSeries], f: TruncatedSeries) -> bool:
    if not gens:
        raise ValueError("empty generator list")
    if f.order != gens[0].order or len(f.branches) != len(gens[0].branches):
        raise ValueError("series and generators use different truncations")
    return _in_span([p.flat() for p in _span_products(gens)], f.flat())


# ------------------------------------------------------------ limits

@dataclass(frozen=True)
class ValuedEntry:
    val: int | None  # None encodes +infinity (identically zero)
    lead: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lead", parse_rational(self.lead))
        if self.val is None and self.lead != 0:
            raise ValueError("an identically zero entry has no leading coefficient")
        if self.val is not None and self.lead == 0:
            raise ValueError("a leading coefficient must be nonzero")

    def to_json(self) -> dict:
        return {"val": INF if self.val is None else self.val, "lead": format_rational(self.lead)}

    @classmethod
    def from_json(cls, doc: dict) -> "ValuedEntry":
        v = doc["val"]
        return cls(None if v == INF else int(v), parse_rational(doc.get("lead", "0")))


@dataclass(frozen=True)
class ValuedCrimping:
    parity: str
    m: int
    entries: tuple[ValuedEntry, ...]

    def __post_init__(self):
        _check(self.m, self.parity)
        if len(self.entries) != self.m - 1:
            raise ValueError(f"valued crimping for m={self.m} needs {self.m - 1} entries")


def limit_crimping(v: ValuedCrimping) -> tuple[int, CrimpingVector]:
    """Minimal number of blow-ups ``b`` and the limit crimping.

    ``b`` is the least nonnegative integer with ``w_l b + b_l >= 0`` for all
    ``l``; the limit keeps the leading coefficient where equality holds.
    """
    ws = crimping_weights(v.m, v.parity)
    b = 0
    for w, e in zip(ws, v.entries):
        if e.val is not None:
            b = max(b, -((e.val) // w))  # ceil(-val / w)
    limit = []
    for w, e in zip(ws, v.entries):
        if e.val is not None and w * b + e.val == 0:
            limit.append(e.lead)
        else:
            limit.append(Fraction(0))
    return b, CrimpingVector(v.parity, v.m, tuple(limit))


__all__ = [
    "EVEN", "ODD", "CrimpingVector", "TruncatedSeries", "ValuedCrimping", "ValuedEntry",
    "crimping_weights", "h_weight_table", "crimping_equivalent", "subalgebra_generators",
    "subalgebra_contains", "limit_crimping", "parse_rational", "format_rational", "rational_roots",
]
