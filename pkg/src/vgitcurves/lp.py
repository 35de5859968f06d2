"""Exact rational linear feasibility.

Two independent kernels decide feasibility of a system ``a . x >= b`` over
the rationals: a Phase-I simplex with Bland's rule (the default) and
Fourier-Motzkin elimination with back substitution.  Both return an exact
``Fraction`` point on success.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Constraint = tuple[Sequence[int], str, int]

_RELATIONS = (">=", "<=", "==")


def _normalise(constraints: Iterable[Constraint]) -> tuple[list[list[Fraction]], list[Fraction], int]:
    """Rewrite every constraint as ``a . x >= b`` (equalities become two rows)."""
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    dim = None
    for vec, rel, bound in constraints:
        if rel not in _RELATIONS:
            raise ValueError(f"unsupported relation {rel!r}")
        if dim is None:
            dim = len(vec)
        elif len(vec) != dim:
            raise ValueError("constraint vectors have different lengths")
        a = [Fraction(v) for v in vec]
        b = Fraction(bound)
        if rel in (">=", "=="):
            rows.append(a)
            rhs.append(b)
        if rel in ("<=", "=="):
            rows.append([-v for v in a])
            rhs.append(-b)
    return rows, rhs, (dim or 0)


def lp_feasible(constraints: Iterable[Constraint], dim: int | None = None) -> tuple[bool, list[Fraction] | None]:
    """Decide feasibility of ``{x in Q^d : a_i . x  rel_i  b_i}`` exactly.

    Uses a Phase-I simplex on the split variables ``x = u - v`` with one slack
    and one artificial per row.  Bland's rule rules out cycling.
    """
    rows, rhs, d = _normalise(constraints)
    if dim is not None:
        if rows and d != dim:
            raise ValueError("constraint length does not match dim")
        d = dim
    if not rows:
        return True, [Fraction(0)] * d

    m = len(rows)
    n_struct = 2 * d + m          # u, v, slacks
    n_cols = n_struct + m         # + artificials
    tab: list[list[Fraction]] = []
    for i, (a, b) in enumerate(zip(rows, rhs)):
        row = [Fraction(0)] * (n_cols + 1)
        sgn = -1 if b < 0 else 1
        for j, aj in enumerate(a):
            row[j] = sgn * aj
            row[d + j] = -sgn * aj
        row[2 * d + i] = Fraction(-sgn)
        row[n_struct + i] = Fraction(1)
        row[-1] = sgn * b
        tab.append(row)
    basis = [n_struct + i for i in range(m)]

    # reduced costs of the Phase-I objective sum(artificials)
    cost = [Fraction(0)] * (n_cols + 1)
    for row in tab:
        for j in range(n_struct):
            cost[j] -= row[j]
        cost[-1] -= row[-1]

    while True:
        enter = next((j for j in range(n_struct) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = -1
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave < 0:  # cannot happen in Phase I (objective bounded below)
            break
        prow = tab[leave]
        piv = prow[enter]
        if piv != 1:
            tab[leave] = prow = [x / piv if x else x for x in prow]
        nz = [j for j, y in enumerate(prow) if y]
        for i, row in enumerate(tab):
            if i != leave and row[enter] != 0:
                f = row[enter]
                for j in nz:
                    row[j] -= f * prow[j]
        if cost[enter] != 0:
            f = cost[enter]
            for j in nz:
                cost[j] -= f * prow[j]
        basis[leave] = enter

    if cost[-1] != 0:
        return False, None
    values = [Fraction(0)] * n_cols
    for i, col in enumerate(basis):
        values[col] = tab[i][-1]
    point = [values[j] - values[d + j] for j in range(d)]
    return True, point


def _primitive(a: list[Fraction], b: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    """Scale a row so its coefficients are coprime integers (dedup key)."""
    den = 1
    for x in (*a, b):
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in (*a, b)]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    g = g or 1
    ints = [x // g for x in ints]
    return tuple(Fraction(x) for x in ints[:-1]), Fraction(ints[-1])


def fm_feasible(constraints: Iterable[Constraint], dim: int | None = None) -> tuple[bool, list[Fraction] | None]:
    """Fourier-Motzkin elimination with back substitution.

    Slower than :func:`lp_feasible` but shares no code with it; the test
    suite uses it as a second exact route.
    """
    rows, rhs, d = _normalise(constraints)
    if dim is not None:
        d = dim
    system = {_primitive(a, b) for a, b in zip(rows, rhs)}
    levels: list[set] = []
    for var in range(d - 1, -1, -1):
        levels.append(system)
        pos, neg, rest = [], [], []
        for a, b in system:
            (pos if a[var] > 0 else neg if a[var] < 0 else rest).append((a, b))
        nxt = set(rest)
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = ap[var], -an[var]
                a = [cn * x + cp * y for x, y in zip(ap, an)]
                nxt.add(_primitive(a, cn * bp + cp * bn))
        system = nxt
    for a, b in system:
        if b > 0:  # all coefficients are zero here: 0 >= b
            return False, None
    point = [Fraction(0)] * d
    for var, level in zip(range(d), reversed(levels)):
        lo, hi = None, None
        for a, b in level:
            coef = a[var]
            if coef == 0:
                continue
            rest = b - sum(a[j] * point[j] for j in range(var))
            bound = rest / coef
            if coef > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            point[var] = lo
        elif lo is not None:
            point[var] = lo
        elif hi is not None:
            point[var] = hi
    return True, point


def satisfies(constraints: Iterable[Constraint], point: Sequence[Fraction]) -> bool:
    for vec, rel, bound in constraints:
        val = sum(Fraction(a) * x for a, x in zip(vec, point))
        if rel == ">=" and not val >= bound:
            return False
        if rel == "<=" and not val <= bound:
            return False
        if rel == "==" and val != bound:
            return False
    return True
