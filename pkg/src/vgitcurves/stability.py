"""A_k^-, A_k and A_k^+ stability of pointed curves (k = 2, 3, 4)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import CurveGraph, omega_degree, validate
from .hcurves import destabilizing_chains, destabilizing_tails

VARIANTS = ("minus", "plain", "plus")
SUPPORTED_K = (2, 3, 4)


class UnsupportedK(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str

    def to_json(self) -> dict:
        return {"rule": self.rule, "detail": self.detail}


@dataclass(frozen=True)
class StabilityVerdict:
    k: int
    variant: str
    violations: tuple[Violation, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"k": self.k, "variant": self.variant, "pass": self.passed,
                "violations": [v.to_json() for v in self.violations]}


def _tail_text(t) -> str:
    return f"destabilizing H_{{{t.m},1}}-tail, {t.boundary[0].attaching} attaching, on {','.join(t.components)}"


def _chain_text(ch) -> str:
    ends = "/".join(str(b.attaching) for b in ch.ends)
    return (f"destabilizing H_{{{ch.m},2}}-chain of length {ch.length}, {ends} attaching, "
            f"on {','.join(ch.components)}")


def h_levels(k: int, variant: str) -> list[int]:
    """The indices l whose destabilizing H_l structures are excluded."""
    top = k if variant == "plus" else k - 1
    return list(range(2, top + 1))


def stability(c: CurveGraph, k: int, variant: str = "plain") -> StabilityVerdict:
    if k not in SUPPORTED_K:
        raise UnsupportedK(f"k must be one of {SUPPORTED_K}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    bad: list[Violation] = []
    problems = validate(c)
    if problems:
        return StabilityVerdict(k, variant, tuple(Violation("invalid", p) for p in problems))
    for s, sing in enumerate(c.singularities):
        too_big = sing.k >= k if variant == "minus" else sing.k > k
        if too_big:
            bad.append(Violation("singularity", f"A_{sing.k} at singularity {s} exceeds the allowed types"))
    for comp in c.components:
        d = omega_degree(c, comp.id)
        if d <= 0:
            bad.append(Violation("ampleness", f"omega has degree {d} on component {comp.id}"))
    for l in h_levels(k, variant):
        m = l // 2
        if l % 2 == 0:
            bad.extend(Violation(f"H_{l}", _tail_text(t)) for t in destabilizing_tails(c, m))
        else:
            bad.extend(Violation(f"H_{l}", _chain_text(ch)) for ch in destabilizing_chains(c, m))
    return StabilityVerdict(k, variant, tuple(bad))
