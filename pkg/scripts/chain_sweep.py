"""Compare LP chambers of H_{m,2}-chain systems with the closed formula over a grid of (r, m)."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from vgitcurves.charts import chain_chamber_formula, chain_minus_formula, chain_system
from vgitcurves.vgit import DEFAULT_CAP, minus_locus, plus_locus


@dataclass
class SweepConfig:
    max_r: int = 5
    max_m: int = 2
    cap: int = DEFAULT_CAP


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'r':>3} {'m':>3} {'coords':>7} {'strata':>7} {'agree':>6} {'secs':>7}")
    for m in range(1, cfg.max_m + 1):
        for r in range(1, cfg.max_r + 1):
            t = time.perf_counter()
            ws = chain_system(r, m)
            plus = plus_locus(ws, cfg.cap)
            agree = plus == chain_chamber_formula(r, m) and minus_locus(ws, cfg.cap) == chain_minus_formula(r, m)
            ok &= agree
            print(f"{r:>3} {m:>3} {ws.n:>7} {len(plus.strata):>7} {str(agree):>6} {time.perf_counter() - t:>7.2f}")
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-r", type=int, default=SweepConfig.max_r)
    p.add_argument("--max-m", type=int, default=SweepConfig.max_m)
    p.add_argument("--cap", type=int, default=SweepConfig.cap)
    a = p.parse_args()
    raise SystemExit(0 if sweep(SweepConfig(a.max_r, a.max_m, a.cap)) else 1)


if __name__ == "__main__":
    main()
