"""Stress the LP chamber test against the brute-force 1-PS oracle on random weight systems."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from vgitcurves.golden import SEED, monomial_obstructions, oracle_agreement, random_system


@dataclass
class OracleConfig:
    systems: int = 500
    seed: int = SEED
    max_rank: int = 3
    max_n: int = 8
    max_w: int = 6
    monomial_degree: int = 4


def sweep(cfg: OracleConfig) -> int:
    rng = random.Random(cfg.seed)
    failures = 0
    t = time.perf_counter()
    for i in range(cfg.systems):
        ws = random_system(rng, cfg.max_rank, cfg.max_n, cfg.max_w)
        errs = oracle_agreement(ws, rng) + monomial_obstructions(ws, cfg.monomial_degree)
        for e in errs:
            print(f"system {i}: {e}\n  {ws.to_json()}")
        failures += bool(errs)
    print(f"{cfg.systems} systems, {failures} disagreements, {time.perf_counter() - t:.1f}s (seed {cfg.seed})")
    return failures


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--systems", type=int, default=OracleConfig.systems)
    p.add_argument("--seed", type=int, default=OracleConfig.seed)
    p.add_argument("--max-rank", type=int, default=OracleConfig.max_rank)
    p.add_argument("--max-n", type=int, default=OracleConfig.max_n)
    a = p.parse_args()
    cfg = OracleConfig(systems=a.systems, seed=a.seed, max_rank=a.max_rank, max_n=a.max_n)
    raise SystemExit(1 if sweep(cfg) else 0)


if __name__ == "__main__":
    main()
