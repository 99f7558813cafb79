#!/usr/bin/env python
"""Sweep deck sizes, compare computed and predicted group orders, time it.

Same work as `unshuffle verify`, but with per-record wall-clock timings,
which is handy when poking at engine behaviour or raising the cap.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from unshuffle import DEFAULT_CAP, verify_deck_size, write_report


@dataclass(frozen=True)
class SweepConfig:
    min_size: int = 2
    max_size: int = 52
    engine: str = "auto"
    cap: int = DEFAULT_CAP
    out: str | None = None


def run(config: SweepConfig) -> int:
    records = []
    total = time.perf_counter()
    for size in range(config.min_size, config.max_size + 1):
        if size % 2:
            continue
        for family in ("perfect", "unshuffle"):
            t0 = time.perf_counter()
            record = verify_deck_size(size, family, engine=config.engine, cap=config.cap)
            dt = time.perf_counter() - t0
            records.append(record)
            status = "ok" if record.match else "MISMATCH"
            computed = record.computed_order if record.computed_order is not None else "infeasible"
            print(
                f"2n={size:3d} {family:9s} {record.engine_used:8s} "
                f"|G|={computed} {status} [{dt:.3f}s]"
            )
    print(f"total: {time.perf_counter() - total:.2f}s, {len(records)} records")
    if config.out:
        write_report(records, config.out)
        print(f"report written to {config.out}")
    bad = [r for r in records if not r.match]
    if bad:
        print(f"{len(bad)} mismatching records")
        return 1
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=int, default=2)
    parser.add_argument("--max", type=int, default=52)
    parser.add_argument("--engine", choices=("auto", "bfs", "schreier"), default="auto")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()
    return run(SweepConfig(args.min, args.max, args.engine, args.cap, args.out))


if __name__ == "__main__":
    raise SystemExit(main())
