"""Score the first members of every family and write one CSV per family.

    python scripts/scan_families.py --out results/ --count 6 --lmax 30
"""

from __future__ import annotations

import argparse
import csv
import time
from pathlib import Path

from nconj import families as F
from nconj.conditions import classify
from nconj.quality import SequenceTracker, quality


def scan(family_id: str, count: int, n: int | None = None) -> list[dict]:
    tracker = SequenceTracker()
    rows = []
    for i in range(count):
        params = F.family_params(family_id, i, n=n)
        ring, tup = F.build(family_id, params)
        t0 = time.perf_counter()
        report = quality(tup, ring)
        profile = classify(tup, (), ring)
        tracker.track(report)
        rows.append(
            {
                "index": i,
                **params,
                "q": report.q,
                "bound": F.family_bound(family_id, params),
                "rad_complete": report.rad_complete,
                "in_A": profile.in_A,
                "in_U": profile.in_U,
                "best_q": tracker.best_q,
                "seconds": round(time.perf_counter() - t0, 4),
            }
        )
    return rows


def write(rows: list[dict], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--count", type=int, default=6, help="members for elkies4 and hurwitz-pell3")
    ap.add_argument("--lmax", type=int, default=30)
    ap.add_argument("--nmax", type=int, default=8)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    jobs = [("elkies4", args.count, None), ("hurwitz-power3", args.lmax, None), ("hurwitz-pell3", args.count, None)]
    jobs += [("hurwitz-n", 1, n) for n in range(4, args.nmax + 1)]
    for family_id, count, n in jobs:
        rows = scan(family_id, count, n)
        name = family_id if n is None else f"{family_id}-{n}"
        write(rows, args.out / f"{name}.csv")
        below = sum(r["q"] < r["bound"] - 1e-9 for r in rows)
        print(f"{name:<18} {len(rows):>3} rows  best q {rows[-1]['best_q']:.6f}  below bound: {below}")


if __name__ == "__main__":
    main()
