"""Command-line front end: ``nconj gen|check|export|resume|selftest``.

Exit codes: 0 success, 1 usage error, 2 computation error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from . import families
from .conditions import get_ring, validate_f_set
from .integer_core import DEFAULT_BUDGET, Budget
from .quality import SequenceTracker, UndefinedQualityError
from .store import RecordStore, TupleRecord, default_store_path, export_csv, format_params, parse_params

log = logging.getLogger("nconj")

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    budget: Budget = DEFAULT_BUDGET
    margin: float = 1e-9
    window: int = 10
    store: Path = field(default_factory=default_store_path)
    family_params: dict = field(default_factory=dict)
    workers: int = 1

    def __post_init__(self):
        if self.margin <= 0 or self.window < 1 or self.workers < 1:
            raise UsageError("margin, window and workers must be positive")


def parse_budget(text: str | None) -> Budget:
    """``"rho=1e7,trial=1e6"`` or a bare rho iteration count."""
    if not text:
        return DEFAULT_BUDGET
    try:
        if "=" not in text:
            return Budget(rho_iterations=int(float(text)))
        kw = {}
        for part in text.split(","):
            k, _, v = part.partition("=")
            key = {"rho": "rho_iterations", "trial": "trial_bound", "seed": "seed"}[k.strip()]
            kw[key] = int(float(v))
        return Budget(**kw)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad --budget {text!r}: {exc}") from None


def parse_f_set(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return validate_f_set(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad --f-set {text!r}: {exc}") from None


def _score(job: tuple[str, int, dict, Budget]) -> TupleRecord:
    family_id, index, params, budget = job
    ring, tup = families.build(family_id, params)
    return TupleRecord.build(
        ring.name, tup, family_id=family_id, params=format_params(params), index=index, budget=budget
    )


def generate(
    family_id: str, start: int, stop: int, cfg: RunConfig, *, n: int | None = None
) -> Iterator[TupleRecord]:
    """Records for members ``start..stop-1`` of a family, in order."""
    if family_id not in families.FAMILY_IDS:
        raise UsageError(f"unknown family {family_id!r}; expected one of {', '.join(families.FAMILY_IDS)}")
    if family_id == "hurwitz-n" and n is None:
        raise UsageError("hurwitz-n needs --n")
    try:
        jobs = [(family_id, i, families.family_params(family_id, i, n=n), cfg.budget) for i in range(start, stop)]
    except families.FamilyParameterError as exc:
        raise UsageError(str(exc)) from None
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            yield from pool.map(_score, jobs)
    else:
        for job in jobs:
            yield _score(job)


def _print_header(out) -> None:
    print(f"{'#':>4}  {'params':<24} {'q':>12}  {'rad':>14}  {'A':>1} {'U':>1}  note", file=out)


def _print_row(rec: TupleRecord, out, bound: float | None = None) -> None:
    rad = str(rec.rad)
    if len(rad) > 14:
        rad = rad[:6] + "..." + rad[-5:]
    note = "" if rec.rad_complete else "lower bound"
    if bound is not None:
        note = (note + " " if note else "") + f"bound {bound:.6f}"
    idx = "" if rec.index is None else rec.index
    print(
        f"{idx:>4}  {rec.params or '-':<24} {rec.q:>12.6f}  {rad:>14}  "
        f"{'y' if rec.in_A else 'n':>1} {'y' if rec.in_U else 'n':>1}  {note}",
        file=out,
    )


def _run_generation(family_id: str, start: int, stop: int, cfg: RunConfig, n: int | None, out) -> list[TupleRecord]:
    store = RecordStore(cfg.store)
    tracker = SequenceTracker(window=cfg.window)
    recs = []
    _print_header(out)
    for rec in generate(family_id, start, stop, cfg, n=n):
        store.append(rec)
        recs.append(rec)
        tracker.track(rec)
        _print_row(rec, out, families.family_bound(family_id, parse_params(rec.params)))
    if recs:
        print(f"{len(recs)} records -> {cfg.store}; best q = {tracker.best_q:.9f}", file=out)
    else:
        print(f"nothing to generate; {cfg.store} unchanged", file=out)
    return recs


def cmd_gen(args, cfg: RunConfig, out) -> int:
    family_id = args.family_pos or args.family
    if not family_id:
        raise UsageError("gen needs a family (elkies4, hurwitz-power3, hurwitz-pell3, hurwitz-n)")
    count = args.lmax if (args.lmax is not None and family_id == "hurwitz-power3") else args.count
    if count is None or count < 1:
        raise UsageError("gen needs a positive --count (or --lmax for hurwitz-power3)")
    _run_generation(family_id, 0, count, cfg, args.n, out)
    return EXIT_OK


def _family_records(store: RecordStore, family_id: str, n: int | None) -> list[TupleRecord]:
    recs = [r for r in store.load() if r.family_id == family_id and r.index is not None]
    if family_id == "hurwitz-n":
        recs = [r for r in recs if parse_params(r.params).get("n") == n]
    return recs


def cmd_resume(args, cfg: RunConfig, out) -> int:
    family_id = args.family_pos or args.family
    if not family_id:
        raise UsageError("resume needs --family")
    total = args.lmax if (args.lmax is not None and family_id == "hurwitz-power3") else args.count
    if total is None or total < 1:
        raise UsageError("resume needs the target total --count")
    done = _family_records(RecordStore(cfg.store), family_id, args.n)
    start = max((r.index for r in done), default=-1) + 1
    print(f"resuming {family_id} at index {start} (target {total})", file=out)
    _run_generation(family_id, start, total, cfg, args.n, out)
    return EXIT_OK


def cmd_check(args, cfg: RunConfig, out) -> int:
    ring = get_ring(args.ring)
    try:
        elems = [ring.parse(s) for s in args.tuple.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(elems) < 3:
        raise UsageError("a tuple needs at least 3 entries")
    if any(e == ring.zero for e in elems):
        raise UsageError("tuple entries must be nonzero")
    f_set = parse_f_set(args.f_set)
    rec = TupleRecord.build(ring.name, elems, f_set, budget=cfg.budget)
    print(f"ring      {rec.ring}", file=out)
    print(f"entries   {', '.join(rec.entries)}", file=out)
    failed = [k for k in ("Z", "S1", "S2", "G1", "G2", "F") if not rec.conditions[k]]
    print(f"in A      {rec.in_A}", file=out)
    print(f"in U      {rec.in_U}" + (f"  (F = {sorted(f_set)})" if f_set else ""), file=out)
    print(f"failed    {', '.join(failed) or '-'}", file=out)
    print(f"max norm  {rec.max_norm}", file=out)
    print(f"rad       {rec.rad}" + ("" if rec.rad_complete else "  (upper bound, incomplete factorization)"), file=out)
    print(f"q         {rec.q:.9f}" + ("  (lower bound)" if rec.q_is_lower_bound else ""), file=out)
    if args.store:
        RecordStore(cfg.store).append(rec)
    return EXIT_OK


def cmd_export(args, cfg: RunConfig, out) -> int:
    if not cfg.store.exists():
        raise UsageError(f"store {cfg.store} does not exist")
    if args.format != "csv":
        raise UsageError("only csv export is supported")
    target = args.out or cfg.store.with_suffix(".csv")
    rows = export_csv(RecordStore(cfg.store).load(), target)
    print(f"wrote {rows} rows to {target}", file=out)
    return EXIT_OK


def cmd_selftest(args, cfg: RunConfig, out) -> int:
    from .selftest import run_selftest

    return EXIT_OK if run_selftest(out) else EXIT_COMPUTE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--store", help="JSONL record store (default: $NCONJ_STORE or ./nconj_records.jsonl)")
    common.add_argument("--budget", help="factoring effort, e.g. 'rho=1e7,trial=1e6' or a rho iteration count")
    common.add_argument("--window", type=int, default=10, help="window length for running maxima")
    common.add_argument("-v", "--verbose", action="store_true")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("family_pos", nargs="?", metavar="FAMILY", help=" | ".join(families.FAMILY_IDS))
    fam.add_argument("--family", choices=families.FAMILY_IDS)
    fam.add_argument("--count", type=int)
    fam.add_argument("--lmax", type=int, help="largest ell for hurwitz-power3 (ell = 1..lmax)")
    fam.add_argument("--n", type=int, help="tuple length for hurwitz-n")
    fam.add_argument("--workers", type=int, default=1)

    p = _Parser(prog="nconj", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("gen", parents=[common, fam], help="generate and score a tuple family")
    sub.add_parser("resume", parents=[common, fam], help="continue a family up to --count records")
    c = sub.add_parser("check", parents=[common], help="classify and score one tuple")
    c.add_argument("tuple", help='comma-separated entries, e.g. "1,8,-9" or "1+24i-288k,1-24i+288k,-2"')
    c.add_argument("--ring", default="Z", choices=("Z", "Zi", "Hurwitz"))
    c.add_argument("--f-set", help="comma-separated F, each >= 3")
    e = sub.add_parser("export", parents=[common], help="export the store as CSV")
    e.add_argument("--out")
    e.add_argument("--format", default="csv")
    sub.add_parser("selftest", parents=[common], help="quick end-to-end checks")
    return p


COMMANDS = {"gen": cmd_gen, "resume": cmd_resume, "check": cmd_check, "export": cmd_export, "selftest": cmd_selftest}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(
            budget=parse_budget(args.budget),
            window=args.window,
            store=Path(args.store) if args.store else default_store_path(),
            workers=getattr(args, "workers", 1),
        )
        t0 = time.perf_counter()
        code = COMMANDS[args.command](args, cfg, out)
        log.info("%s finished in %.2fs", args.command, time.perf_counter() - t0)
        return code
    except UsageError as exc:
        print(f"nconj: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UndefinedQualityError, families.FamilyIdentityError, ArithmeticError) as exc:
        print(f"nconj: computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as exc:
        print(f"nconj: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
