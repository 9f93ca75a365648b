"""JSONL record store and CSV export.

One JSON object per line, appended whole. A torn last line (no trailing
newline) is dropped on the next append, and unreadable lines are skipped with
a warning when loading.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .conditions import ConditionProfile, classify, get_ring
from .integer_core import DEFAULT_BUDGET, Budget
from .quality import COMPARISON_MARGIN, QualityReport, quality

log = logging.getLogger(__name__)

STORE_ENV = "NCONJ_STORE"
DEFAULT_STORE = "nconj_records.jsonl"
CSV_COLUMNS = ("ring", "n", "family", "params", "q", "rad", "rad_complete", "max_norm", "entries")


def default_store_path() -> Path:
    return Path(os.environ.get(STORE_ENV, DEFAULT_STORE))


def format_params(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def parse_params(text: str) -> dict:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        k, _, v = part.partition("=")
        out[k] = int(v)
    return out


@dataclass
class TupleRecord:
    ring: str
    entries: list[str]
    conditions: dict
    max_norm: int
    rad: int
    rad_complete: bool
    q: float
    q_is_lower_bound: bool
    family_id: str = "adhoc"
    params: str = ""
    index: int | None = None
    n: int = field(init=False)

    def __post_init__(self):
        self.n = len(self.entries)

    @classmethod
    def build(
        cls,
        ring_name: str,
        elements: Sequence,
        f_set=(),
        *,
        family_id: str = "adhoc",
        params: str = "",
        index: int | None = None,
        budget: Budget = DEFAULT_BUDGET,
        profile: ConditionProfile | None = None,
        report: QualityReport | None = None,
    ) -> TupleRecord:
        ring = get_ring(ring_name)
        profile = profile or classify(elements, f_set, ring)
        report = report or quality(elements, ring, budget)
        return cls(
            ring=ring.name,
            entries=[ring.format(ring.coerce(e)) for e in elements],
            conditions=profile.to_dict(),
            max_norm=report.max_norm,
            rad=report.rad_value,
            rad_complete=report.rad_complete,
            q=report.q,
            q_is_lower_bound=report.q_is_lower_bound,
            family_id=family_id,
            params=params,
            index=index,
        )

    @property
    def in_A(self) -> bool:
        return self.conditions["in_A"]

    @property
    def in_U(self) -> bool:
        return self.conditions["in_U"]

    def elements(self) -> list:
        ring = get_ring(self.ring)
        return [ring.parse(s) for s in self.entries]

    def to_json(self) -> str:
        d = {
            "ring": self.ring,
            "n": self.n,
            "entries": self.entries,
            "max_norm": self.max_norm,
            "rad": self.rad,
            "rad_complete": self.rad_complete,
            "q": self.q,
            "q_is_lower_bound": self.q_is_lower_bound,
            "conditions": self.conditions,
            "family": self.family_id,
            "params": self.params,
            "index": self.index,
        }
        return json.dumps(d, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> TupleRecord:
        d = json.loads(line)
        rec = cls(
            ring=d["ring"],
            entries=list(d["entries"]),
            conditions=dict(d["conditions"]),
            max_norm=int(d["max_norm"]),
            rad=int(d["rad"]),
            rad_complete=bool(d["rad_complete"]),
            q=float(d["q"]),
            q_is_lower_bound=bool(d["q_is_lower_bound"]),
            family_id=d.get("family", "adhoc"),
            params=d.get("params", ""),
            index=d.get("index"),
        )
        if rec.n != d["n"]:
            raise ValueError("record n does not match its entries")
        return rec


def verify_record(rec: TupleRecord, budget: Budget = DEFAULT_BUDGET, tol: float = COMPARISON_MARGIN) -> bool:
    """Recompute conditions and quality from the stored entry strings."""
    ring = get_ring(rec.ring)
    elems = rec.elements()
    profile = classify(elems, rec.conditions.get("F_set", ()), ring)
    report = quality(elems, ring, budget)
    return (
        profile.to_dict() == rec.conditions
        and report.max_norm == rec.max_norm
        and report.rad_value == rec.rad
        and report.rad_complete == rec.rad_complete
        and abs(report.q - rec.q) <= tol
    )


class RecordStore:
    """Append-only JSONL file; a single writer serializes appends through a lock."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._lock = threading.Lock()

    def _drop_torn_tail(self) -> None:
        if not self.path.exists() or self.path.stat().st_size == 0:
            return
        with open(self.path, "rb+") as fh:
            fh.seek(-1, os.SEEK_END)
            if fh.read(1) == b"\n":
                return
            fh.seek(0)
            cut = fh.read().rfind(b"\n") + 1
            log.warning("dropping torn trailing record in %s", self.path)
            fh.truncate(cut)

    def append(self, rec: TupleRecord) -> None:
        line = (rec.to_json() + "\n").encode()
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._drop_torn_tail()
            with open(self.path, "ab") as fh:
                fh.write(line)
                fh.flush()
                os.fsync(fh.fileno())

    def extend(self, recs: Iterable[TupleRecord]) -> None:
        for r in recs:
            self.append(r)

    def load(self) -> list[TupleRecord]:
        if not self.path.exists():
            return []
        out = []
        with open(self.path, encoding="utf-8", errors="replace") as fh:
            raw = fh.read()
        lines = raw.split("\n")
        if lines and lines[-1] and not raw.endswith("\n"):
            log.warning("ignoring torn trailing line in %s", self.path)
            lines = lines[:-1]
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                out.append(TupleRecord.from_json(line))
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("skipping corrupt line %d in %s: %s", lineno, self.path, exc)
        return out


def export_csv(records: Iterable[TupleRecord], out: str | os.PathLike) -> int:
    rows = 0
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(
                [r.ring, r.n, r.family_id, r.params, repr(r.q), r.rad, r.rad_complete, r.max_norm, ";".join(r.entries)]
            )
            rows += 1
    return rows


def read_csv(path: str | os.PathLike) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
