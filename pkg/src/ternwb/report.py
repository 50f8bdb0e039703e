"""Check records and their JSON / markdown renderings."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional

__all__ = ["PASS", "FAIL", "DOCUMENTED", "CheckRecord", "record", "sort_records",
           "to_json", "summary_markdown", "exit_code"]

PASS = "pass"
FAIL = "fail"
DOCUMENTED = "discrepancy_documented"
STATUSES = (PASS, FAIL, DOCUMENTED)


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    check_id: str
    paper_ref: str
    status: str
    lhs: str
    rhs: str
    residual: Optional[float] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


def record(suite: str, check_id: str, ref: str, ok: bool, lhs, rhs, residual=None,
           documented: bool = False) -> CheckRecord:
    """Build a record; a failing check flagged ``documented`` becomes a catalogued discrepancy."""
    if ok:
        status = PASS
    elif documented:
        status = DOCUMENTED
    else:
        status = FAIL
    if residual is not None:
        residual = float(residual)
        if not math.isfinite(residual):
            residual = None
    return CheckRecord(suite, check_id, ref, status, str(lhs), str(rhs), residual)


def sort_records(records: Iterable[CheckRecord]) -> List[CheckRecord]:
    recs = sorted(records, key=lambda r: r.check_id)
    seen = set()
    for r in recs:
        if r.check_id in seen:
            raise ValueError(f"duplicate check_id {r.check_id}")
        seen.add(r.check_id)
    return recs


def to_json(records: Iterable[CheckRecord]) -> str:
    payload = [asdict(r) for r in sort_records(records)]
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def exit_code(records: Iterable[CheckRecord]) -> int:
    return 1 if any(r.status == FAIL for r in records) else 0


def summary_markdown(records: Iterable[CheckRecord]) -> str:
    recs = sort_records(records)
    suites = sorted({r.suite for r in recs})
    lines = ["# Verification summary", "", "| suite | pass | fail | documented |", "|---|---|---|---|"]
    for s in suites:
        sub = [r for r in recs if r.suite == s]
        counts = [sum(r.status == st for r in sub) for st in STATUSES]
        lines.append(f"| {s} | {counts[0]} | {counts[1]} | {counts[2]} |")
    lines += ["", f"Total checks: {len(recs)}", ""]
    flagged = [r for r in recs if r.status != PASS]
    if flagged:
        lines += ["## Non-passing checks", ""]
        for r in flagged:
            lines.append(f"- `{r.check_id}` ({r.status}, ref `{r.paper_ref}`): got `{r.lhs}`, expected `{r.rhs}`")
        lines.append("")
    lines += ["## All checks", "", "| check | ref | status |", "|---|---|---|"]
    for r in recs:
        lines.append(f"| `{r.check_id}` | `{r.paper_ref}` | {r.status} |")
    return "\n".join(lines) + "\n"
