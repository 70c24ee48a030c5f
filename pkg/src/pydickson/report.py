"""
CSV, JSON and plain-text renderings of the reports, and the JSON reader.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel

from .models import SearchReport, SumReport, VerifyReport
from .util import constants as C
from .util.enums import OutputFormat

Report = Union[SearchReport, SumReport, VerifyReport]


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def to_csv(rows: Sequence[Dict[str, Any]], columns: List[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in columns})
    return buf.getvalue()


def to_json(report: BaseModel) -> str:
    data = report.model_dump(mode="json", by_alias=True)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _rows(report: Report) -> List[Dict[str, Any]]:
    if isinstance(report, VerifyReport):
        return [s.model_dump(mode="json") for s in report.suites]
    return [r.model_dump(mode="json", by_alias=True) for r in report.records]


def _search_text(report: SearchReport) -> str:
    lines = [" ".join(C.CSV_COLUMNS)]
    for row in _rows(report):
        lines.append(" ".join(_cell(row[k]) for k in C.CSV_COLUMNS))
    s = report.summary
    lines.append(
        f"# total={s.total} filter_pass={s.filter_pass} desirable={s.desirable} "
        f"pruned={s.pruned} lost={s.lost}"
    )
    lines.append(
        "# desirable: "
        + " ".join(f"{d.n}(gcd={d.gcd})" for d in s.desirable_pairs)
    )
    return "\n".join(lines) + "\n"


def _sum_text(report: SumReport) -> str:
    lines = []
    for r in report.records:
        row = r.model_dump(mode="json", by_alias=True)
        lines.append(" ".join(f"{k}={_cell(row[k])}" for k in C.SUM_COLUMNS))
    return "\n".join(lines) + "\n"


def _verify_text(report: VerifyReport) -> str:
    lines = []
    for s in report.suites:
        status = "PASS" if s.passed else "FAIL"
        lines.append(f"{status} {s.suite} q={s.q} cases={s.cases} failures={s.failures}")
    cx = report.first_counterexample
    if cx is not None:
        lines.append(
            f"counterexample: check={cx.check} q={cx.q} n={_cell(cx.n)} lhs={cx.lhs} rhs={cx.rhs}"
        )
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.json:
        return to_json(report)
    if fmt == OutputFormat.csv:
        if isinstance(report, SearchReport):
            columns = C.CSV_COLUMNS
        elif isinstance(report, SumReport):
            columns = C.SUM_COLUMNS
        else:
            columns = C.VERIFY_COLUMNS
        return to_csv(_rows(report), columns)
    if isinstance(report, SearchReport):
        return _search_text(report)
    if isinstance(report, SumReport):
        return _sum_text(report)
    return _verify_text(report)


def write_report(text: str, out: Optional[Path] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")


def read_report(source: Union[Path, str]) -> Report:
    """
    Load a JSON report written by `to_json`.

    `source` is a path or the JSON text itself; the report type is taken
    from `meta.command`.
    """
    if isinstance(source, Path):
        source = source.read_text(encoding="utf-8")
    data = json.loads(source)
    command = data.get("meta", {}).get("command")
    if command == "search":
        return SearchReport.model_validate(data)
    if command == "sum":
        return SumReport.model_validate(data)
    if command == "verify":
        return VerifyReport.model_validate(data)
    raise ValueError(f"Unknown report command: {command!r}")
