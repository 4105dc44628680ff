"""CSV / JSON report emission with a stable, rerun-identical format.

Exact rationals are serialized as "num/den" and never in scientific
notation; column order is fixed by first-record key order.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def emit_report(records: list[dict], out_dir: str | Path, stem: str,
                columns: list[str] | None = None) -> tuple[Path, Path]:
    """Write <stem>.csv and <stem>.json under out_dir; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{stem}.csv"
    json_path = out_dir / f"{stem}.json"

    cols = columns
    if cols is None:
        cols = list(records[0].keys()) if records else []
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: _jsonable(rec.get(k, "")) for k in cols})
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump([_jsonable(r) for r in records], fh, indent=1, sort_keys=True)
        fh.write("\n")
    return csv_path, json_path
