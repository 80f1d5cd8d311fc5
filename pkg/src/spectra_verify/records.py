"""Per-graph record serialization: CSV and JSON-lines sinks.

Floats are printed with 12 significant digits everywhere so output files
diff cleanly across runs and worker counts.
"""

from __future__ import annotations

import json
import math
import os
from typing import IO, Optional, Union

CSV_HEADER = "n,graph6,m,bipartite,connected,regular_k,e_d,e_x,gap,verdict"


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    return f"{x:.12g}"


def json_number(x: float) -> Optional[float]:
    """Round-tripped 12-significant-digit value; NaN maps to null."""
    if math.isnan(x):
        return None
    return float(f"{x:.12g}")


def record_csv_row(rec) -> str:
    return ",".join(
        (
            str(rec.n),
            rec.graph6,
            str(rec.m),
            "true" if rec.bipartite else "false",
            "true" if rec.connected else "false",
            "" if rec.regular_k is None else str(rec.regular_k),
            fmt_float(rec.e_d),
            fmt_float(rec.e_x),
            fmt_float(rec.gap),
            rec.verdict.value,
        )
    )


def record_json_obj(rec) -> dict:
    return {
        "n": rec.n,
        "graph6": rec.graph6,
        "m": rec.m,
        "bipartite": rec.bipartite,
        "connected": rec.connected,
        "regular_k": rec.regular_k,
        "e_d": json_number(rec.e_d),
        "e_x": json_number(rec.e_x),
        "gap": json_number(rec.gap),
        "verdict": rec.verdict.value,
    }


class RecordWriter:
    """Streams records to a file, one per line, with a trailing newline."""

    def __init__(self, target: Union[str, os.PathLike, IO[str]], fmt: str = "csv"):
        if fmt not in ("csv", "jsonl"):
            raise ValueError(f"unknown record format {fmt!r}")
        self.fmt = fmt
        if hasattr(target, "write"):
            self._handle: IO[str] = target
            self._owns = False
        else:
            self._handle = open(target, "w", encoding="ascii")
            self._owns = True
        self.count = 0
        if fmt == "csv":
            self._handle.write(CSV_HEADER + "\n")

    def write(self, rec) -> None:
        if self.fmt == "csv":
            self._handle.write(record_csv_row(rec))
        else:
            self._handle.write(json.dumps(record_json_obj(rec)))
        self._handle.write("\n")
        self.count += 1

    def close(self) -> None:
        if self._owns:
            self._handle.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False
