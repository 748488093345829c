"""CSV and JSON-lines encodings of sweep records.

Floats are written with 12 significant digits so that a fixed sweep always
produces the same bytes.
"""
import csv
import io
import json

from .sweep import SweepRecord

FIELDS = ("p", "q", "n", "capacity_numeric", "capacity_oracle", "abs_err")


def format_float(x: float) -> str:
    return format(float(x), ".12g")


def _cell(name, value):
    if value is None:
        return ""
    if name == "n":
        return str(int(value))
    return format_float(value)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in records:
        row = r.as_dict()
        writer.writerow([_cell(name, row[name]) for name in FIELDS])
    return buf.getvalue()


def records_to_jsonl(records) -> str:
    lines = []
    for r in records:
        obj = {}
        for name, value in r.as_dict().items():
            if value is None:
                continue
            obj[name] = int(value) if name == "n" else float(format_float(value))
        lines.append(json.dumps(obj))
    return "".join(line + "\n" for line in lines)


def records_from_csv(text: str) -> list[SweepRecord]:
    rows = csv.DictReader(io.StringIO(text))
    if tuple(rows.fieldnames or ()) != FIELDS:
        raise ValueError(f"unexpected CSV header {rows.fieldnames}")
    out = []
    for row in rows:
        def opt(name):
            return float(row[name]) if row[name] != "" else None

        out.append(SweepRecord(
            float(row["p"]), opt("q"), int(row["n"]), float(row["capacity_numeric"]),
            opt("capacity_oracle"), opt("abs_err"),
        ))
    return out


def records_from_jsonl(text: str) -> list[SweepRecord]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        out.append(SweepRecord(
            obj["p"], obj.get("q"), obj["n"], obj["capacity_numeric"],
            obj.get("capacity_oracle"), obj.get("abs_err"),
        ))
    return out
