"""Matrix file formats (JSON and CSV) and the edge-list rendering.

JSON: {"n": 5, "matrix": [[0,1,...],...], "labels": ["a", ...]}; labels
optional, unique, exactly n of them.

CSV: n rows of n comma-separated entries from {-1,0,1}; an optional first
row carries labels (detected by non-numeric cells).

Edge list: one line per vertex pair, "a > b" meaning a defeats b and
"a = b" for a tie; vertices appear as labels when given, else 1-based
indices. Pairs are listed lexicographically.

Entries are strictly -1, 0 or 1; nothing else is coerced.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .core import GtGraph, OrdinalPcMatrix, validate_matrix
from .errors import FormatError

__all__ = [
    "load_matrix",
    "parse_matrix_json",
    "parse_matrix_csv",
    "matrix_to_json",
    "matrix_to_csv",
    "graph_to_edge_lines",
]


def _check_labels(labels, n: int) -> list[str] | None:
    if labels is None:
        return None
    labels = [str(x) for x in labels]
    if len(labels) != n:
        raise FormatError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != len(labels):
        dup = next(x for x in labels if labels.count(x) > 1)
        raise FormatError(f"duplicate label {dup!r}")
    return labels


def parse_matrix_json(text: str) -> tuple[OrdinalPcMatrix, list[str] | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise FormatError('expected an object with a "matrix" key')
    rows = doc["matrix"]
    matrix = validate_matrix(rows)
    if "n" in doc and doc["n"] != matrix.n:
        raise FormatError(f'"n" is {doc["n"]} but the matrix is {matrix.n}x{matrix.n}')
    return matrix, _check_labels(doc.get("labels"), matrix.n)


def _parse_cell(cell: str, where: str) -> int:
    cell = cell.strip()
    try:
        return int(cell)
    except ValueError:
        raise FormatError(f"non-integer entry {cell!r} at {where}") from None


def parse_matrix_csv(text: str) -> tuple[OrdinalPcMatrix, list[str] | None]:
    rows = [row for row in csv.reader(io.StringIO(text)) if row and any(c.strip() for c in row)]
    if not rows:
        raise FormatError("empty CSV")
    labels = None

    def is_numeric(row: list[str]) -> bool:
        for cell in row:
            try:
                int(cell.strip())
            except ValueError:
                return False
        return True

    if not is_numeric(rows[0]):
        labels = [c.strip() for c in rows[0]]
        rows = rows[1:]
        if not rows:
            raise FormatError("CSV has a label row but no matrix rows")
    data = [
        [_parse_cell(cell, f"row {i + 1}, column {j + 1}") for j, cell in enumerate(row)]
        for i, row in enumerate(rows)
    ]
    matrix = validate_matrix(data)
    return matrix, _check_labels(labels, matrix.n)


def load_matrix(path: str | Path) -> tuple[OrdinalPcMatrix, list[str] | None]:
    """Read a matrix file; JSON when the content starts with '{', else CSV."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_csv(text)


def matrix_to_json(matrix: OrdinalPcMatrix, labels: list[str] | None = None) -> str:
    doc: dict = {"n": matrix.n, "matrix": matrix.to_lists()}
    if labels is not None:
        doc["labels"] = _check_labels(labels, matrix.n)
    return json.dumps(doc, separators=(", ", ": "))


def matrix_to_csv(matrix: OrdinalPcMatrix, labels: list[str] | None = None) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if labels is not None:
        writer.writerow(_check_labels(labels, matrix.n))
    writer.writerows(matrix.to_lists())
    return out.getvalue()


def graph_to_edge_lines(graph: GtGraph, labels: list[str] | None = None) -> list[str]:
    """Render every pair as 'winner > loser' or 'a = b', lexicographic."""
    labels = _check_labels(labels, graph.n)

    def name(v: int) -> str:
        return labels[v] if labels else str(v + 1)

    rel = graph.relation_matrix
    lines = []
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            r = int(rel[i, j])
            if r == 1:
                lines.append(f"{name(i)} > {name(j)}")
            elif r == -1:
                lines.append(f"{name(j)} > {name(i)}")
            else:
                lines.append(f"{name(i)} = {name(j)}")
    return lines
