"""Readers and writers for the matrix, graph and hypergraph file formats."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Union

from .graphs import Graph, GraphError, Hypergraph3
from .linalg import IntMatrix, MatrixError

PathLike = Union[str, Path]


class ParseError(ValueError):
    pass


def _content_lines(lines: Iterable[str]):
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def _ints(num: int, line: str) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise ParseError(f"line {num}: expected integers, got {line!r}") from None


def parse_matrix(text: str) -> IntMatrix:
    """Text format (``rows cols`` header) or JSON ``{"rows", "cols", "entries"}``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            rows, cols, entries = data["rows"], data["cols"], data["entries"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON matrix: {exc}") from None
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ParseError("JSON matrix entries do not match rows/cols")
        if any(not isinstance(x, int) or isinstance(x, bool) for r in entries for x in r):
            raise ParseError("JSON matrix entries must be integers")
        return _build(entries)
    body = list(_content_lines(text.splitlines()))
    if not body:
        raise ParseError("empty matrix file")
    header = _ints(*body[0])
    if len(header) != 2 or min(header) < 1:
        raise ParseError(f"line {body[0][0]}: header must be 'rows cols'")
    rows, cols = header
    if len(body) - 1 != rows:
        raise ParseError(f"expected {rows} rows, found {len(body) - 1}")
    entries = []
    for num, line in body[1:]:
        row = _ints(num, line)
        if len(row) != cols:
            raise ParseError(f"line {num}: expected {cols} entries, found {len(row)}")
        entries.append(row)
    return _build(entries)


def _build(entries) -> IntMatrix:
    try:
        return IntMatrix.from_rows(entries)
    except MatrixError as exc:
        raise ParseError(str(exc)) from None


def matrix_to_json(m: IntMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": m.to_lists()}


def parse_graph(text: str) -> Graph:
    """``n`` on the first line, then ``u v [label]`` per edge, 1-based."""
    body = list(_content_lines(text.splitlines()))
    if not body:
        raise ParseError("empty graph file")
    head = _ints(*body[0])
    if len(head) != 1:
        raise ParseError(f"line {body[0][0]}: first line must be the vertex count")
    edges, labels = [], []
    for num, line in body[1:]:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"line {num}: expected 'u v [label]'")
        u, v = _ints(num, " ".join(parts[:2]))
        edges.append((u - 1, v - 1))
        if len(parts) == 3:
            labels.append(parts[2])
    if labels and len(labels) != len(edges):
        raise ParseError("either every edge has a label or none does")
    try:
        return Graph(head[0], tuple(edges), tuple(labels))
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [str(g.n)]
    for k, (u, v) in enumerate(g.edges):
        tail = f" {g.labels[k]}" if g.labels else ""
        lines.append(f"{u + 1} {v + 1}{tail}")
    return "\n".join(lines)


def parse_hypergraph(text: str) -> Hypergraph3:
    body = list(_content_lines(text.splitlines()))
    if not body:
        raise ParseError("empty hypergraph file")
    head = _ints(*body[0])
    if len(head) != 1:
        raise ParseError(f"line {body[0][0]}: first line must be the vertex count")
    edges = []
    for num, line in body[1:]:
        parts = line.split()
        if len(parts) not in (3, 4):
            raise ParseError(f"line {num}: expected 'u v w [label]'")
        edges.append(tuple(x - 1 for x in _ints(num, " ".join(parts[:3]))))
    try:
        return Hypergraph3(head[0], tuple(edges))
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_hypergraph(h: Hypergraph3) -> str:
    return "\n".join([str(h.n)] + [" ".join(str(v + 1) for v in e) for e in h.edges])


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
