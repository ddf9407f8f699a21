"""Plain-text graph and divisor formats.

Graph format (canonical, diffable)::

    mgf 1
    <vertex count>
    u v m        # one line per unordered pair, u < v, m >= 1,
                 # sorted lexicographically

``#`` starts a comment anywhere; blank lines are ignored. Writers always
emit the canonical sorted form, so emit(parse(text)) == canonicalize(text)
bit-exactly.

Divisor format: a single line ``div n: c_0 c_1 ... c_{n-1}``.
"""

from __future__ import annotations

from pathlib import Path

from .divisors import Divisor
from .graphs import Multigraph

MAGIC = "mgf 1"


class FormatError(ValueError):
    """Malformed graph or divisor text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_graph(text: str) -> Multigraph:
    """Parse the graph format; loops, malformed lines, duplicate pairs and
    disconnected graphs are rejected with the offending line or component."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input")
    number, header = lines[0]
    if header != MAGIC:
        raise FormatError(f"expected header {MAGIC!r}, got {header!r}", number)
    if len(lines) < 2:
        raise FormatError("missing vertex count", number)
    number, count_line = lines[1]
    try:
        n = int(count_line)
    except ValueError:
        raise FormatError(f"vertex count is not an integer: {count_line!r}", number)
    if n < 1:
        raise FormatError(f"vertex count must be positive, got {n}", number)
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for number, line in lines[2:]:
        fields = line.split()
        if len(fields) != 3:
            raise FormatError(f"expected 'u v m', got {line!r}", number)
        try:
            u, v, m = (int(f) for f in fields)
        except ValueError:
            raise FormatError(f"non-integer field in {line!r}", number)
        if u == v:
            raise FormatError(f"loop edge at vertex {u}", number)
        if not (0 <= u < v < n):
            raise FormatError(
                f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}", number
            )
        if m < 1:
            raise FormatError(f"multiplicity must be at least 1, got {m}", number)
        if (u, v) in seen:
            raise FormatError(f"duplicate pair ({u}, {v})", number)
        seen.add((u, v))
        edges.append((u, v, m))
    return Multigraph.from_edges(n, edges)


def emit_graph(graph: Multigraph) -> str:
    lines = [MAGIC, str(graph.vertex_count)]
    lines.extend(f"{u} {v} {m}" for u, v, m in graph.edges())
    return "\n".join(lines) + "\n"


def parse_divisor(text: str, graph: Multigraph) -> Divisor:
    lines = list(_content_lines(text))
    if len(lines) != 1:
        raise FormatError(f"divisor text must be a single line, got {len(lines)}")
    number, line = lines[0]
    head, sep, tail = line.partition(":")
    fields = head.split()
    if not sep or len(fields) != 2 or fields[0] != "div":
        raise FormatError(f"expected 'div n: c_0 ... c_(n-1)', got {line!r}", number)
    try:
        n = int(fields[1])
        values = [int(f) for f in tail.split()]
    except ValueError:
        raise FormatError(f"non-integer field in {line!r}", number)
    if n != len(values):
        raise FormatError(
            f"declared {n} coefficients but found {len(values)}", number
        )
    if n != graph.vertex_count:
        raise FormatError(
            f"divisor on {n} vertices does not fit a graph on "
            f"{graph.vertex_count}",
            number,
        )
    return Divisor(graph, values)


def emit_divisor(divisor: Divisor) -> str:
    values = " ".join(str(c) for c in divisor.values)
    return f"div {len(divisor)}: {values}\n"


def load_graph(path: str | Path) -> Multigraph:
    return parse_graph(Path(path).read_text())


def save_graph(graph: Multigraph, path: str | Path) -> None:
    Path(path).write_text(emit_graph(graph))


def load_divisor(path: str | Path, graph: Multigraph) -> Divisor:
    return parse_divisor(Path(path).read_text(), graph)


def save_divisor(divisor: Divisor, path: str | Path) -> None:
    Path(path).write_text(emit_divisor(divisor))
