"""graph6 and edge-list readers/writers, and DOT export."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Sequence

from .graph import Graph, build_graph

HEADER = ">>graph6<<"


class ParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


def _pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    bitlist = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(n)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = []
    for k in range(0, len(bitlist), 6):
        v = 0
        for b in bitlist[k : k + 6]:
            v = v << 1 | b
        body.append(v + 63)
    return bytes(head + body).decode("ascii")


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise ParseError("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside the printable graph6 range", i)
    data = [ord(ch) - 63 for ch in s]
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ParseError("unsupported or truncated length field", 0)
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    else:
        n = data[0]
        pos = 1
    if n > 64:
        raise ParseError(f"graph has {n} vertices; at most 64 supported", 0)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(data) - pos < need:
        raise ParseError(f"truncated: expected {need} data bytes, found {len(data) - pos}", len(data))
    if len(data) - pos > need:
        raise ParseError("trailing bytes after graph data", pos + need)
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        byte = data[pos + k // 6]
        if byte >> (5 - k % 6) & 1:
            edges.append((i, j))
    pad = need * 6 - nbits
    if pad and data[-1] & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", len(data) - 1)
    return build_graph(n, edges)


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """'u v' per line ('#' comments); a lone label declares an isolated vertex.

    All-integer labels keep their values (n = max + 1); otherwise labels are
    numbered by first appearance. Returns the graph and the label of each vertex.
    """
    tokens_per_line = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) > 2:
            raise ParseError("expected 'u v' or a single vertex label", line=lineno)
        tokens_per_line.append((lineno, body))
    labels: list[str] = []
    for _, body in tokens_per_line:
        for t in body:
            if t not in labels:
                labels.append(t)
    if labels and all(t.isdigit() for t in labels):
        n = max(int(t) for t in labels) + 1
        index = {t: int(t) for t in labels}
        names = [str(i) for i in range(n)]
    else:
        n = len(labels)
        index = {t: i for i, t in enumerate(labels)}
        names = labels
    edges = []
    for lineno, body in tokens_per_line:
        if len(body) == 2:
            u, v = index[body[0]], index[body[1]]
            if u == v:
                raise ParseError("self-loop", line=lineno)
            edges.append((u, v))
    return build_graph(n, edges), names


def is_graph6_text(text: str) -> bool:
    for raw in text.splitlines():
        s = raw.strip()
        if not s:
            continue
        if s.startswith(HEADER):
            return True
        return s[0] != "#" and not any(c.isspace() for c in s) and all(63 <= ord(c) <= 126 for c in s)
    return False


def read_graph6_lines(text: str) -> Iterator[tuple[int, Graph | ParseError]]:
    """(line number, graph or the parse error) for every non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        try:
            yield lineno, parse_graph6(raw)
        except (ParseError, ValueError) as e:
            yield lineno, ParseError(str(e), getattr(e, "offset", None), lineno)


def read_graph_arg(arg: str) -> tuple[Graph, list[str] | None]:
    """A graph from a file (graph6 first line, or an edge list) or an inline graph6 string."""
    p = Path(arg)
    if p.exists():
        text = p.read_text()
        if is_graph6_text(text):
            for _, g in read_graph6_lines(text):
                if isinstance(g, ParseError):
                    raise g
                return g, None
            raise ParseError("no graph in file")
        return parse_edge_list(text)
    return parse_graph6(arg), None


def graph_to_dot(g: Graph, labels: Sequence[str] | None = None, highlight=()) -> str:
    name = (lambda v: labels[v]) if labels else str
    hot = {frozenset(e) for e in highlight}
    lines = ["graph G {"]
    lines += [f'  {v} [label="{name(v)}"];' for v in range(g.n)]
    for u, v in g.edges():
        style = " [color=red, penwidth=2]" if frozenset((u, v)) in hot else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_to_dot(o, witness=None, labels: Sequence[str] | None = None) -> str:
    """Directed DOT; a shortcut witness's path and shortcutting edge are drawn red."""
    name = (lambda v: labels[v]) if labels else str
    hot = set()
    if witness is not None:
        hot = set(zip(witness.path, witness.path[1:])) | {tuple(witness.shortcutting_edge)}
    lines = ["digraph G {"]
    lines += [f'  {v} [label="{name(v)}"];' for v in range(o.graph.n)]
    for u, v in o.arcs():
        style = " [color=red, penwidth=2]" if (u, v) in hot else ""
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
