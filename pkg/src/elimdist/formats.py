"""graph6, edge-list and JSON graph serialisation.

graph6 follows the published format bit for bit (optional ``>>graph6<<``
header, 1/4/8-byte size prefixes). graph6 has no colours, so a coloured graph
is written as its graph6 string followed by a JSON sidecar on the same line:
``Bg {"colours": {"0": 1}, "num_colours": 2}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph

HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in range(30, -1, -6))
    raise ValueError("graph too large for graph6")


def write_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _size_prefix(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (trailing whitespace ignored)."""
    s = text.rstrip("\r\n")
    start = 0
    if s.startswith(HEADER):
        start = len(HEADER)
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise GraphFormatError(f"non-printable or out-of-range byte {s[i]!r}", offset=i)
    data = s[start:]
    if not data:
        raise GraphFormatError("empty graph6 string", offset=start)

    def digits(at, count):
        if at + count > len(data):
            raise GraphFormatError("truncated length prefix", offset=start + len(data))
        val = 0
        for ch in data[at:at + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) > 1 and data[1] == "~":
        n, pos = digits(2, 6), 8
        if n < 258048:
            raise GraphFormatError("8-byte length prefix for a small graph", offset=start)
    else:
        n, pos = digits(1, 3), 4
        if n < 63:
            raise GraphFormatError("4-byte length prefix for a small graph", offset=start)
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != expect:
        raise GraphFormatError(
            f"payload has {len(payload)} bytes, expected {expect} for {n} vertices",
            offset=start + pos + min(len(payload), expect),
        )
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for ch in payload:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if (val >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def graph_to_line(g: Graph) -> str:
    """graph6 string, plus a JSON colour sidecar when the graph is coloured."""
    s = write_graph6(g)
    if g.colours is not None:
        cols = {str(v): c for v, c in enumerate(g.colours) if c is not None}
        s += " " + json.dumps({"colours": cols, "num_colours": g.num_colours}, sort_keys=True)
    return s


def graph_from_line(line: str) -> Graph:
    code, _, rest = line.strip().partition(" ")
    g = parse_graph6(code)
    rest = rest.strip()
    if rest:
        try:
            side = json.loads(rest)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad colour sidecar: {exc.msg}", offset=len(code) + 1 + exc.pos)
        g = Graph.from_edges(g.n, g.edges(), side.get("colours", {}), side.get("num_colours"))
    return g


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.colours is not None:
        out["colours"] = {str(v): c for v, c in enumerate(g.colours) if c is not None}
        out["num_colours"] = g.num_colours
    return out


def graph_from_json(obj: dict) -> Graph:
    try:
        return Graph.from_edges(
            int(obj["n"]),
            (tuple(e) for e in obj.get("edges", [])),
            obj.get("colours"),
            obj.get("num_colours"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}")


def parse_edge_list(text: str) -> list[Graph]:
    """Parse one or more ``n m`` blocks, each followed by ``m`` lines ``u v``.

    Blank lines and ``#`` comments are skipped.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    graphs = []
    k = 0
    while k < len(lines):
        lineno, body = lines[k]
        head = _ints(body, lineno)
        if len(head) != 2 or head[0] < 0 or head[1] < 0:
            raise GraphFormatError("expected header 'n m'", line=lineno)
        n, m = head
        if k + m >= len(lines):
            raise GraphFormatError(f"expected {m} edge lines after header", line=lineno)
        edges = []
        for lineno2, body2 in lines[k + 1:k + 1 + m]:
            e = _ints(body2, lineno2)
            if len(e) != 2:
                raise GraphFormatError("expected edge line 'u v'", line=lineno2)
            if not (0 <= e[0] < n and 0 <= e[1] < n) or e[0] == e[1]:
                raise GraphFormatError(f"invalid edge {e[0]} {e[1]} for n={n}", line=lineno2)
            edges.append((e[0], e[1]))
        graphs.append(Graph.from_edges(n, edges))
        k += m + 1
    return graphs


def _ints(body, lineno):
    try:
        return [int(tok) for tok in body.split()]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {body!r}", line=lineno)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip() if not raw.startswith(">>") else raw.strip()
        if not body:
            continue
        if body.startswith("{"):
            return "json"
        toks = body.split()
        if len(toks) == 2 and all(t.lstrip("-").isdigit() for t in toks):
            return "edgelist"
        return "graph6"
    return "graph6"


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Parse a whole file: graph6 lines, edge-list blocks or JSON lines."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        try:
            if fmt == "json":
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise GraphFormatError(exc.msg, offset=exc.pos)
                graphs.append(graph_from_json(obj))
            elif fmt == "graph6":
                graphs.append(graph_from_line(line))
            else:
                raise ValueError(f"unknown graph format {fmt!r}")
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc), line=lineno) from None
    return graphs


def read_graphs(path, fmt: str = "auto") -> list[Graph]:
    return parse_graphs(Path(path).read_text(), fmt)
