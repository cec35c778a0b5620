"""Text codecs: graph6 (short form), appendix-style adjacency dicts, edge lists, DOT."""
from __future__ import annotations

import re

from .errors import ParseError
from .graphcore import Graph

G6_MAX_ORDER = 62


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > G6_MAX_ORDER:
        raise ValueError(f"graph6 short form supports n <= {G6_MAX_ORDER}, got {n}")
    bits = [g.rows[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 line", offset=0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)!r} outside graph6 range at offset {i}", offset=i)
    n = ord(s[0]) - 63
    if n > G6_MAX_ORDER:
        raise ParseError("only the short graph6 form (n <= 62) is supported (offset 0)", offset=0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        off = min(len(s), expected)
        raise ParseError(f"expected {expected} bytes for n={n}, got {len(s)} (offset {off})",
                         offset=off)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        tail = ord(s[-1]) - 63
        if tail & ((1 << (6 - nbits % 6)) - 1):
            raise ParseError(f"nonzero padding bits at offset {len(s) - 1}", offset=len(s) - 1)
    return Graph(n, tuple(rows))


_TOKEN = re.compile(r"\s*(?:(\d+)|([{}\[\]:,]))")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}", offset=pos)
        yield m.start(m.lastindex), m.group(m.lastindex)
        pos = m.end()


def parse_adjacency_dict(text: str) -> Graph:
    """Parse ``{0: [1, 2], 1: [0], ...}``; every edge must be listed from both ends."""
    toks = list(_tokens(text))
    pos = 0

    def expect(sym):
        nonlocal pos
        if pos >= len(toks):
            raise ParseError(f"expected {sym!r} at end of input", offset=len(text))
        off, tok = toks[pos]
        if tok != sym:
            raise ParseError(f"expected {sym!r} at offset {off}, found {tok!r}", offset=off)
        pos += 1

    def number():
        nonlocal pos
        if pos >= len(toks) or not toks[pos][1].isdigit():
            off = toks[pos][0] if pos < len(toks) else len(text)
            raise ParseError(f"expected integer at offset {off}", offset=off)
        pos += 1
        return int(toks[pos - 1][1])

    adj: dict[int, list[int]] = {}
    expect("{")
    while pos < len(toks) and toks[pos][1] != "}":
        key_off = toks[pos][0]
        key = number()
        if key in adj:
            raise ParseError(f"vertex {key} listed twice", offset=key_off, vertex=key)
        expect(":")
        expect("[")
        nbrs = []
        while pos < len(toks) and toks[pos][1] != "]":
            nbrs.append(number())
            if pos < len(toks) and toks[pos][1] == ",":
                pos += 1
        expect("]")
        adj[key] = nbrs
        if pos < len(toks) and toks[pos][1] == ",":
            pos += 1
    expect("}")
    if pos != len(toks):
        raise ParseError(f"trailing input at offset {toks[pos][0]}", offset=toks[pos][0])
    return graph_from_adjacency(adj)


def graph_from_adjacency(adj: dict[int, list[int]]) -> Graph:
    n = len(adj)
    for v in range(n):
        if v not in adj:
            raise ParseError(f"vertex {v} missing", vertex=v)
    rows = [0] * n
    for v, nbrs in adj.items():
        for w in nbrs:
            if w == v:
                raise ParseError(f"self-loop at vertex {v}", vertex=v)
            if not 0 <= w < n:
                raise ParseError(f"vertex {v} lists unknown neighbour {w}", vertex=v)
            if rows[v] >> w & 1:
                raise ParseError(f"vertex {v} lists neighbour {w} twice", vertex=v)
            rows[v] |= 1 << w
    for v in range(n):
        for w in adj[v]:
            if not rows[w] >> v & 1:
                raise ParseError(f"edge {v}-{w} is not listed at vertex {w}", vertex=w)
    return Graph(n, tuple(rows))


def to_adjacency_dict(g: Graph) -> str:
    body = ", ".join(f"{v}: [{', '.join(map(str, g.neighbors(v)))}]" for v in range(g.order))
    return "{" + body + "}"


def parse_edge_list(text: str) -> Graph:
    """First non-comment line is the order, then one ``u v`` pair per line."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list", offset=0)
    try:
        n = int(lines[0][1])
    except ValueError:
        raise ParseError(f"line {lines[0][0]}: expected vertex count") from None
    edges = []
    for lineno, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        u, v = map(int, parts)
        if u == v or u >= n or v >= n:
            raise ParseError(f"line {lineno}: invalid edge {u} {v} for n={n}", vertex=u)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.order)] + [f"{u} {v}" for u, v in g.edges()])


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines)


def read_graph(text: str, fmt: str) -> Graph:
    if fmt == "g6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return from_graph6(first)
    if fmt == "dict":
        return parse_adjacency_dict(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown input format {fmt!r}")
