"""Text serialisations: graph6, a plain edge-list format, and DOT."""

from __future__ import annotations

from collections.abc import Sequence

from .graph import MAX_VERTICES, Edge, Graph, GraphError


class ParseError(ValueError):
    """Malformed graph text. ``offset`` is the 0-based byte position at fault."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _size_header(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 size {n} needs an 8-byte header, which is not supported")


def pair_index(i: int, j: int) -> int:
    """Position of the pair ``i < j`` in graph6 (column-major upper-triangle) order."""
    return j * (j - 1) // 2 + i


def to_bitvector(g: Graph) -> int:
    """Adjacency as an integer whose bit ``pair_index(i, j)`` marks edge ``ij``."""
    x = 0
    for u, v in g.edges():
        x |= 1 << pair_index(u, v)
    return x


def from_bitvector(n: int, x: int) -> Graph:
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if x >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(adj, check=False)


def to_graph6(g: Graph) -> str:
    n = g.n
    nbits = n * (n - 1) // 2
    x = to_bitvector(g)
    out = [_size_header(n)]
    for start in range(0, nbits, 6):
        chunk = 0
        for k in range(6):
            chunk <<= 1
            if start + k < nbits and x >> (start + k) & 1:
                chunk |= 1
        out.append(chr(chunk + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (a single trailing newline is tolerated)."""
    data = text[:-1] if text.endswith("\n") else text
    if data.startswith(">>graph6<<"):
        raise ParseError("graph6 files with a >>graph6<< header are not supported", 0)
    if not data:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", pos)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) < 4:
            raise ParseError("truncated size header", len(data))
        if data[1] == "~":
            raise ParseError("8-byte size headers are not supported", 1)
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n < 63:
            raise ParseError("4-byte size header used for a graph with fewer than 63 vertices", 1)
        pos = 4
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the cap of {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"expected {nbytes} data bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 data", pos + nbytes)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise ParseError("non-zero padding bits", pos + b)
                continue
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(adj, check=False)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored; repeated edges collapse.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("edge list is empty")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].isdigit():
        raise ParseError(f"line {lineno}: expected a single vertex count, got {' '.join(head)!r}")
    n = int(head[0])
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if u >= n or v >= n:
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def to_dot(g: Graph, labels: Sequence[Edge] | None = None, name: str = "G") -> str:
    """DOT text for ``g``; with ``labels`` each vertex is annotated ``u-v``."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{labels[v].label()}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
