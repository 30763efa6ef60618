"""Simple undirected graphs: construction, graph6 codec, edge-list text I/O.

Vertices are labeled 1..n in every external format. Edges are stored
canonically as ordered pairs (i, j) with i < j, which is also the domain of
the signatures in graphlifts.lifts.
"""

from __future__ import annotations

from dataclasses import dataclass


class GraphError(ValueError):
    """Base class for graph construction and parsing errors."""


class OutOfRange(GraphError):
    """An edge endpoint lies outside 1..n."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class MalformedGraph6(GraphError):
    """Invalid graph6 text. Carries the byte offset of the violation."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class MalformedEdgeList(GraphError):
    """Invalid edge-list text. The message names the offending line."""


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n, edges as sorted pairs (i, j) with i < j."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges


def from_edge_list(n: int, pairs) -> Graph:
    """Build a Graph from vertex count and edge pairs.

    Pairs may appear in either orientation and may repeat; the result is
    deduplicated and canonically ordered. Raises OutOfRange or LoopEdge on
    invalid endpoints.
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for i, j in pairs:
        if i == j:
            raise LoopEdge(f"loop edge ({i},{j}) is not allowed")
        for v in (i, j):
            if not 1 <= v <= n:
                raise OutOfRange(f"edge ({i},{j}) endpoint {v} outside 1..{n}")
        seen.add((i, j) if i < j else (j, i))
    return Graph(n, tuple(sorted(seen)))


def adjacency_matrix(g: Graph) -> list[list[int]]:
    """Symmetric 0/1 adjacency matrix with zero diagonal, 0-indexed rows."""
    m = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        m[i - 1][j - 1] = 1
        m[j - 1][i - 1] = 1
    return m


def from_adjacency_matrix(rows) -> Graph:
    """Build a Graph from a square symmetric 0/1 matrix with zero diagonal."""
    n = len(rows)
    pairs = []
    for i in range(n):
        if len(rows[i]) != n:
            raise GraphError(f"adjacency matrix row {i + 1} has length {len(rows[i])}, expected {n}")
        for j in range(n):
            v = rows[i][j]
            if v not in (0, 1):
                raise GraphError(f"adjacency entry ({i + 1},{j + 1}) is {v}, expected 0 or 1")
            if i == j and v:
                raise GraphError(f"adjacency diagonal entry ({i + 1},{i + 1}) is nonzero")
            if j > i and rows[j][i] != v:
                raise GraphError(f"adjacency matrix not symmetric at ({i + 1},{j + 1})")
            if j > i and v:
                pairs.append((i + 1, j + 1))
    return from_edge_list(n, pairs)


def neighbor_lists(g: Graph) -> list[list[int]]:
    """0-indexed adjacency lists; each list is sorted."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.edges:
        adj[i - 1].append(j - 1)
        adj[j - 1].append(i - 1)
    for row in adj:
        row.sort()
    return adj


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees sorted in descending order. Sums to 2 * |edges|."""
    deg = [0] * g.n
    for i, j in g.edges:
        deg[i - 1] += 1
        deg[j - 1] += 1
    return sorted(deg, reverse=True)


_G6_HEADER = ">>graph6<<"


def _g6_sextets(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        col = [0] * j
        bits.append(col)
    for i, j in g.edges:
        bits[j - 2][i - 1] = 1
    flat = [b for col in bits for b in col]
    while len(flat) % 6:
        flat.append(0)
    out = []
    for k in range(0, len(flat), 6):
        val = 0
        for b in flat[k : k + 6]:
            val = (val << 1) | b
        out.append(val)
    return out


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of g.

    Uses the single-byte size header for n <= 62 and the '~' three-byte
    header for larger n (supported up to 258047).
    """
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise GraphError(f"graph6 encoding supports at most 258047 vertices, got {n}")
    return head + "".join(chr(v + 63) for v in _g6_sextets(g))


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string; raises MalformedGraph6 with a byte offset.

    The optional leading '>>graph6<<' marker used by .g6 files is accepted.
    """
    base = 0
    if text.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        text = text[base:]
    if not text:
        raise MalformedGraph6("empty graph6 string", base)
    for k, ch in enumerate(text):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise MalformedGraph6(f"byte {o!r} outside graph6 range 63..126", base + k)
    if text[0] != "~":
        n = ord(text[0]) - 63
        body_at = 1
    else:
        if len(text) >= 2 and text[1] == "~":
            raise MalformedGraph6("graph6 sizes above 258047 are not supported", base + 1)
        if len(text) < 4:
            raise MalformedGraph6("truncated multi-byte size header", base + len(text))
        n = ((ord(text[1]) - 63) << 12) | ((ord(text[2]) - 63) << 6) | (ord(text[3]) - 63)
        body_at = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[body_at:]
    if len(body) < need:
        raise MalformedGraph6(f"body has {len(body)} bytes, expected {need}", base + len(text))
    if len(body) > need:
        raise MalformedGraph6(f"trailing data after {need} body bytes", base + body_at + need)
    pairs = []
    idx = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            byte = ord(body[idx // 6]) - 63
            if (byte >> (5 - idx % 6)) & 1:
                pairs.append((i, j))
            idx += 1
    # The final sextet must be zero-padded.
    while idx < 6 * need:
        byte = ord(body[idx // 6]) - 63
        if (byte >> (5 - idx % 6)) & 1:
            raise MalformedGraph6("nonzero padding bit", base + body_at + idx // 6)
        idx += 1
    return from_edge_list(n, pairs)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: header line 'n m', then m lines 'i j', 1-based.

    '#' starts a comment; blank lines are ignored.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise MalformedEdgeList(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
        if header is None:
            if len(nums) != 2:
                raise MalformedEdgeList(f"line {lineno}: header must be 'n m', got {raw.strip()!r}")
            header = (nums[0], nums[1])
            continue
        if len(nums) != 2:
            raise MalformedEdgeList(f"line {lineno}: edge line must be 'i j', got {raw.strip()!r}")
        pairs.append((nums[0], nums[1]))
    if header is None:
        raise MalformedEdgeList("no header line 'n m' found")
    n, m = header
    if len(pairs) != m:
        raise MalformedEdgeList(f"header declares {m} edges but {len(pairs)} edge lines follow")
    return from_edge_list(n, pairs)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"
