"""Small undirected graphs as adjacency bitmasks, plus the graph6 codec.

Vertices are integers 0..n-1 and each vertex's neighborhood is one Python
int used as a bitmask, which keeps the exhaustive scans cheap.  Everything
here is deliberately sized for n <= 62 (the single-byte graph6 range); the
enumeration and canonicalization helpers are only meant for n <= 8.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 62
ENUM_CAP = 8


def pair_order(n: int) -> list[tuple[int, int]]:
    """Fixed ordering of vertex pairs: (0,1),(0,2),(1,2),(0,3),...

    This is the column-major order graph6 uses for its bit vector.  Edge
    masks, labeled enumeration and canonical forms all use the same order
    so the representations line up.
    """
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph:
    """Immutable undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_bitmasks(cls, adj: Iterable[int]) -> "Graph":
        """Build from per-vertex neighbor masks, validating symmetry."""
        masks = tuple(adj)
        n = len(masks)
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise ValueError(f"mask of vertex {v} mentions vertices >= {n}")
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, m in enumerate(masks):
            rest = m
            while rest:
                b = rest & -rest
                rest ^= b
                if not masks[b.bit_length() - 1] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v},{b.bit_length() - 1})")
        return cls._make(n, masks)

    @classmethod
    def _make(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # fast path for internal callers that guarantee a valid adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edge set is the given bitmask over pair_order(n)."""
        adj = [0] * n
        pairs = pair_order(n)
        if mask < 0 or mask >> len(pairs):
            raise ValueError("edge mask out of range for %d vertices" % n)
        m = mask
        while m:
            b = m & -m
            m ^= b
            i, j = pairs[b.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls._make(n, tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges())})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return _mask_to_set(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            while rest:
                b = rest & -rest
                rest ^= b
                yield (v, v + 1 + b.bit_length() - 1)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def mask(self) -> int:
        """Edge set encoded as a bitmask over pair_order(n)."""
        out = 0
        for k, (i, j) in enumerate(pair_order(self.n)):
            if self.adj[i] >> j & 1:
                out |= 1 << k
        return out


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return frozenset(out)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._make(g.n, tuple((full & ~m) & ~(1 << v) for v, m in enumerate(g.adj)))


def induced(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on `keep`, relabeled densely in ascending order."""
    kept = sorted(set(keep))
    if kept and not (0 <= kept[0] and kept[-1] < g.n):
        raise ValueError("kept vertices outside 0..%d" % (g.n - 1))
    pos = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    for i, v in enumerate(kept):
        rest = g.adj[v]
        while rest:
            b = rest & -rest
            rest ^= b
            w = b.bit_length() - 1
            j = pos.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph._make(len(kept), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return induced(g, (u for u in range(g.n) if u != v))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted non-increasing."""
    return tuple(sorted((m.bit_count() for m in g.adj), reverse=True))


def enumerate_labeled(n: int, cap: int = ENUM_CAP) -> Iterator[Graph]:
    """All labeled graphs on n vertices, in edge-mask counting order."""
    if not 0 <= n <= cap:
        raise ValueError(f"enumeration limited to 0..{cap} vertices, got {n}")
    pairs = pair_order(n)
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            b = m & -m
            m ^= b
            i, j = pairs[b.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        yield Graph._make(n, tuple(adj))


def _perm_edge_tables(n: int) -> list[list[int]]:
    """For every permutation of 0..n-1, where each edge-mask bit lands."""
    from itertools import permutations

    pairs = pair_order(n)
    index = {p: k for k, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            table.append(index[(a, b) if a < b else (b, a)])
        tables.append(table)
    return tables


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: minimal edge mask over relabelings.

    Brute force over all n! relabelings, so capped at n <= 8.  Two graphs
    get equal canonical forms exactly when they are isomorphic.
    """
    if g.n > ENUM_CAP:
        raise ValueError(f"canonical_form limited to n <= {ENUM_CAP}, got {g.n}")
    mask = g.mask()
    best = mask
    if mask:
        for table in _perm_edge_tables(g.n):
            out = 0
            m = mask
            while m:
                b = m & -m
                m ^= b
                out |= 1 << table[b.bit_length() - 1]
            if out < best:
                best = out
    width = (len(pair_order(g.n)) + 7) // 8
    return bytes([g.n]) + best.to_bytes(width, "big")


def isomorphism_classes(n: int) -> Iterator[int]:
    """Edge masks of isomorphism-class representatives on n vertices.

    Yields, in increasing order, the least labeled edge mask of every
    isomorphism class.  Works by marking the whole relabeling orbit of
    each new representative in a seen-table, so it never canonicalizes
    individual graphs; n = 7 takes seconds, n = 8 minutes.
    """
    if not 0 <= n <= ENUM_CAP:
        raise ValueError(f"classes limited to 0..{ENUM_CAP} vertices, got {n}")
    k = len(pair_order(n))
    tables = _perm_edge_tables(n)
    seen = bytearray(1 << k)
    for mask in range(1 << k):
        if seen[mask]:
            continue
        yield mask
        for table in tables:
            out = 0
            m = mask
            while m:
                b = m & -m
                m ^= b
                out |= 1 << table[b.bit_length() - 1]
            seen[out] = 1


def isomorphism_class_count(n: int) -> int:
    return sum(1 for _ in isomorphism_classes(n))


class Graph6Error(ValueError):
    """Malformed graph6 record; `offset` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 record (no header, no trailing newline)."""
    if g.n > MAX_VERTICES:
        raise ValueError(f"graph6 single-byte encoding requires n <= {MAX_VERTICES}")
    bits = []
    for i, j in pair_order(g.n):
        bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = group << 1 | b
        out.append(chr(group + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 record; tolerates the optional >>graph6<< header."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty record", base)
    c0 = ord(s[0])
    if c0 == 126:
        raise Graph6Error("multi-byte vertex count (n > 62) not supported", base)
    if not 63 <= c0 <= 125:
        raise Graph6Error(f"malformed length byte {s[0]!r}", base)
    n = c0 - 63
    npairs = n * (n - 1) // 2
    ngroups = (npairs + 5) // 6
    payload = s[1 : 1 + ngroups]
    if len(payload) < ngroups:
        raise Graph6Error(
            f"record truncated: expected {ngroups} payload bytes, got {len(payload)}",
            base + len(s),
        )
    if len(s) > 1 + ngroups:
        raise Graph6Error("trailing garbage after record", base + 1 + ngroups)
    adj = [0] * n
    pairs = pair_order(n)
    k = 0
    for gi, ch in enumerate(payload):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"non-printable payload byte {ch!r}", base + 1 + gi)
        group = c - 63
        for bit in range(5, -1, -1):
            if k < npairs:
                if group >> bit & 1:
                    i, j = pairs[k]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k += 1
            elif group >> bit & 1:
                raise Graph6Error("nonzero padding bits", base + 1 + gi)
    return Graph._make(n, tuple(adj))
