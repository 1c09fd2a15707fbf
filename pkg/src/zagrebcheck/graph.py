"""Simple undirected graphs on neighbor bitsets, graph6 codec, enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels

MAX_VERTICES = 64
MAX_GRAPH6_VERTICES = 62
MAX_ENUMERATION_VERTICES = 7
GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph6Error(GraphError):
    """Malformed graph6 record."""


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    ``adj[v]`` is an int bitset of the neighbors of ``v``.  Instances carry a
    private cache so that invariants computed once (connectivity, independence
    number, ...) are shared between the checks evaluated on the same graph.
    """

    __slots__ = ("n", "adj", "_cache")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(int(a) for a in adj)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency sets, got {len(adj)}")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full or nb < 0:
                raise GraphError(f"vertex {v} has a neighbor index >= {n}")
            if (nb >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            rest = nb
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._init(n, adj)

    def _init(self, n: int, adj: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_cache", {})

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # caller guarantees symmetry, no loops, indices < n
        g = object.__new__(cls)
        g._init(n, adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        if self.n <= MAX_GRAPH6_VERTICES:
            return f"Graph({encode_graph6(self)!r})"
        return f"Graph(n={self.n}, e={self.e})"

    @property
    def e(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                yield v, v + 1 + u


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    e: int


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; repeated pairs collapse to one edge."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def degree_profile(g: Graph) -> DegreeProfile:
    cached = g._cache.get("profile")
    if cached is None:
        degs = g.degrees()
        cached = DegreeProfile(degs, min(degs), max(degs), sum(degs) // 2)
        g._cache["profile"] = cached
    return cached


# ---------------------------------------------------------------- graph6

def decode_graph6(line: str | bytes) -> Graph:
    """Parse one graph6 record (optionally with the ``>>graph6<<`` header)."""
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 record") from exc
    line = line.rstrip("\r\n")
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 record")
    codes = [ord(c) for c in line]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {line[pos]!r} at offset {pos} outside 63..126")
    n = codes[0] - 63
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error("multi-byte size field (n > 62) is not supported")
    if n == 0:
        raise Graph6Error("graphs with zero vertices are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"record truncated: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} data bytes")
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    # value holds the bits MSB-first; reverse into mask order (bit 0 = first pair)
    mask = int(format(value, f"0{nbits}b")[::-1], 2) if nbits else 0
    return Graph._trusted(n, kernels.adj_from_mask(n, mask))


def edge_mask(g: Graph) -> int:
    """Edge set as a mask in graph6 column order (bit 0 is pair (0, 1))."""
    mask = 0
    bit = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            if (col >> i) & 1:
                mask |= 1 << (bit + i)
        bit += j
    return mask


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 record for ``g`` without header or newline."""
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise GraphError(f"graph6 codec supports at most {MAX_GRAPH6_VERTICES} vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if nbits:
        value = int(format(edge_mask(g), f"0{nbits}b")[::-1], 2)
    else:
        value = 0
    value <<= 6 * nbytes - nbits
    out = [chr(n + 63)]
    for k in range(nbytes - 1, -1, -1):
        out.append(chr(((value >> (6 * k)) & 63) + 63))
    return "".join(out)


# ---------------------------------------------------------------- enumeration

def enumerate_labeled(n: int, connected_only: bool = False,
                      start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Yield every labeled graph on ``n`` vertices, by edge mask.

    ``start``/``stop`` restrict the edge-mask range so that a sweep can be
    partitioned across workers.
    """
    if not 1 <= n <= MAX_ENUMERATION_VERTICES:
        raise GraphError(f"labeled enumeration supports 1 <= n <= {MAX_ENUMERATION_VERTICES}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    build = kernels.adj_from_mask
    connected = kernels.is_connected
    trusted = Graph._trusted
    for mask in range(start, stop):
        adj = build(n, mask)
        if connected_only and not connected(n, adj):
            continue
        yield trusted(n, adj)


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)
