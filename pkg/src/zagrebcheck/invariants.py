"""Exact graph invariants used by the Zagreb-index conditions.

The exponential searches (independence number, connectivity, Hamiltonian
cycles and paths, longest cycle) run in :mod:`zagrebcheck.kernels`.  Results
are memoized on the :class:`~zagrebcheck.graph.Graph` instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .graph import Graph, GraphError, bits, degree_profile

HAMILTONIAN_MAX_VERTICES = 24
CIRCUMFERENCE_MAX_VERTICES = 16


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    e: int
    delta: int
    Delta: int
    m1: int
    beta: int
    kappa: int
    hamiltonian: bool
    traceable: bool
    circumference: int
    bipartition: Optional[tuple[frozenset, frozenset]]


def _cached(g: Graph, key: str, compute):
    try:
        return g._cache[key]
    except KeyError:
        value = g._cache[key] = compute()
        return value


def zagreb_m1(g: Graph) -> int:
    """First Zagreb index: the sum of squared vertex degrees."""
    return sum(d * d for d in degree_profile(g).degrees)


def is_connected(g: Graph) -> bool:
    return _cached(g, "connected", lambda: kernels.is_connected(g.n, g.adj))


def max_independent_mask(g: Graph) -> int:
    """Bitmask of one maximum independent set.

    Internal helper for the checks that need a concrete set; which maximum
    set is returned is an implementation detail.
    """
    return _cached(g, "mis", lambda: kernels.max_independent_set(g.n, g.adj))


def independence_number(g: Graph) -> int:
    return max_independent_mask(g).bit_count()


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; ``n - 1`` for the complete graph ``K_n``."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least 2 vertices")
    return _cached(g, "kappa", lambda: kernels.vertex_connectivity(g.n, g.adj))


def is_hamiltonian(g: Graph) -> bool:
    if g.n > HAMILTONIAN_MAX_VERTICES:
        raise GraphError(f"Hamiltonicity search is limited to n <= {HAMILTONIAN_MAX_VERTICES}")
    return _cached(g, "ham", lambda: kernels.hamiltonian_cycle(g.n, g.adj))


def is_traceable(g: Graph) -> bool:
    if g.n > HAMILTONIAN_MAX_VERTICES:
        raise GraphError(f"Hamiltonian path search is limited to n <= {HAMILTONIAN_MAX_VERTICES}")
    if "ham" in g._cache and g._cache["ham"]:
        return True
    return _cached(g, "trace", lambda: kernels.hamiltonian_path(g.n, g.adj))


def bipartition(g: Graph) -> Optional[tuple[frozenset, frozenset]]:
    """Two-coloring ``(A, B)`` or ``None`` if ``g`` has an odd cycle.

    The lowest-index vertex of every component is placed in ``A``.
    """
    return _cached(g, "bip", lambda: _two_color(g))


def _two_color(g: Graph):
    side_a = side_b = 0
    seen = 0
    adj = g.adj
    for root in range(g.n):
        if (seen >> root) & 1:
            continue
        layer = 1 << root
        seen |= layer
        in_a = True
        while layer:
            if in_a:
                side_a |= layer
            else:
                side_b |= layer
            nxt = 0
            for v in bits(layer):
                nxt |= adj[v]
            if nxt & (side_a if in_a else side_b):
                return None
            layer = nxt & ~seen
            seen |= layer
            in_a = not in_a
    return frozenset(bits(side_a)), frozenset(bits(side_b))


def circumference(g: Graph) -> int:
    """Length of a longest cycle (0 for forests)."""
    if g.n > CIRCUMFERENCE_MAX_VERTICES:
        raise GraphError(f"longest-cycle search is limited to n <= {CIRCUMFERENCE_MAX_VERTICES}")

    def compute():
        if g._cache.get("ham"):
            return g.n
        cap = g.n
        parts = bipartition(g)
        if parts is not None:
            cap = 2 * min(len(parts[0]), len(parts[1]))
        return kernels.longest_cycle(g.n, g.adj, cap)

    return _cached(g, "circ", compute)


def full_bundle(g: Graph) -> InvariantBundle:
    prof = degree_profile(g)
    return InvariantBundle(
        n=g.n,
        e=prof.e,
        delta=prof.delta,
        Delta=prof.Delta,
        m1=zagreb_m1(g),
        beta=independence_number(g),
        kappa=vertex_connectivity(g) if g.n >= 2 else 0,
        hamiltonian=is_hamiltonian(g),
        traceable=is_traceable(g),
        circumference=circumference(g),
        bipartition=bipartition(g),
    )
