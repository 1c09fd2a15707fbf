"""Named graphs, extremal families of the Zagreb upper bound, random graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import MAX_GRAPH6_VERTICES, Graph, GraphError, degree_profile, from_edge_list
from .invariants import independence_number


class ConstructionError(GraphError):
    pass


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1 or a + b > MAX_GRAPH6_VERTICES:
        raise ConstructionError(f"need a, b >= 1 and a + b <= {MAX_GRAPH6_VERTICES}")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("need n >= 1")
    return from_edge_list(n, [(i, j) for j in range(n) for i in range(j)])


def cycle_graph(n: int) -> Graph:
    if not 3 <= n <= MAX_GRAPH6_VERTICES:
        raise ConstructionError(f"cycles need 3 <= n <= {MAX_GRAPH6_VERTICES}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_GRAPH6_VERTICES:
        raise ConstructionError(f"paths need 1 <= n <= {MAX_GRAPH6_VERTICES}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, p, seed: int) -> Graph:
    """G(n, p) with a reproducible generator.

    Pairs are visited in graph6 column order ``(0,1), (0,2), (1,2), ...`` and
    pair ``(i, j)`` is kept iff ``rng.random() < p`` where ``rng`` is
    ``random.Random(seed)`` (Mersenne Twister; ``random()`` is specified to
    be platform independent).  ``p`` is compared exactly as a Fraction.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ConstructionError("edge probability must lie in [0, 1]")
    if not 1 <= n <= MAX_GRAPH6_VERTICES:
        raise ConstructionError(f"need 1 <= n <= {MAX_GRAPH6_VERTICES}")
    if not 0 <= seed < 1 << 64:
        raise ConstructionError("seed must be a 64-bit unsigned integer")
    rng = random.Random(seed)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if Fraction(rng.random()) < p:
                edges.append((i, j))
    return from_edge_list(n, edges)


# ---------------------------------------------------------------- extremal family

@dataclass(frozen=True)
class EqualityFamilySpec:
    n: int
    beta: int
    delta: int

    def sizes(self) -> tuple[int, int, int, int]:
        """``(|P|, |Q|, e, Delta)``; raises if any is non-integral."""
        n, beta, delta = self.n, self.beta, self.delta
        rest = n - beta
        if not 1 <= delta < rest:
            raise ConstructionError(
                f"need 1 <= delta < n - beta (delta={delta}, n-beta={rest})")
        if beta < 1:
            raise ConstructionError("need beta >= 1")
        den = delta + rest
        if (delta * beta) % den:
            raise ConstructionError(
                f"|P| = {delta * beta}/{den} is not an integer")
        if (rest * beta) % den:
            raise ConstructionError(
                f"|Q| = {rest * beta}/{den} is not an integer")
        e_num = 2 * delta * beta * rest
        if e_num % den:
            raise ConstructionError(f"e = {e_num}/{den} is not an integer")
        e = e_num // den
        if e % rest:
            raise ConstructionError(f"Delta = {e}/{rest} is not an integer")
        Delta = e // rest
        if Delta > beta:
            raise ConstructionError(f"Delta = {Delta} exceeds beta = {beta}")
        return delta * beta // den, rest * beta // den, e, Delta


def t3_equality_graph(spec: EqualityFamilySpec) -> Graph:
    """Bipartite member of the second extremal family of the Zagreb bound.

    Vertices ``0..beta-1`` form ``I`` (first the ``|P|`` dominating vertices,
    then the ``|Q|`` vertices of degree ``delta``); ``beta..n-1`` form
    ``V - I``.  The ``i``-th vertex of ``Q`` is joined to ``delta``
    consecutive vertices of ``V - I`` starting at offset
    ``(i * delta) mod (n - beta)``.  The result is verified to attain the
    bound with a certificate; any drift is an error.
    """
    from .theorems import BRANCH_PQ, check_theorem3

    p, q, e, Delta = spec.sizes()
    n, beta, delta = spec.n, spec.beta, spec.delta
    rest = n - beta
    edges = [(x, beta + j) for x in range(p) for j in range(rest)]
    for i in range(q):
        y = p + i
        for step in range(delta):
            edges.append((y, beta + (i * delta + step) % rest))
    g = from_edge_list(n, edges)

    prof = degree_profile(g)
    if prof.e != e:
        raise ConstructionError(f"edge count {prof.e} != {e}")
    if (prof.delta, prof.Delta) != (delta, Delta):
        raise ConstructionError(
            f"degree range ({prof.delta}, {prof.Delta}) != ({delta}, {Delta})")
    got_beta = independence_number(g)
    if got_beta != beta:
        raise ConstructionError(f"independence number drifted to {got_beta} (wanted {beta})")
    verdict = check_theorem3(g)
    cert = verdict.certificate
    if not verdict.condition_met or cert is None or cert.branch != BRANCH_PQ:
        raise ConstructionError("constructed graph does not attain the bound with a certificate")
    return g
