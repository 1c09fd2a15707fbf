"""Pure-Python search kernels over neighbor bitsets.

Each graph is passed as ``(n, adj)`` where ``adj[v]`` is an ``int`` whose
bit ``u`` is set iff ``u`` and ``v`` are adjacent.  The compiled module
``_kernels`` exposes the same functions with the same semantics; see
:mod:`zagrebcheck.kernels` for the selection logic.
"""

from __future__ import annotations

BACKEND = "python"


def adj_from_mask(n: int, mask: int) -> tuple[int, ...]:
    """Adjacency bitsets for the edge mask in graph6 column order.

    Bit ``j*(j-1)/2 + i`` of ``mask`` encodes the pair ``(i, j)`` with
    ``i < j``.
    """
    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> bit) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return tuple(adj)


def is_connected(n: int, adj) -> bool:
    if n <= 1:
        return True
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def max_independent_set(n: int, adj) -> int:
    """Bitmask of one maximum independent set (deterministic choice)."""
    best = [0, 0]  # size, mask

    def search(cand: int, cur: int, size: int) -> None:
        if cand == 0:
            if size > best[0]:
                best[0] = size
                best[1] = cur
            return
        if size + cand.bit_count() <= best[0]:
            return
        lo_v = hi_v = -1
        lo_d = n + 1
        hi_d = -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = (adj[v] & cand).bit_count()
            if d < lo_d:
                lo_d, lo_v = d, v
            if d > hi_d:
                hi_d, hi_v = d, v
        if lo_d <= 1:
            # some maximum independent set contains a vertex of degree <= 1
            search(cand & ~(adj[lo_v] | (1 << lo_v)), cur | (1 << lo_v), size + 1)
            return
        u = hi_v
        search(cand & ~(adj[u] | (1 << u)), cur | (1 << u), size + 1)
        search(cand & ~(1 << u), cur, size)

    search((1 << n) - 1, 0, 0)
    return best[1]


def _local_connectivity(n: int, adj, s: int, t: int, limit: int) -> int:
    # Vertex-split network: node 2v is v_in, 2v+1 is v_out.  Internal vertices
    # carry capacity 1 on v_in -> v_out; every edge uv becomes u_out -> v_in
    # and v_out -> u_in with unbounded capacity.
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        rest = adj[v]
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {source: source}
        queue = [source]
        head = 0
        while head < len(queue) and sink not in parent:
            a = queue[head]
            head += 1
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(n: int, adj) -> int:
    """Exact vertex connectivity; ``n - 1`` for complete graphs."""
    best = n - 1
    for v in range(n):
        best = min(best, adj[v].bit_count())
    if not is_connected(n, adj):
        return 0
    # Even's scheme: one of the first best+1 vertices lies outside some
    # minimum separator, and every vertex separated from it has larger index.
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if (adj[i] >> j) & 1:
                continue
            best = min(best, _local_connectivity(n, adj, i, j, best))
        i += 1
    return best


def hamiltonian_cycle(n: int, adj) -> bool:
    if n < 3:
        return False
    for v in range(n):
        if adj[v].bit_count() < 2:
            return False
    if not is_connected(n, adj):
        return False
    full = (1 << n) - 1

    def extend(end: int, visited: int, count: int) -> bool:
        if count == n:
            return bool(adj[end] & 1)
        unvisited = full & ~visited
        reach = unvisited | (1 << end) | 1
        rest = unvisited
        while rest:
            low = rest & -rest
            rest ^= low
            if (adj[low.bit_length() - 1] & reach).bit_count() < 2:
                return False
        nxt = adj[end] & unvisited
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            if extend(low.bit_length() - 1, visited | low, count + 1):
                return True
        return False

    return extend(0, 1, 1)


def hamiltonian_path(n: int, adj) -> bool:
    if n == 1:
        return True
    if not is_connected(n, adj):
        return False
    full = (1 << n) - 1
    leaves = [v for v in range(n) if adj[v].bit_count() == 1]
    if len(leaves) > 2:
        return False

    def extend(end: int, visited: int, count: int) -> bool:
        if count == n:
            return True
        unvisited = full & ~visited
        reach = unvisited | (1 << end)
        forced = 0
        rest = unvisited
        while rest:
            low = rest & -rest
            rest ^= low
            d = (adj[low.bit_length() - 1] & reach).bit_count()
            if d == 0:
                return False
            if d == 1:
                forced += 1
                if forced > 1:
                    return False
        nxt = adj[end] & unvisited
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            if extend(low.bit_length() - 1, visited | low, count + 1):
                return True
        return False

    starts = leaves[:1] if leaves else range(n)
    return any(extend(s, 1 << s, 1) for s in starts)


def longest_cycle(n: int, adj, cap: int) -> int:
    """Length of a longest cycle, or 0 for forests.

    The search stops early once a cycle of length ``cap`` is found, so
    ``cap`` must be a valid upper bound on the circumference.
    """
    best = 0
    full = (1 << n) - 1
    for s in range(n):
        if n - s <= best or best >= cap:
            break
        allowed = full & ~((1 << (s + 1)) - 1)
        closers = adj[s]

        def extend(end: int, visited: int, length: int) -> None:
            nonlocal best
            if length >= 3 and (closers >> end) & 1 and length > best:
                best = length
            if best >= cap:
                return
            free = allowed & ~visited
            if length + free.bit_count() <= best:
                return
            nxt = adj[end] & free
            while nxt:
                low = nxt & -nxt
                nxt ^= low
                extend(low.bit_length() - 1, visited | low, length + 1)
                if best >= cap:
                    return

        extend(s, 1 << s, 1)
    return best
