# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels over 64-bit neighbor bitsets.

Same call signatures and results as :mod:`zagrebcheck._pykernels`; graphs
are limited to 64 vertices here.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memset

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef inline int lowidx(uint64_t x) nogil:
    return __builtin_ctzll(x)

cdef inline uint64_t full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef int load(int n, object adj, uint64_t* out) except -1:
    if n < 0 or n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef int v
    for v in range(n):
        out[v] = <uint64_t>adj[v]
    return 0


def adj_from_mask(int n, mask):
    cdef uint64_t a[64]
    cdef int i, j
    cdef object m = mask
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    memset(a, 0, sizeof(a))
    if n <= 11:
        _fill_small(n, <uint64_t>m, a)
    else:
        bit = 0
        for j in range(1, n):
            for i in range(j):
                if (m >> bit) & 1:
                    a[i] |= (<uint64_t>1) << j
                    a[j] |= (<uint64_t>1) << i
                bit += 1
    return tuple([a[i] for i in range(n)])


cdef void _fill_small(int n, uint64_t m, uint64_t* a) nogil:
    cdef int i, j, bit = 0
    for j in range(1, n):
        for i in range(j):
            if (m >> bit) & 1:
                a[i] |= (<uint64_t>1) << j
                a[j] |= (<uint64_t>1) << i
            bit += 1


cdef bint _connected(int n, uint64_t* a) nogil:
    if n <= 1:
        return True
    cdef uint64_t seen = 1, frontier = 1, nxt, low
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & (~frontier + 1)
            nxt |= a[lowidx(low)]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full_mask(n)


def is_connected(int n, adj):
    cdef uint64_t a[64]
    load(n, adj, a)
    return _connected(n, a)


# ---------------------------------------------------------------- independence

cdef struct MisState:
    int best
    uint64_t best_mask


cdef void _mis(uint64_t* a, int n, uint64_t cand, uint64_t cur, int size,
               MisState* st) nogil:
    cdef uint64_t rest, low
    cdef int v, d, lo_v = -1, hi_v = -1, lo_d = 65, hi_d = -1
    if cand == 0:
        if size > st.best:
            st.best = size
            st.best_mask = cur
        return
    if size + popc(cand) <= st.best:
        return
    rest = cand
    while rest:
        low = rest & (~rest + 1)
        v = lowidx(low)
        rest ^= low
        d = popc(a[v] & cand)
        if d < lo_d:
            lo_d = d
            lo_v = v
        if d > hi_d:
            hi_d = d
            hi_v = v
    if lo_d <= 1:
        _mis(a, n, cand & ~(a[lo_v] | ((<uint64_t>1) << lo_v)),
             cur | ((<uint64_t>1) << lo_v), size + 1, st)
        return
    _mis(a, n, cand & ~(a[hi_v] | ((<uint64_t>1) << hi_v)),
         cur | ((<uint64_t>1) << hi_v), size + 1, st)
    _mis(a, n, cand & ~((<uint64_t>1) << hi_v), cur, size, st)


def max_independent_set(int n, adj):
    cdef uint64_t a[64]
    cdef MisState st
    load(n, adj, a)
    st.best = 0
    st.best_mask = 0
    _mis(a, n, full_mask(n), 0, 0, &st)
    return st.best_mask


# ---------------------------------------------------------------- connectivity

cdef int _local_connectivity(int n, uint64_t* a, int s, int t, int limit,
                             unsigned char* cap, int* parent, int* queue) nogil:
    # vertex-split network on 2n nodes: 2v = v_in, 2v+1 = v_out; capacities
    # above 1 are stored saturating at 255 (never the bottleneck for n <= 64)
    cdef int m = 2 * n
    cdef int v, u, x, y, head, tail, flow = 0
    cdef uint64_t rest, low
    memset(cap, 0, m * m)
    for v in range(n):
        cap[(2 * v) * m + 2 * v + 1] = 255 if (v == s or v == t) else 1
        rest = a[v]
        while rest:
            low = rest & (~rest + 1)
            u = lowidx(low)
            rest ^= low
            cap[(2 * v + 1) * m + 2 * u] = 255
    cdef int source = 2 * s + 1, sink = 2 * t
    while flow < limit:
        for x in range(m):
            parent[x] = -1
        parent[source] = source
        queue[0] = source
        head = 0
        tail = 1
        while head < tail and parent[sink] < 0:
            x = queue[head]
            head += 1
            for y in range(m):
                if parent[y] < 0 and cap[x * m + y] > 0:
                    parent[y] = x
                    queue[tail] = y
                    tail += 1
        if parent[sink] < 0:
            break
        y = sink
        while y != source:
            x = parent[y]
            if cap[x * m + y] != 255:
                cap[x * m + y] -= 1
            if cap[y * m + x] != 255:
                cap[y * m + x] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(int n, adj):
    cdef uint64_t a[64]
    cdef unsigned char cap[128 * 128]
    cdef int parent[128]
    cdef int queue[128]
    cdef int best, v, i, j, k
    load(n, adj, a)
    best = n - 1
    for v in range(n):
        if popc(a[v]) < best:
            best = popc(a[v])
    if not _connected(n, a):
        return 0
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if (a[i] >> j) & 1:
                continue
            k = _local_connectivity(n, a, i, j, best, cap, parent, queue)
            if k < best:
                best = k
        i += 1
    return best


# ---------------------------------------------------------------- hamiltonicity

cdef bint _ham_cycle(uint64_t* a, int n, uint64_t full, int end,
                     uint64_t visited, int count) nogil:
    cdef uint64_t unvisited, reach, rest, low, nxt
    if count == n:
        return (a[end] & 1) != 0
    unvisited = full & ~visited
    reach = unvisited | ((<uint64_t>1) << end) | 1
    rest = unvisited
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        if popc(a[lowidx(low)] & reach) < 2:
            return False
    nxt = a[end] & unvisited
    while nxt:
        low = nxt & (~nxt + 1)
        nxt ^= low
        if _ham_cycle(a, n, full, lowidx(low), visited | low, count + 1):
            return True
    return False


def hamiltonian_cycle(int n, adj):
    cdef uint64_t a[64]
    cdef int v
    if n < 3:
        return False
    load(n, adj, a)
    for v in range(n):
        if popc(a[v]) < 2:
            return False
    if not _connected(n, a):
        return False
    return _ham_cycle(a, n, full_mask(n), 0, 1, 1)


cdef bint _ham_path(uint64_t* a, int n, uint64_t full, int end,
                    uint64_t visited, int count) nogil:
    cdef uint64_t unvisited, reach, rest, low, nxt
    cdef int d, forced = 0
    if count == n:
        return True
    unvisited = full & ~visited
    reach = unvisited | ((<uint64_t>1) << end)
    rest = unvisited
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        d = popc(a[lowidx(low)] & reach)
        if d == 0:
            return False
        if d == 1:
            forced += 1
            if forced > 1:
                return False
    nxt = a[end] & unvisited
    while nxt:
        low = nxt & (~nxt + 1)
        nxt ^= low
        if _ham_path(a, n, full, lowidx(low), visited | low, count + 1):
            return True
    return False


def hamiltonian_path(int n, adj):
    cdef uint64_t a[64]
    cdef int v, leaves = 0, first_leaf = -1
    if n == 1:
        return True
    load(n, adj, a)
    if not _connected(n, a):
        return False
    for v in range(n):
        if popc(a[v]) == 1:
            leaves += 1
            if first_leaf < 0:
                first_leaf = v
    if leaves > 2:
        return False
    cdef uint64_t full = full_mask(n)
    if first_leaf >= 0:
        return _ham_path(a, n, full, first_leaf, (<uint64_t>1) << first_leaf, 1)
    for v in range(n):
        if _ham_path(a, n, full, v, (<uint64_t>1) << v, 1):
            return True
    return False


# ---------------------------------------------------------------- circumference

cdef struct CycState:
    int best
    int cap
    uint64_t allowed
    uint64_t closers


cdef void _cycle(uint64_t* a, int end, uint64_t visited, int length,
                 CycState* st) nogil:
    cdef uint64_t free, nxt, low
    if length >= 3 and (st.closers >> end) & 1 and length > st.best:
        st.best = length
    if st.best >= st.cap:
        return
    free = st.allowed & ~visited
    if length + popc(free) <= st.best:
        return
    nxt = a[end] & free
    while nxt:
        low = nxt & (~nxt + 1)
        nxt ^= low
        _cycle(a, lowidx(low), visited | low, length + 1, st)
        if st.best >= st.cap:
            return


def longest_cycle(int n, adj, int cap):
    cdef uint64_t a[64]
    cdef CycState st
    cdef int s
    load(n, adj, a)
    st.best = 0
    st.cap = cap
    for s in range(n):
        if n - s <= st.best or st.best >= cap:
            break
        st.allowed = full_mask(n) & ~(full_mask(s + 1))
        st.closers = a[s]
        _cycle(a, s, (<uint64_t>1) << s, 1, &st)
    return st.best
