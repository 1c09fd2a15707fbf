"""Zagreb-index Hamiltonicity/traceability conditions, the Zagreb upper bound
with its equality certificate, and the classical lemmas they rest on.

All thresholds are :class:`fractions.Fraction` values; comparisons against
the integer Zagreb index are therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graph import Graph, GraphError, degree_profile
from .invariants import (
    CIRCUMFERENCE_MAX_VERTICES,
    bipartition,
    circumference,
    independence_number,
    is_connected,
    is_hamiltonian,
    is_traceable,
    vertex_connectivity,
    zagreb_m1,
)

T1, T2, T3 = "T1", "T2", "T3"
EXC_KKP1 = "K_{k,k+1}"
EXC_KKP2 = "K_{k,k+2}"
EXC_T3_COMPLETE = "T3-equality-branch-1"
EXC_T3_PQ = "T3-equality-branch-2"
BRANCH_COMPLETE = "complete-bipartite"
BRANCH_PQ = "PQ-family"


class DomainError(ValueError):
    """Threshold requested outside the parameter range where it is defined."""


@dataclass(frozen=True)
class EqualityCertificate:
    branch: str
    I: frozenset
    P: frozenset
    Q: frozenset
    sizes: tuple[int, int]
    checks: tuple[tuple[str, bool], ...]

    @property
    def valid(self) -> bool:
        return all(ok for _, ok in self.checks)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    applicable: bool
    reason: str
    k_used: Optional[int] = None
    lhs_m1: Optional[int] = None
    rhs: Optional[Fraction] = None
    condition_met: bool = False
    conclusion_holds: bool = False
    exception: Optional[str] = None
    consistent: bool = True
    triggered_ks: tuple[int, ...] = ()
    certificate: Optional[EqualityCertificate] = field(default=None, compare=False)


# ---------------------------------------------------------------- thresholds

def _hamilton_rhs(n: int, k: int, e: int, delta: int, Delta: int, shift: int) -> Fraction:
    rest = n - k - shift
    if delta <= 0 or rest <= 0:
        raise DomainError(
            f"zero or negative denominator (delta={delta}, n-k-{shift}={rest})")
    num = (e * (delta + rest)) ** 2
    den = 4 * delta * rest * (k + shift)
    return rest * Delta * Delta + Fraction(num, den)


def t1_rhs(n: int, k: int, e: int, delta: int, Delta: int) -> Fraction:
    """Zagreb threshold forcing a Hamiltonian cycle in a k-connected graph."""
    if n < 3 or k < 2:
        raise DomainError("requires n >= 3 and k >= 2")
    return _hamilton_rhs(n, k, e, delta, Delta, 1)


def t2_rhs(n: int, k: int, e: int, delta: int, Delta: int) -> Fraction:
    """Zagreb threshold forcing a Hamiltonian path in a k-connected graph."""
    if n < 9 or k < 1:
        raise DomainError("requires n >= 9 and k >= 1")
    return _hamilton_rhs(n, k, e, delta, Delta, 2)


def t3_bound(n: int, e: int, delta: int, Delta: int, beta: int) -> Fraction:
    """Upper bound on the first Zagreb index in terms of n, e, degrees and beta."""
    if delta <= 0:
        raise DomainError("requires minimum degree >= 1")
    if not 1 <= beta <= n - 1:
        raise DomainError(f"requires 1 <= beta <= n-1, got beta={beta}, n={n}")
    rest = n - beta
    return rest * Delta * Delta + Fraction((e * (delta + rest)) ** 2, 4 * delta * rest * beta)


# ---------------------------------------------------------------- recognizers

def recognize_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes ``(a, b)`` with ``a <= b`` if ``g`` is ``K_{a,b}``."""
    parts = bipartition(g)
    if parts is None:
        return None
    a, b = sorted((len(parts[0]), len(parts[1])))
    if a == 0 or degree_profile(g).e != a * b:
        return None
    return a, b


# ---------------------------------------------------------------- hamiltonian and traceable conditions

def _check_hamilton(g: Graph, theorem: str) -> TheoremVerdict:
    if theorem == T1:
        min_n, min_k, shift, rhs_fn, exc = 3, 2, 1, t1_rhs, EXC_KKP1
        conclusion = is_hamiltonian
    else:
        min_n, min_k, shift, rhs_fn, exc = 9, 1, 2, t2_rhs, EXC_KKP2
        conclusion = is_traceable
    n = g.n
    m1 = zagreb_m1(g)
    if n < min_n:
        return TheoremVerdict(theorem, False, f"n = {n} < {min_n}", lhs_m1=m1)
    kappa = vertex_connectivity(g)
    if kappa < min_k:
        return TheoremVerdict(theorem, False, f"kappa = {kappa} < {min_k}", lhs_m1=m1)
    prof = degree_profile(g)
    thresholds = {}
    # k must also keep n - k - shift positive; complete graphs reach that edge
    for k in range(min_k, min(kappa, n - shift - 1) + 1):
        thresholds[k] = rhs_fn(n, k, prof.e, prof.delta, prof.Delta)
    triggered = tuple(k for k, rhs in thresholds.items() if m1 >= rhs)
    holds = conclusion(g)
    if not thresholds:
        return TheoremVerdict(theorem, True, "no k with positive denominator",
                              lhs_m1=m1, conclusion_holds=holds)
    if triggered:
        k_used = triggered[0]
        rhs = thresholds[k_used]
    else:
        k_used = None
        rhs = min(thresholds.values())
    parts = recognize_complete_bipartite(g)
    exception = None
    if triggered and parts == (k_used, k_used + shift):
        exception = exc
    excused = bool(triggered) and all(parts == (k, k + shift) for k in triggered)
    consistent = not triggered or holds or excused
    return TheoremVerdict(
        theorem, True, "ok", k_used=k_used, lhs_m1=m1, rhs=rhs,
        condition_met=bool(triggered), conclusion_holds=holds, exception=exception,
        consistent=consistent, triggered_ks=triggered,
    )


def check_theorem1(g: Graph) -> TheoremVerdict:
    """Evaluate the Hamiltonicity condition for every k from 2 to kappa(g)."""
    return _check_hamilton(g, T1)


def check_theorem2(g: Graph) -> TheoremVerdict:
    """Evaluate the traceability condition for every k from 1 to kappa(g)."""
    return _check_hamilton(g, T2)


# ---------------------------------------------------------------- zagreb upper bound

def equality_certificate(g: Graph) -> Optional[EqualityCertificate]:
    """Structural witness that ``g`` belongs to one of the two extremal
    families of the Zagreb upper bound, or ``None``.

    This looks only at structure (parts, degrees, set sizes); it never
    evaluates the bound itself.
    """
    prof = degree_profile(g)
    n, delta, Delta = g.n, prof.delta, prof.Delta
    if delta < 1 or not is_connected(g):
        return None
    parts = bipartition(g)
    if parts is None:
        return None
    beta = independence_number(g)
    rest = n - beta
    sides = [s for s in parts if len(s) == beta]
    if not sides:
        return None
    degs = prof.degrees

    cb = recognize_complete_bipartite(g)
    if cb is not None and cb == (rest, beta):
        I = sides[0]
        checks = (
            ("complete_bipartite", True),
            ("part_sizes", cb == (rest, beta)),
            ("I_degree_n_minus_beta", all(degs[v] == rest for v in I)),
        )
        return EqualityCertificate(BRANCH_COMPLETE, I, I, frozenset(), (beta, 0), checks)

    for I in sides:
        others = frozenset(range(n)) - I
        P = frozenset(v for v in I if degs[v] == rest)
        Q = frozenset(v for v in I if degs[v] == delta)
        checks = (
            ("bipartite", all(not (g.adj[v] & _mask(others)) for v in others)),
            ("delta_below_n_minus_beta", delta < rest),
            ("complement_degree_Delta", all(degs[v] == Delta for v in others)),
            ("I_is_P_union_Q", P | Q == I and not P & Q),
            ("P_size", len(P) * (delta + rest) == delta * beta),
            ("Q_size", len(Q) * (delta + rest) == rest * beta),
        )
        if all(ok for _, ok in checks):
            return EqualityCertificate(BRANCH_PQ, I, P, Q, (len(P), len(Q)), checks)
    return None


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def check_theorem3(g: Graph) -> TheoremVerdict:
    """Check the Zagreb upper bound and that equality holds exactly on the
    certified extremal families."""
    prof = degree_profile(g)
    if prof.delta < 1:
        raise DomainError("the Zagreb upper bound needs minimum degree >= 1")
    beta = independence_number(g)
    m1 = zagreb_m1(g)
    bound = t3_bound(g.n, prof.e, prof.delta, prof.Delta, beta)
    equal = m1 == bound
    cert = equality_certificate(g)
    exception = None
    if cert is not None:
        exception = EXC_T3_COMPLETE if cert.branch == BRANCH_COMPLETE else EXC_T3_PQ
    holds = m1 <= bound
    return TheoremVerdict(
        T3, True, "ok", lhs_m1=m1, rhs=bound, condition_met=equal,
        conclusion_holds=holds, exception=exception,
        consistent=holds and equal == (cert is not None), certificate=cert,
    )


# ---------------------------------------------------------------- classical sufficient conditions

@dataclass(frozen=True)
class LemmaResult:
    applicable: bool
    condition: bool
    conclusion: bool
    consistent: bool


@dataclass(frozen=True)
class JacksonResult:
    applicable: bool
    promised_length: int
    actual: int
    consistent: bool


def lemma1_chvatal_erdos(g: Graph) -> LemmaResult:
    """independence number <= connectivity forces a Hamiltonian cycle (n >= 3)."""
    if g.n < 3:
        raise GraphError("needs n >= 3")
    cond = independence_number(g) <= vertex_connectivity(g)
    concl = is_hamiltonian(g)
    return LemmaResult(True, cond, concl, not cond or concl)


def lemma2_chvatal_erdos_traceable(g: Graph) -> LemmaResult:
    """independence number <= connectivity + 1 forces a Hamiltonian path."""
    kappa = vertex_connectivity(g) if g.n >= 2 else 0
    cond = independence_number(g) <= kappa + 1
    concl = is_traceable(g)
    return LemmaResult(True, cond, concl, not cond or concl)


def lemma4_moon_moser(g: Graph, parts: Optional[tuple] = None) -> LemmaResult:
    """Degree-sum condition for balanced bipartite graphs.

    ``parts`` fixes the bipartition ``(A, B)``; by default the canonical
    two-coloring is used.  Part size 1 is excluded: ``K_2`` meets the
    condition vacuously but has no cycle.
    """
    if parts is None:
        parts = bipartition(g)
        if parts is None:
            return LemmaResult(False, False, False, True)
    A, B = (frozenset(p) for p in parts)
    if A & B or len(A) + len(B) != g.n:
        raise GraphError("parts must partition the vertex set")
    a_mask, b_mask = _mask(A), _mask(B)
    if any(g.adj[v] & a_mask for v in A) or any(g.adj[v] & b_mask for v in B):
        raise GraphError("parts are not independent sets")
    half = len(A)
    if half != len(B) or half < 2:
        return LemmaResult(False, False, False, True)
    degs = degree_profile(g).degrees
    cond = all(degs[x] + degs[y] >= half + 1
               for x in A for y in B if not g.has_edge(x, y))
    concl = is_hamiltonian(g)
    return LemmaResult(True, cond, concl, not cond or concl)


def lemma5_jackson(g: Graph) -> JacksonResult:
    """Long-cycle guarantee for 2-connected bipartite graphs.

    With equal part sizes both labelings are valid, so the larger promise
    is checked.
    """
    if g.n > CIRCUMFERENCE_MAX_VERTICES:
        raise GraphError(f"needs n <= {CIRCUMFERENCE_MAX_VERTICES}")
    parts = bipartition(g)
    if g.n < 3 or parts is None or vertex_connectivity(g) < 2:
        return JacksonResult(False, 0, 0, True)
    degs = degree_profile(g).degrees
    X, Y = parts
    labelings = []
    if len(X) >= len(Y):
        labelings.append((X, Y))
    if len(Y) >= len(X):
        labelings.append((Y, X))
    promise = 0
    for A, B in labelings:
        s = min(degs[v] for v in A)
        t = min(degs[v] for v in B)
        promise = max(promise, 2 * min(len(B), s + t - 1, 2 * s - 2))
    actual = circumference(g)
    return JacksonResult(True, promise, actual, actual >= promise)
