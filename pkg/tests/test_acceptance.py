"""End-to-end acceptance criteria.

Each test records one PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them in the terminal summary.  Sweeps shared by several criteria are cached.
"""

import functools
import gzip
import random
from fractions import Fraction as F
from itertools import product

import pytest

from zagrebcheck.constructors import complete_bipartite, path_graph
from zagrebcheck.graph import Graph, decode_graph6, from_edge_list
from zagrebcheck.harness import EnumerationSource, FileSource, run_sweep
from zagrebcheck.inequalities import (
    PolyaSzegoError,
    PolyaSzegoInstance,
    equality_instance,
    polya_szego_check,
)
from zagrebcheck.theorems import (
    BRANCH_COMPLETE,
    BRANCH_PQ,
    EXC_KKP1,
    EXC_KKP2,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    lemma4_moon_moser,
    lemma5_jackson,
)

import oracles

RESULTS = []

CORPUS_FILES = ("graph1_7.g6.gz", "graph8.g6.gz", "graph8c.g6.gz", "graph9c.g6.gz", "bip2c_4_12.g6.gz")


def record(number, title, ok, detail):
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  [{number}] {title}: {detail}")
    return ok


def line_count(path):
    with gzip.open(path, "rt") as fh:
        return sum(1 for _ in fh)


# ---------------------------------------------------------------- shared sweeps

@functools.cache
def connected_sweep(n):
    return run_sweep(EnumerationSource(n, True), "t1,ce_ham,ce_trace")


@functools.cache
def labeled_sweep(n):
    return run_sweep(EnumerationSource(n), "t3,roundtrip")


@functools.cache
def corpus_sweep(name):
    from conftest import CORPORA

    checks = {
        "graph1_7.g6.gz": "roundtrip",
        "graph8.g6.gz": "t3,roundtrip",
        "graph8c.g6.gz": "t1,roundtrip",
        "graph9c.g6.gz": "t1,t2,roundtrip",
        "bip2c_4_12.g6.gz": "jackson,roundtrip",
    }[name]
    return run_sweep(FileSource(CORPORA / name), checks)


def violations(report, check):
    return report.per_check[check].violations


# ---------------------------------------------------------------- criteria

def test_criterion_1_hamiltonian_sweep(corpora):
    bad = 0
    scanned = 0
    counts_ok = True
    for n in range(3, 8):
        rep = connected_sweep(n)
        bad += violations(rep, "t1")
        scanned += rep.graphs_scanned
        counts_ok &= rep.graphs_scanned == oracles.connected_labeled_count(n)
    n7 = connected_sweep(7).graphs_scanned
    for name in ("graph8c.g6.gz", "graph9c.g6.gz"):
        rep = corpus_sweep(name)
        bad += violations(rep, "t1")
        scanned += rep.graphs_scanned
        counts_ok &= rep.graphs_scanned == line_count(corpora / name)
    ok = bad == 0 and counts_ok and n7 == 1866256
    assert record(1, "T1 soundness sweep", ok,
                  f"{scanned} graphs, {bad} inconsistent verdicts, n=7 connected labeled = {n7}")


def test_criterion_2_hamiltonian_boundary():
    rows = []
    ok = True
    for k in range(2, 6):
        v = check_theorem1(complete_bipartite(k, k + 1))
        tight = v.lhs_m1 * v.rhs.denominator == v.rhs.numerator
        ok &= (v.condition_met and tight and not v.conclusion_holds
               and v.exception == EXC_KKP1 and v.consistent and v.k_used == k)
        rows.append(f"K_{k},{k + 1}: {v.lhs_m1}={v.rhs}")
    ok &= check_theorem1(complete_bipartite(2, 3)).lhs_m1 == 30
    assert record(2, "T1 boundary", ok, "; ".join(rows))


def test_criterion_3_traceable_sweep(corpora):
    rep = corpus_sweep("graph9c.g6.gz")
    bad = violations(rep, "t2")
    ok = bad == 0 and rep.graphs_scanned == 261080 and rep.per_check["t2"].applicable == 261080
    rows = []
    for k in (4, 5, 6):
        v = check_theorem2(complete_bipartite(k, k + 2))
        ok &= (v.condition_met and v.lhs_m1 == v.rhs and not v.conclusion_holds
               and v.exception == EXC_KKP2 and v.consistent)
        rows.append(f"K_{k},{k + 2}: {v.lhs_m1}={v.rhs}")
    ok &= check_theorem2(complete_bipartite(4, 6)).lhs_m1 == 240
    assert record(3, "T2 soundness sweep", ok,
                  f"{rep.graphs_scanned} graphs, {bad} inconsistent; " + "; ".join(rows))


def test_criterion_4_upper_bound():
    bad = equalities = applicable = 0
    for n in range(1, 8):
        rep = labeled_sweep(n)
        bad += violations(rep, "t3")
        equalities += rep.per_check["t3"].condition_met
        applicable += rep.per_check["t3"].applicable
    rep = corpus_sweep("graph8.g6.gz")
    bad += violations(rep, "t3")
    equalities += rep.per_check["t3"].condition_met
    applicable += rep.per_check["t3"].applicable

    v = check_theorem3(path_graph(5))
    ok = bad == 0
    ok &= (v.lhs_m1 == 14 == v.rhs and v.certificate.branch == BRANCH_PQ
           and v.certificate.sizes == (1, 2))
    kab = 0
    for beta in range(1, 7):
        for other in range(1, beta + 1):
            w = check_theorem3(complete_bipartite(other, beta))
            if (w.lhs_m1 == w.rhs and w.certificate is not None
                    and w.certificate.branch in (BRANCH_COMPLETE, BRANCH_PQ)):
                kab += 1
    ok &= kab == 21
    assert record(4, "T3 bound and equality certificates", ok,
                  f"{applicable} graphs with min degree >= 1, {equalities} equalities all certified, "
                  f"{bad} failures; P_5 = 14 sizes (1,2); {kab}/21 K_a,b tight")


def _random_instance(rng):
    def rat():
        return F(rng.randint(1, 1000), rng.randint(1, 100))

    lo_a, hi_a = sorted((rat(), rat()))
    lo_b, hi_b = sorted((rat(), rat()))
    s = rng.randint(1, 12)
    a = [lo_a + F(rng.randint(0, 60), 60) * (hi_a - lo_a) for _ in range(s)]
    b = [lo_b + F(rng.randint(0, 60), 60) * (hi_b - lo_b) for _ in range(s)]
    return PolyaSzegoInstance.of(a, b, lo_a, hi_a, lo_b, hi_b)


def _integral_tuples(limit=100):
    out = []
    for s in range(1, 13):
        for a_min, a_max, b_min, b_max in product(range(1, 6), repeat=4):
            if a_min > a_max or b_min > b_max or a_max * b_max == a_min * b_min:
                continue
            if (a_max * b_min * s) % (a_max * b_min + a_min * b_max) == 0:
                out.append((a_min, a_max, b_min, b_max, s))
                if len(out) == limit:
                    return out
    return out


def test_criterion_5_polya_szego():
    rng = random.Random(5)
    failures = sum(not polya_szego_check(_random_instance(rng)).holds for _ in range(10 ** 4))
    tuples = _integral_tuples()
    broken = 0
    for a_min, a_max, b_min, b_max, s in tuples:
        inst = equality_instance(a_min, a_max, b_min, b_max, s)
        if not polya_szego_check(inst).equality:
            broken += 1
            continue
        box = (inst.a_min, inst.a_max, inst.b_min, inst.b_max)
        for k in range(s):
            if a_min < a_max:
                a = list(inst.a)
                a[k] = F(a_min + a_max, 2)
                broken += polya_szego_check(PolyaSzegoInstance(tuple(a), inst.b, *box)).equality
            if b_min < b_max:
                b = list(inst.b)
                b[k] = F(b_min + b_max, 2)
                broken += polya_szego_check(PolyaSzegoInstance(inst.a, tuple(b), *box)).equality
    r = polya_szego_check(PolyaSzegoInstance.of((1, 1, 2, 2), (2, 2, 1, 1), 1, 2, 1, 2))
    with pytest.raises(PolyaSzegoError):
        equality_instance(1, 2, 1, 2, 3)
    ok = failures == 0 and len(tuples) == 100 and broken == 0 and r.lhs == r.rhs == 100
    assert record(5, "Polya-Szego suite", ok,
                  f"{failures}/10000 random failures, {len(tuples)} integral tuples, "
                  f"{broken} equality/perturbation defects, example lhs=rhs={r.lhs}")


def _balanced_bipartite(m):
    """Every bipartite graph on parts {0..m-1}, {m..2m-1} via its biadjacency matrix."""
    pairs = [(i, m + j) for i in range(m) for j in range(m)]
    for mask in range(1 << len(pairs)):
        yield from_edge_list(2 * m, [p for t, p in enumerate(pairs) if mask >> t & 1])


def test_criterion_6_lemmas(corpora):
    ce_bad = 0
    for n in range(1, 8):
        if n < 3:
            rep = run_sweep(EnumerationSource(n, True), "ce_ham,ce_trace")
        else:
            rep = connected_sweep(n)
        ce_bad += violations(rep, "ce_ham") + violations(rep, "ce_trace")

    mm_checked = mm_bad = 0
    for m in range(1, 5):
        parts = (set(range(m)), set(range(m, 2 * m)))
        for g in _balanced_bipartite(m):
            r = lemma4_moon_moser(g, parts)
            mm_checked += 1
            if not r.consistent:
                mm_bad += 1
            elif r.applicable and r.condition and g.n <= 6:
                mm_bad += not oracles.hamiltonian(g)

    rep = corpus_sweep("bip2c_4_12.g6.gz")
    jk_bad = violations(rep, "jackson")
    jk_count = rep.per_check["jackson"].applicable
    with gzip.open(corpora / "graph1_7.g6.gz", "rt") as fh:
        for line in fh:
            g = decode_graph6(line)
            if g.n <= 7 and oracles.is_bipartite(g) and g.n >= 3 and oracles.vertex_connectivity(g) >= 2:
                r = lemma5_jackson(g)
                jk_count += 1
                jk_bad += not (r.applicable and oracles.circumference(g) >= r.promised_length)

    k23 = lemma5_jackson(complete_bipartite(2, 3))
    ok = ce_bad == 0 and mm_bad == 0 and jk_bad == 0 and (k23.promised_length, k23.actual) == (4, 4)
    ok &= rep.graphs_scanned == rep.per_check["jackson"].applicable
    assert record(6, "Lemma suite", ok,
                  f"Chvatal-Erdos {ce_bad} defects; Moon-Moser {mm_checked} graphs {mm_bad} defects; "
                  f"Jackson {jk_count} graphs {jk_bad} defects; K_2,3 promise {k23.promised_length} "
                  f"actual {k23.actual}")


def test_criterion_7_codec(corpora):
    bad = enumerated = lines = 0
    for n in range(1, 8):
        rep = labeled_sweep(n)
        bad += violations(rep, "roundtrip")
        enumerated += rep.graphs_scanned
    for name in CORPUS_FILES:
        rep = corpus_sweep(name)
        bad += violations(rep, "roundtrip")
        lines += rep.graphs_scanned
        bad += rep.graphs_scanned != line_count(corpora / name)
    k4 = from_edge_list(4, [(i, j) for j in range(4) for i in range(j)])
    ok = (bad == 0 and enumerated == sum(2 ** (n * (n - 1) // 2) for n in range(1, 8))
          and decode_graph6("C~") == k4 and decode_graph6("@") == Graph(1, [0]))
    assert record(7, "graph6 codec", ok,
                  f"{enumerated} enumerated + {lines} corpus lines, {bad} defects; C~ = K_4, @ = K_1")


def test_criterion_8_determinism():
    source = EnumerationSource(6)
    one = run_sweep(source, "all", jobs=1).render().encode()
    eight = run_sweep(source, "all", jobs=8).render().encode()
    again = run_sweep(source, "all", jobs=8).render().encode()
    ok = one == eight == again
    assert record(8, "determinism", ok, f"jobs=1 vs jobs=8 reports byte-identical ({len(one)} bytes)")
