"""Exhaustive verification sweeps over graph corpora.

A sweep maps every graph of a source (a graph6 file or labeled enumeration)
through a set of named checks and reduces the per-chunk tallies in input
order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import gzip
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from . import constructors
from .graph import (
    GRAPH6_HEADER,
    MAX_ENUMERATION_VERTICES,
    Graph,
    Graph6Error,
    decode_graph6,
    degree_profile,
    encode_graph6,
    enumerate_labeled,
    labeled_count,
)
from .inequalities import degree_sandwich
from .invariants import independence_number, max_independent_mask, zagreb_m1
from .theorems import (
    check_theorem1,
    check_theorem2,
    check_theorem3,
    lemma1_chvatal_erdos,
    lemma2_chvatal_erdos_traceable,
    lemma4_moon_moser,
    lemma5_jackson,
    t3_bound,
)

CHECKS = ("t1", "t2", "t3", "ce_ham", "ce_trace", "moon", "jackson", "sandwich", "roundtrip")
ALIASES = {"ce": ("ce_ham", "ce_trace"), "all": CHECKS}
WITNESS_CAP = 100
ENUM_CHUNK = 1 << 14
LINE_CHUNK = 4096
HISTOGRAM_BINS = 20


class CorpusError(Exception):
    """Unreadable corpus or malformed record; aborts the sweep."""


def parse_checks(spec: str | Iterable[str]) -> tuple[str, ...]:
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    picked = set()
    for raw in names:
        name = raw.strip().lower()
        if not name:
            continue
        if name in ALIASES:
            picked.update(ALIASES[name])
        elif name in CHECKS:
            picked.add(name)
        else:
            raise ValueError(f"unknown check {raw!r}; choose from {', '.join(CHECKS + tuple(ALIASES))}")
    if not picked:
        raise ValueError("no checks selected")
    return tuple(c for c in CHECKS if c in picked)


# ---------------------------------------------------------------- sources

@dataclass(frozen=True)
class EnumerationSource:
    n: int
    connected_only: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ENUMERATION_VERTICES:
            raise CorpusError(f"enumeration needs 1 <= n <= {MAX_ENUMERATION_VERTICES}")

    @property
    def corpus_id(self) -> str:
        kind = "connected" if self.connected_only else "all"
        return f"enumerate:n={self.n}:{kind}"


@dataclass(frozen=True)
class FileSource:
    path: str

    @property
    def corpus_id(self) -> str:
        return Path(self.path).name

    def lines(self) -> Iterator[tuple[int, str]]:
        opener = gzip.open if str(self.path).endswith(".gz") else open
        try:
            with opener(self.path, "rt", encoding="ascii", newline="") as fh:
                for lineno, line in enumerate(fh, 1):
                    yield lineno, line.rstrip("\r\n")
        except (OSError, UnicodeDecodeError) as exc:
            raise CorpusError(f"cannot read {self.path}: {exc}") from exc


# ---------------------------------------------------------------- tallies

@dataclass
class CheckStats:
    applicable: int = 0
    condition_met: int = 0
    violations: int = 0
    violation_witnesses: list = field(default_factory=list)

    def absorb(self, other: "CheckStats") -> None:
        self.applicable += other.applicable
        self.condition_met += other.condition_met
        self.violations += other.violations
        room = WITNESS_CAP - len(self.violation_witnesses)
        if room > 0:
            self.violation_witnesses.extend(other.violation_witnesses[:room])


@dataclass
class SweepReport:
    corpus_id: str
    checks: tuple[str, ...]
    graphs_scanned: int = 0
    per_check: dict = field(default_factory=dict)
    tightness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return all(s.violations == 0 for s in self.per_check.values())

    def render(self) -> str:
        out = [
            "[sweep]",
            f"corpus_id = {self.corpus_id}",
            f"graphs_scanned = {self.graphs_scanned}",
            f"checks = {','.join(self.checks)}",
            f"status = {'PASS' if self.passed else 'FAIL'}",
            "",
            "[checks]",
            f"{'check':<10} {'applicable':>12} {'condition_met':>14} {'violations':>11}",
        ]
        for name in self.checks:
            s = self.per_check[name]
            out.append(f"{name:<10} {s.applicable:>12} {s.condition_met:>14} {s.violations:>11}")
        for name in self.checks:
            s = self.per_check[name]
            if s.violation_witnesses:
                out.append("")
                out.append(f"[witnesses.{name}]")
                out.extend(s.violation_witnesses)
        if self.tightness is not None:
            out.append("")
            out.append("[tightness]")
            for key, value in self.tightness.items():
                out.append(f"{key} = {value}")
        return "\n".join(out) + "\n"

    def csv(self) -> str:
        rows = ["check,applicable,condition_met,violations"]
        for name in self.checks:
            s = self.per_check[name]
            rows.append(f"{name},{s.applicable},{s.condition_met},{s.violations}")
        return "\n".join(rows) + "\n"


# ---------------------------------------------------------------- evaluation

def evaluate(g: Graph, checks: Sequence[str], record: Optional[str] = None) -> dict:
    """Run ``checks`` on one graph; returns ``{check: (applicable, met, violated)}``."""
    out = {}
    for name in checks:
        out[name] = _EVALUATORS[name](g, record)
    return out


def _eval_t1(g, record):
    v = check_theorem1(g)
    return v.applicable, v.condition_met, v.applicable and not v.consistent


def _eval_t2(g, record):
    v = check_theorem2(g)
    return v.applicable, v.condition_met, v.applicable and not v.consistent


def _eval_t3(g, record):
    if degree_profile(g).delta < 1:
        return False, False, False
    v = check_theorem3(g)
    return True, v.condition_met, not v.consistent


def _eval_ce_ham(g, record):
    if g.n < 3:
        return False, False, False
    r = lemma1_chvatal_erdos(g)
    return True, r.condition, not r.consistent


def _eval_ce_trace(g, record):
    r = lemma2_chvatal_erdos_traceable(g)
    return True, r.condition, not r.consistent


def _eval_moon(g, record):
    r = lemma4_moon_moser(g)
    return r.applicable, r.applicable and r.condition, not r.consistent


def _eval_jackson(g, record):
    r = lemma5_jackson(g)
    return r.applicable, r.applicable and r.actual == r.promised_length, not r.consistent


def _eval_sandwich(g, record):
    mask = max_independent_mask(g)
    s = degree_sandwich(g, mask)
    others = ((1 << g.n) - 1) & ~mask
    split = all(not (g.adj[v] & others) for v in range(g.n) if (others >> v) & 1)
    bad = not (s.lower <= s.e <= s.upper) or (s.tight_lower and s.tight_upper) != split
    return True, s.tight_lower and s.tight_upper, bad


def _eval_roundtrip(g, record):
    text = encode_graph6(g)
    bad = decode_graph6(text) != g
    if record is not None:
        body = record[len(GRAPH6_HEADER):] if record.startswith(GRAPH6_HEADER) else record
        bad = bad or body != text
    return True, False, bad


_EVALUATORS = {
    "t1": _eval_t1,
    "t2": _eval_t2,
    "t3": _eval_t3,
    "ce_ham": _eval_ce_ham,
    "ce_trace": _eval_ce_trace,
    "moon": _eval_moon,
    "jackson": _eval_jackson,
    "sandwich": _eval_sandwich,
    "roundtrip": _eval_roundtrip,
}


def _tally(graphs: Iterable[tuple[Graph, Optional[str]]], checks, want_ratios: bool):
    stats = {c: CheckStats() for c in checks}
    ratios: dict = {}
    scanned = 0
    for g, record in graphs:
        scanned += 1
        witness = None
        for name, (app, met, bad) in evaluate(g, checks, record).items():
            s = stats[name]
            s.applicable += app
            s.condition_met += met
            if bad:
                s.violations += 1
                if len(s.violation_witnesses) < WITNESS_CAP:
                    if witness is None:
                        witness = encode_graph6(g)
                    s.violation_witnesses.append(witness)
        if want_ratios:
            prof = degree_profile(g)
            if prof.delta >= 1:
                bound = t3_bound(g.n, prof.e, prof.delta, prof.Delta, independence_number(g))
                ratio = zagreb_m1(g) / bound
                ratios[ratio] = ratios.get(ratio, 0) + 1
    return scanned, stats, ratios


def _decoded(lines):
    for lineno, text in lines:
        try:
            g = decode_graph6(text)
        except Graph6Error as exc:
            raise CorpusError(f"line {lineno}: {exc}") from None
        yield g, text


def _run_task(task):
    kind, payload, checks, want_ratios = task
    if kind == "enum":
        n, connected_only, lo, hi = payload
        graphs = ((g, None) for g in enumerate_labeled(n, connected_only, lo, hi))
    else:
        graphs = _decoded(payload)
    return _tally(graphs, checks, want_ratios)


def _tasks(source, checks, want_ratios):
    if isinstance(source, EnumerationSource):
        total = labeled_count(source.n)
        for lo in range(0, total, ENUM_CHUNK):
            yield "enum", (source.n, source.connected_only, lo, lo + ENUM_CHUNK), checks, want_ratios
    else:
        batch = []
        for item in source.lines():
            batch.append(item)
            if len(batch) == LINE_CHUNK:
                yield "lines", batch, checks, want_ratios
                batch = []
        if batch:
            yield "lines", batch, checks, want_ratios


def _execute(source, checks, jobs, want_ratios):
    report = SweepReport(source.corpus_id, tuple(checks))
    report.per_check = {c: CheckStats() for c in checks}
    ratios: dict = {}
    tasks = _tasks(source, tuple(checks), want_ratios)
    if jobs <= 1:
        results = map(_run_task, tasks)
        pool = None
    else:
        pool = multiprocessing.get_context("fork").Pool(jobs)
        results = pool.imap(_run_task, tasks)
    try:
        for scanned, stats, part_ratios in results:
            report.graphs_scanned += scanned
            for name in checks:
                report.per_check[name].absorb(stats[name])
            for r, c in part_ratios.items():
                ratios[r] = ratios.get(r, 0) + c
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    return report, ratios


def run_sweep(source, checks: Iterable[str] | str, jobs: int = 1) -> SweepReport:
    """Evaluate every graph of ``source`` against ``checks``."""
    checks = parse_checks(checks)
    report, _ = _execute(source, checks, jobs, False)
    return report


# ---------------------------------------------------------------- tightness

def decimal_string(x: Fraction, places: int = 6) -> str:
    """Truncated decimal rendering of a nonnegative rational."""
    scaled = x.numerator * 10 ** places // x.denominator
    whole, frac = divmod(scaled, 10 ** places)
    return f"{whole}.{frac:0{places}d}"


def tightness_histogram(ratios: dict, bins: int = HISTOGRAM_BINS) -> dict:
    """Bucket ``M1 / bound`` ratios into ``[i/bins, (i+1)/bins)`` plus an exact-1 bucket."""
    hist: dict = {}
    counts = [0] * bins
    exact = above = 0
    for r, c in ratios.items():
        if r == 1:
            exact += c
        elif r > 1:
            above += c
        else:
            counts[int(r * bins)] += c
    total = sum(ratios.values())
    hist["graphs_bounded"] = total
    if ratios:
        hist["ratio_min"] = decimal_string(min(ratios))
        hist["ratio_max"] = decimal_string(max(ratios))
    for i, c in enumerate(counts):
        if c:
            lo = decimal_string(Fraction(i, bins), 2)
            hi = decimal_string(Fraction(i + 1, bins), 2)
            hist[f"bucket[{lo},{hi})"] = c
    hist["bucket[=1]"] = exact
    hist["above_bound"] = above
    return hist


def run_stats(source, jobs: int = 1) -> SweepReport:
    """Zagreb upper-bound tightness statistics (also runs the ``t3`` check)."""
    report, ratios = _execute(source, ("t3",), jobs, True)
    report.tightness = tightness_histogram(ratios)
    return report


# ---------------------------------------------------------------- extremal witnesses

EXTREMAL_KINDS = ("kkp1", "kkp2", "t3family")


def emit_extremal(kind: str, params: Sequence[int]) -> list[str]:
    """graph6 lines for the named extremal construction."""
    params = list(params)
    if kind in ("kkp1", "kkp2"):
        if len(params) != 1:
            raise ValueError(f"{kind} takes one parameter k")
        k = params[0]
        g = constructors.complete_bipartite(k, k + (1 if kind == "kkp1" else 2))
    elif kind == "t3family":
        if len(params) != 3:
            raise ValueError("t3family takes n,beta,delta")
        g = constructors.t3_equality_graph(constructors.EqualityFamilySpec(*params))
    else:
        raise ValueError(f"unknown kind {kind!r}; choose from {', '.join(EXTREMAL_KINDS)}")
    return [encode_graph6(g)]
