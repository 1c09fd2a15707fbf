"""Pólya–Szegő inequality over exact rationals and the degree-sum sandwich."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, GraphError, bits, to_mask


class PolyaSzegoError(ValueError):
    pass


@dataclass(frozen=True)
class PolyaSzegoInstance:
    """Sequences ``a`` and ``b`` boxed by ``a_min <= a_k <= a_max`` and
    ``b_min <= b_k <= b_max`` with all bounds positive."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    a_min: Fraction
    a_max: Fraction
    b_min: Fraction
    b_max: Fraction

    @classmethod
    def of(cls, a: Iterable, b: Iterable, a_min, a_max, b_min, b_max) -> "PolyaSzegoInstance":
        return cls(tuple(map(Fraction, a)), tuple(map(Fraction, b)),
                   Fraction(a_min), Fraction(a_max), Fraction(b_min), Fraction(b_max))

    @property
    def s(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class PolyaSzegoReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    nu: Fraction
    nu_integral: bool
    pattern_match: bool


def _validate(inst: PolyaSzegoInstance) -> None:
    if inst.s < 1 or len(inst.b) != inst.s:
        raise PolyaSzegoError("sequences must be nonempty and of equal length")
    if min(inst.a_min, inst.b_min) <= 0:
        raise PolyaSzegoError("lower bounds must be positive")
    if inst.a_min > inst.a_max or inst.b_min > inst.b_max:
        raise PolyaSzegoError("lower bound exceeds upper bound")
    for k, (x, y) in enumerate(zip(inst.a, inst.b)):
        if not inst.a_min <= x <= inst.a_max:
            raise PolyaSzegoError(f"a[{k}] = {x} outside [{inst.a_min}, {inst.a_max}]")
        if not inst.b_min <= y <= inst.b_max:
            raise PolyaSzegoError(f"b[{k}] = {y} outside [{inst.b_min}, {inst.b_max}]")


def nu_value(a_min, a_max, b_min, b_max, s: int) -> Fraction:
    """Number of ``(a_min, b_max)`` positions in an equality configuration."""
    a_min, a_max, b_min, b_max = map(Fraction, (a_min, a_max, b_min, b_max))
    return a_max * b_min * s / (a_max * b_min + a_min * b_max)


def polya_szego_check(inst: PolyaSzegoInstance) -> PolyaSzegoReport:
    _validate(inst)
    sum_aa = sum(x * x for x in inst.a)
    sum_bb = sum(y * y for y in inst.b)
    sum_ab = sum(x * y for x, y in zip(inst.a, inst.b))
    hi = inst.a_max * inst.b_max
    lo = inst.a_min * inst.b_min
    lhs = sum_aa * sum_bb
    rhs = (hi + lo) ** 2 / (4 * lo * hi) * sum_ab ** 2
    nu = nu_value(inst.a_min, inst.a_max, inst.b_min, inst.b_max, inst.s)
    integral = nu.denominator == 1
    pattern = False
    if integral:
        k = int(nu)
        want = Counter({(inst.a_min, inst.b_max): k})
        want[(inst.a_max, inst.b_min)] += inst.s - k
        pattern = Counter(zip(inst.a, inst.b)) == +want
    return PolyaSzegoReport(lhs, rhs, lhs <= rhs, lhs == rhs, nu, integral, pattern)


def equality_instance(a_min, a_max, b_min, b_max, s: int) -> PolyaSzegoInstance:
    """Instance attaining equality: ``nu`` copies of ``(a_min, b_max)`` followed
    by ``s - nu`` copies of ``(a_max, b_min)``."""
    a_min, a_max, b_min, b_max = map(Fraction, (a_min, a_max, b_min, b_max))
    if min(a_min, b_min) <= 0 or a_min > a_max or b_min > b_max:
        raise PolyaSzegoError("bounds must satisfy 0 < min <= max")
    if s < 1:
        raise PolyaSzegoError("length must be positive")
    nu = nu_value(a_min, a_max, b_min, b_max, s)
    if a_max * b_max == a_min * b_min:
        # degenerate box: every admissible instance is constant
        return PolyaSzegoInstance((a_min,) * s, (b_min,) * s, a_min, a_max, b_min, b_max)
    if nu.denominator != 1:
        raise PolyaSzegoError(f"nu = {nu} is not an integer; no equality instance of length {s}")
    k = int(nu)
    a = (a_min,) * k + (a_max,) * (s - k)
    b = (b_max,) * k + (b_min,) * (s - k)
    return PolyaSzegoInstance(a, b, a_min, a_max, b_min, b_max)


# ---------------------------------------------------------------- degree sums

@dataclass(frozen=True)
class DegreeSandwich:
    lower: int
    e: int
    upper: int
    tight_lower: bool
    tight_upper: bool


def degree_sandwich(g: Graph, independent: Iterable[int] | int) -> DegreeSandwich:
    """Degree sums over an independent set ``I`` and its complement.

    ``independent`` is an iterable of vertices or a vertex bitmask.
    """
    mask = independent if isinstance(independent, int) else to_mask(independent)
    if mask >> g.n:
        raise GraphError("vertex set contains indices outside the graph")
    members = bits(mask)
    for v in members:
        if g.adj[v] & mask:
            raise GraphError("vertex set is not independent")
    degs = [a.bit_count() for a in g.adj]
    lower = sum(degs[v] for v in members)
    total = sum(degs)
    e = total // 2
    upper = total - lower
    return DegreeSandwich(lower, e, upper, lower == e, upper == e)

