"""Incidence algebra of the partition lattices.

Functions live on comparable pairs (segments) of one of three lattices:
"full" (all partitions), "noncrossing", "interval".  Convolution is

    (f * g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)

and the Moebius function is the convolution inverse of zeta.  On the full
lattice a segment [x, y] factors into one atomic segment per block of y, so
mu only depends on how many y-blocks contain j blocks of x; that profile is
the SegmentType and mu is memoised through it.  The two sublattices get a
plain value cache keyed by codes.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    SetPartition,
    enumerate_partitions,
    lattice_profile_counts,
    leq,
)
from .rings import as_scalar

__all__ = [
    "LATTICES",
    "IntervalFunction",
    "MultiplicativeFunction",
    "SegmentType",
    "convolve",
    "delta",
    "interval_members",
    "moebius",
    "moebius_function",
    "moebius_invert",
    "segment_type",
    "zeta",
    "zeta_transform",
]

# lattice name -> enumeration family
LATTICES = {"full": "all", "noncrossing": "noncrossing", "interval": "interval"}


def _check_lattice(lattice: str):
    if lattice not in LATTICES:
        raise ValueError(f"unknown lattice {lattice!r}")


def _check_segment(bottom: SetPartition, top: SetPartition):
    if not leq(bottom, top):
        raise ValueError(f"{bottom!r} does not refine {top!r}")


def interval_members(bottom: SetPartition, top: SetPartition, lattice: str = "full") -> list:
    """All z with bottom <= z <= top, in enumeration order."""
    _check_lattice(lattice)
    _check_segment(bottom, top)
    return [
        z
        for z in enumerate_partitions(bottom.n, LATTICES[lattice])
        if leq(bottom, z) and leq(z, top)
    ]


class IntervalFunction:
    """A scalar function on the segments of one lattice."""

    __slots__ = ("lattice", "fn")

    def __init__(self, lattice: str, fn):
        _check_lattice(lattice)
        self.lattice = lattice
        self.fn = fn

    def __call__(self, bottom: SetPartition, top: SetPartition):
        _check_segment(bottom, top)
        return self.fn(bottom, top)


def zeta(lattice: str = "full") -> IntervalFunction:
    """Constant 1 on every segment."""
    return IntervalFunction(lattice, lambda b, t: Fraction(1))


def delta(lattice: str = "full") -> IntervalFunction:
    """Convolution identity: 1 on trivial segments, else 0."""
    return IntervalFunction(lattice, lambda b, t: Fraction(1 if b == t else 0))


def moebius_function(lattice: str = "full") -> IntervalFunction:
    return IntervalFunction(lattice, lambda b, t: moebius(lattice, b, t))


def convolve(f: IntervalFunction, g: IntervalFunction, bottom: SetPartition, top: SetPartition):
    """(f * g)(bottom, top), summing over the segment's members."""
    if f.lattice != g.lattice:
        raise ValueError("convolution needs both functions on the same lattice")
    total = Fraction(0)
    for z in interval_members(bottom, top, f.lattice):
        total = total + f.fn(bottom, z) * g.fn(z, top)
    return total


@dataclass(frozen=True)
class SegmentType:
    """Exponent vector of a full-lattice segment: exponents[j-1] tops blocks
    containing exactly j bottom blocks."""

    exponents: tuple[int, ...]

    def bottom_blocks(self) -> int:
        return sum((j + 1) * k for j, k in enumerate(self.exponents))

    def top_blocks(self) -> int:
        return sum(self.exponents)


def segment_type(bottom: SetPartition, top: SetPartition) -> SegmentType:
    """How the blocks of bottom distribute over the blocks of top."""
    _check_segment(bottom, top)
    inner = [0] * (max(top.code) + 1)
    seen = set()
    for lb, lt in zip(bottom.code, top.code):
        if lb not in seen:
            seen.add(lb)
            inner[lt] += 1
    tally = Counter(inner)
    width = max(tally)
    return SegmentType(tuple(tally.get(j, 0) for j in range(1, width + 1)))


@functools.lru_cache(maxsize=None)
def _mu_atom(j: int) -> Fraction:
    # mu from the finest to the coarsest partition of a j-element set, by the
    # recursion mu(x, y) = -sum of mu(x, z) over x <= z < y; intermediate
    # values only depend on block-size profiles.
    if j == 1:
        return Fraction(1)
    total = Fraction(0)
    for profile, count in lattice_profile_counts(j, "all"):
        if profile == (j,):
            continue
        term = Fraction(count)
        for s in profile:
            term *= _mu_atom(s)
        total += term
    return -total


_MU_CACHE: dict[tuple, Fraction] = {}


def moebius(lattice: str, bottom: SetPartition, top: SetPartition) -> Fraction:
    """Moebius function of the chosen lattice on the segment [bottom, top]."""
    _check_lattice(lattice)
    _check_segment(bottom, top)
    if lattice == "full":
        out = Fraction(1)
        for j, k in enumerate(segment_type(bottom, top).exponents, start=1):
            if k:
                out *= _mu_atom(j) ** k
        return out
    key = (lattice, bottom.code, top.code)
    hit = _MU_CACHE.get(key)
    if hit is not None:
        return hit
    # one bottom-up sweep fills every value with this bottom inside [bottom, top]
    members = interval_members(bottom, top, lattice)
    members.sort(key=lambda p: -max(p.code))  # proper coarsening drops block count
    done: list[tuple[SetPartition, Fraction]] = []
    for z in members:
        if z == bottom:
            v = Fraction(1)
        else:
            v = -sum(val for w, val in done if leq(w, z))
        done.append((z, v))
        _MU_CACHE[(lattice, bottom.code, z.code)] = v
    return _MU_CACHE[key]


class MultiplicativeFunction:
    """Segment function on the full lattice determined by one value per size.

    The value on [bottom, top] is the product over blocks of top of
    values[j - 1], where j counts the bottom blocks inside.  Evaluating at a
    partition means the segment from the finest partition up to it, which
    turns the values into a block-size weight.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(as_scalar(v) for v in values)
        if not vals:
            raise ValueError("need at least one value")
        self.values = vals

    def __call__(self, bottom: SetPartition, top: SetPartition):
        st = segment_type(bottom, top)
        if len(st.exponents) > len(self.values):
            raise ValueError("segment has wider blocks than supplied values")
        out = Fraction(1)
        for j, k in enumerate(st.exponents, start=1):
            for _ in range(k):
                out = out * self.values[j - 1]
        return out

    def at_partition(self, pi: SetPartition):
        """Value on the segment from the finest partition to pi."""
        sizes = pi.block_sizes()
        if sizes[-1] > len(self.values):
            raise ValueError("partition has wider blocks than supplied values")
        out = Fraction(1)
        for s in sizes:
            out = out * self.values[s - 1]
        return out


def _complete_values(values) -> tuple[int, dict]:
    if not values:
        raise ValueError("empty value table")
    n = next(iter(values)).n
    table = {}
    for p, v in values.items():
        if p.n != n:
            raise ValueError("values mix ground sets")
        table[p] = as_scalar(v)
    return n, table


def moebius_invert(values: dict, direction: str, lattice: str = "full") -> dict:
    """Invert a zeta transform over one lattice.

    direction "down": g(x) = sum over y <= x of f(y) mu(y, x)
    direction "up":   g(x) = sum over y >= x of mu(x, y) f(y)

    ``values`` must cover the whole lattice for its ground set.
    """
    _check_lattice(lattice)
    if direction not in ("down", "up"):
        raise ValueError(f"unknown direction {direction!r}")
    n, table = _complete_values(values)
    members = list(enumerate_partitions(n, LATTICES[lattice]))
    for m in members:
        if m not in table:
            raise ValueError(f"missing value at {m!r}")
    out = {}
    for x in members:
        if direction == "down":
            out[x] = sum(table[y] * moebius(lattice, y, x) for y in members if leq(y, x))
        else:
            out[x] = sum(moebius(lattice, x, y) * table[y] for y in members if leq(x, y))
    return out


def zeta_transform(values: dict, direction: str, lattice: str = "full") -> dict:
    """Accumulate values over the order: down sums over y <= x, up over y >= x."""
    _check_lattice(lattice)
    if direction not in ("down", "up"):
        raise ValueError(f"unknown direction {direction!r}")
    n, table = _complete_values(values)
    members = list(enumerate_partitions(n, LATTICES[lattice]))
    for m in members:
        if m not in table:
            raise ValueError(f"missing value at {m!r}")
    out = {}
    for x in members:
        if direction == "down":
            out[x] = sum(table[y] for y in members if leq(y, x))
        else:
            out[x] = sum(table[y] for y in members if leq(x, y))
    return out
