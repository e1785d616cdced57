"""Set partitions of {1, .., n}: canonical codes, family enumeration, refinement
order, and the noncrossing closure.

A partition is stored as its restricted growth string: element i carries the
label of its block, labels numbered by first appearance starting at 0.  That
makes equality, hashing and lexicographic enumeration plain tuple work, and
blocks are recovered on demand.  Everything here is exact and pure; the only
sizes that matter are desk scale (n <= 14 or so), so clarity wins over
constant-factor tricks.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "FAMILY_KINDS",
    "LATTICE_KINDS",
    "PAIRING_KINDS",
    "SetPartition",
    "enumerate_partitions",
    "family_profile_counts",
    "lattice_profile_counts",
    "leq",
]

FAMILY_KINDS = (
    "all",
    "noncrossing",
    "interval",
    "pairing",
    "connected",
    "irreducible",
    "connected-pairing",
    "nc-irreducible",
)

PAIRING_KINDS = ("pairing", "connected-pairing")

# the three families that are lattices under refinement
LATTICE_KINDS = ("all", "noncrossing", "interval")


def _code_noncrossing(code) -> bool:
    # Stack discipline: a label may recur only while it sits on top of the
    # stack of currently open blocks; blocks close at their last element.
    last = {}
    for i, label in enumerate(code):
        last[label] = i
    stack = []
    seen = set()
    for i, label in enumerate(code):
        if label in seen:
            if stack[-1] != label:
                return False
        else:
            seen.add(label)
            stack.append(label)
        if last[label] == i:
            stack.pop()
    return True


def _blocks_cross(a, b) -> bool:
    # a, b sorted element lists; they cross iff membership along the sorted
    # union switches sides at least three times (nesting switches twice).
    i = j = 0
    side = 0
    switches = 0
    while i < len(a) or j < len(b):
        if j == len(b) or (i < len(a) and a[i] < b[j]):
            cur = 1
            i += 1
        else:
            cur = 2
            j += 1
        if cur != side:
            if side:
                switches += 1
            side = cur
    return switches >= 3


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, .., n} in canonical restricted-growth encoding."""

    code: tuple[int, ...]

    def __post_init__(self):
        code = tuple(self.code)
        object.__setattr__(self, "code", code)
        if not code:
            raise ValueError("a partition needs at least one element")
        top = -1
        for label in code:
            if not isinstance(label, int) or label < 0 or label > top + 1:
                raise ValueError(f"not a restricted growth string: {code!r}")
            if label == top + 1:
                top += 1

    @property
    def n(self) -> int:
        return len(self.code)

    def block_count(self) -> int:
        return max(self.code) + 1

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as 1-based element tuples, ordered by least element."""
        out = [[] for _ in range(self.block_count())]
        for i, label in enumerate(self.code):
            out[label].append(i + 1)
        return tuple(tuple(b) for b in out)

    def block_sizes(self) -> tuple[int, ...]:
        """Multiset of block sizes, ascending."""
        return tuple(sorted(Counter(self.code).values()))

    @classmethod
    def from_blocks(cls, blocks) -> "SetPartition":
        owner = {}
        for bi, block in enumerate(blocks):
            for e in block:
                if e in owner:
                    raise ValueError(f"element {e} appears in two blocks")
                owner[e] = bi
        n = len(owner)
        if set(owner) != set(range(1, n + 1)):
            raise ValueError("blocks must cover 1..n exactly")
        labels: dict[int, int] = {}
        code = []
        for i in range(1, n + 1):
            code.append(labels.setdefault(owner[i], len(labels)))
        return cls(tuple(code))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse the slash/comma syntax, e.g. '1,3/2'.  Whitespace is ignored."""
        blocks = []
        for part in str(text).split("/"):
            toks = [t.strip() for t in part.split(",")]
            toks = [t for t in toks if t]
            if not toks:
                raise ValueError(f"empty block in {text!r}")
            try:
                blocks.append([int(t) for t in toks])
            except ValueError:
                raise ValueError(f"bad element in {text!r}") from None
        return cls.from_blocks(blocks)

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        """The finest partition, every element alone."""
        return cls(tuple(range(n)))

    @classmethod
    def one_block(cls, n: int) -> "SetPartition":
        """The coarsest partition, everything together."""
        return cls((0,) * n)

    def __str__(self):
        return "/".join(",".join(str(e) for e in b) for b in self.blocks())

    def __repr__(self):
        return f"SetPartition.parse({str(self)!r})"

    def refines(self, other: "SetPartition") -> bool:
        """True when every block of self lies inside a block of other."""
        if self.n != other.n:
            raise ValueError("partitions of different ground sets are incomparable")
        image = [-1] * (max(self.code) + 1)
        for la, lb in zip(self.code, other.code):
            known = image[la]
            if known < 0:
                image[la] = lb
            elif known != lb:
                return False
        return True

    def is_noncrossing(self) -> bool:
        """No a < b < c < d with a, c in one block and b, d in another."""
        return _code_noncrossing(self.code)

    def is_connected(self) -> bool:
        """No proper subinterval of {1, .., n} is a union of blocks.

        Singleton subintervals count, so 1,3/2 is already disconnected
        (the interval {2} is a block union).  The one-element partition is
        connected.
        """
        n = len(self.code)
        if n == 1:
            return True
        code = self.code
        k = max(code) + 1
        bmin = [0] * k
        bmax = [0] * k
        for i, label in enumerate(code):
            pos = i + 1
            if bmin[label] == 0:
                bmin[label] = pos
            bmax[label] = pos
        for start in range(1, n + 1):
            hi = start
            j = start
            ok = True
            while j <= hi:
                label = code[j - 1]
                if bmin[label] < start:
                    ok = False
                    break
                if bmax[label] > hi:
                    hi = bmax[label]
                j += 1
            if ok and (start > 1 or hi < n):
                return False
        return True

    def closure(self) -> "SetPartition":
        """Least noncrossing coarsening: merge crossing blocks to a fixpoint."""
        blocks = [list(b) for b in self.blocks()]
        merged = True
        while merged:
            merged = False
            for i in range(len(blocks)):
                for j in range(i + 1, len(blocks)):
                    if _blocks_cross(blocks[i], blocks[j]):
                        blocks[i] = sorted(blocks[i] + blocks[j])
                        del blocks[j]
                        merged = True
                        break
                if merged:
                    break
        return SetPartition.from_blocks(blocks)

    def is_irreducible(self) -> bool:
        """1 and n share a block of the noncrossing closure."""
        if self.code[0] == self.code[-1]:
            return True
        c = self.closure().code
        return c[0] == c[-1]


def leq(a: SetPartition, b: SetPartition) -> bool:
    """Refinement order: a <= b iff every block of a lies inside a block of b."""
    return a.refines(b)


def _trusted(code: tuple[int, ...]) -> SetPartition:
    # construction bypass for enumeration loops; code is known to be valid
    p = object.__new__(SetPartition)
    object.__setattr__(p, "code", code)
    return p


def _rgs_codes(n: int) -> Iterator[tuple[int, ...]]:
    # all restricted growth strings of length n, lexicographically
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = m[i - 1] if m[i - 1] >= a[i] else a[i]
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[j - 1]


def _gen_all(n):
    for code in _rgs_codes(n):
        yield _trusted(code)


def _gen_noncrossing(n):
    # Depth-first over codes; crossing prefixes can never recover, and any
    # noncrossing prefix extends (with singletons), so pruning is exact.
    code = [0] * n

    def rec(i, top):
        if i == n:
            yield _trusted(tuple(code))
            return
        for label in range(top + 2):
            code[i] = label
            if label <= top and not _code_noncrossing(code[: i + 1]):
                continue
            yield from rec(i + 1, top if label <= top else top + 1)

    return rec(1, 0) if n > 1 else iter([_trusted((0,))])


def _gen_interval(n):
    # blocks are consecutive runs: each element either extends the last block
    # or opens a new one
    code = [0] * n

    def rec(i, top):
        if i == n:
            yield _trusted(tuple(code))
            return
        code[i] = top
        yield from rec(i + 1, top)
        code[i] = top + 1
        yield from rec(i + 1, top + 1)

    return rec(1, 0) if n > 1 else iter([_trusted((0,))])


def _gen_pairing(n):
    # all blocks of size two; prune on the number of open blocks
    code = [0] * n

    def rec(i, open_labels, top):
        rem = n - i
        if len(open_labels) > rem or (rem - len(open_labels)) % 2:
            return
        if i == n:
            yield _trusted(tuple(code))
            return
        for label in open_labels:
            code[i] = label
            yield from rec(i + 1, [x for x in open_labels if x != label], top)
        code[i] = top + 1
        yield from rec(i + 1, open_labels + [top + 1], top + 1)

    return rec(1, [0], 0)


def _gen_connected(n):
    return (p for p in _gen_all(n) if p.is_connected())


def _gen_irreducible(n):
    return (p for p in _gen_all(n) if p.is_irreducible())


def _gen_connected_pairing(n):
    return (p for p in _gen_pairing(n) if p.is_connected())


def _gen_nc_irreducible(n):
    # noncrossing partitions equal their closure, so irreducible just means
    # 1 and n share a block
    return (p for p in _gen_noncrossing(n) if p.code[0] == p.code[-1])


_FAMILY_GENERATORS = {
    "all": _gen_all,
    "noncrossing": _gen_noncrossing,
    "interval": _gen_interval,
    "pairing": _gen_pairing,
    "connected": _gen_connected,
    "irreducible": _gen_irreducible,
    "connected-pairing": _gen_connected_pairing,
    "nc-irreducible": _gen_nc_irreducible,
}


def enumerate_partitions(n: int, kind: str = "all") -> Iterator[SetPartition]:
    """Yield one family over {1, .., n}, each member exactly once, in
    lexicographic order of codes."""
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    if kind in PAIRING_KINDS and n % 2:
        raise ValueError("pairings need an even ground set")
    return _FAMILY_GENERATORS[kind](n)


@functools.lru_cache(maxsize=None)
def family_profile_counts(n: int, kind: str) -> tuple:
    """Tally of block-size multisets over one family, by streaming enumeration.

    Returns sorted ((sizes ascending), count) pairs.  Weighted sums over a
    family only see block sizes, so this collapses the enumeration once per
    (n, kind) instead of once per sum.
    """
    tally = Counter(p.block_sizes() for p in enumerate_partitions(n, kind))
    return tuple(sorted(tally.items()))


@functools.lru_cache(maxsize=None)
def _integer_partitions(n: int) -> tuple:
    # multisets of positive integers summing to n, each ascending
    out = []

    def rec(rest, least, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(least, rest + 1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, 1, [])
    return tuple(out)


@functools.lru_cache(maxsize=None)
def lattice_profile_counts(n: int, kind: str) -> tuple:
    """Closed-form tally of block-size multisets for the three lattices.

    Counts of partitions with k_j blocks of size j (k blocks total):

    * all:          n! / prod_j (j!)^k_j k_j!
    * noncrossing:  n! / ((n - k + 1)! prod_j k_j!)
    * interval:     k! / prod_j k_j!        (compositions of n)

    Agrees with ``family_profile_counts`` wherever both run (checked in the
    test suite); unlike enumeration it stays fast at every order this
    package accepts.
    """
    if kind not in LATTICE_KINDS:
        raise ValueError(f"not a lattice kind: {kind!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    out = []
    for profile in _integer_partitions(n):
        mult = Counter(profile)
        k = len(profile)
        if kind == "all":
            denom = 1
            for j, kj in mult.items():
                denom *= math.factorial(j) ** kj * math.factorial(kj)
            count = math.factorial(n) // denom
        elif kind == "noncrossing":
            denom = math.factorial(n - k + 1)
            for kj in mult.values():
                denom *= math.factorial(kj)
            count = math.factorial(n) // denom
        else:
            denom = 1
            for kj in mult.values():
                denom *= math.factorial(kj)
            count = math.factorial(k) // denom
        out.append((profile, count))
    return tuple(out)
