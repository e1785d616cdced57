"""Independent oracles and lattice tooling for the test suite.

Everything here recomputes facts from first principles (recurrences,
quadruple scans, the raw Moebius recursion) so the package under test never
checks itself against itself.
"""

from fractions import Fraction
from itertools import combinations

from cumulattice.incidence import LATTICES, moebius
from cumulattice.partitions import SetPartition, enumerate_partitions, leq


def bell_numbers(limit):
    """B_1 .. B_limit by the Bell triangle."""
    row = [1]
    out = [row[-1]]
    for _ in range(limit - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[-1])
    return out


def catalan_numbers(limit):
    """C_1 .. C_limit by the convolution recurrence."""
    c = [1]
    for n in range(1, limit + 1):
        c.append(sum(c[i] * c[n - 1 - i] for i in range(n)))
    return c[1:]


def double_factorial_odd(k):
    """(2k - 1)!! = number of pairings of a 2k-element set."""
    out = 1
    for i in range(1, 2 * k, 2):
        out *= i
    return out


def noncrossing_bruteforce(p):
    """Quadruple scan straight off the definition."""
    code = p.code
    n = len(code)
    for a in range(n):
        for b in range(a + 1, n):
            if code[b] == code[a]:
                continue
            for c in range(b + 1, n):
                if code[c] != code[a]:
                    continue
                for d in range(c + 1, n):
                    if code[d] == code[b]:
                        return False
    return True


def connected_bruteforce(p):
    """Definitional check: no proper subinterval is a union of blocks."""
    n = p.n
    blocks = [set(b) for b in p.blocks()]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i == 1 and j == n:
                continue
            window = set(range(i, j + 1))
            if all(b <= window or not (b & window) for b in blocks):
                return False
    return True


def blocks_cross_bruteforce(b1, b2):
    """Two blocks cross iff some quadruple alternates between them."""
    for x1, x2 in combinations(sorted(b1), 2):
        for y1, y2 in combinations(sorted(b2), 2):
            if x1 < y1 < x2 < y2 or y1 < x1 < y2 < x2:
                return True
    return False


def crossing_components(p):
    """Connected components of the blocks-cross-blocks graph, as block index sets."""
    blocks = p.blocks()
    k = len(blocks)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(k):
        for j in range(i + 1, k):
            if blocks_cross_bruteforce(blocks[i], blocks[j]):
                parent[find(i)] = find(j)
    comps = {}
    for i in range(k):
        comps.setdefault(find(i), set()).add(i)
    return list(comps.values())


def mu_recursion_oracle(lattice, bottom, top):
    """The Moebius recursion evaluated directly over the chosen lattice,
    with no segment-type sharing (memo local to the call)."""
    members = [
        z
        for z in enumerate_partitions(bottom.n, LATTICES[lattice])
        if leq(bottom, z) and leq(z, top)
    ]
    memo = {}

    def mu(b, t):
        if b == t:
            return Fraction(1)
        key = (b.code, t.code)
        if key not in memo:
            memo[key] = -sum(
                mu(b, z) for z in members if z != t and leq(b, z) and leq(z, t)
            )
        return memo[key]

    return mu(bottom, top)


def initial_elements_image(p):
    """First elements of all blocks except the one containing 1."""
    return frozenset(b[0] for b in p.blocks()[1:])


def zeta_mu_exhaustive(n, lattice):
    """Check (zeta * mu) = (mu * zeta) = delta on every segment of the lattice.

    Sums run over bitmask-encoded intervals with the package's mu values, so
    the whole lattice stays tractable at n = 7.
    """
    members = list(enumerate_partitions(n, LATTICES[lattice]))
    size = len(members)
    below = [0] * size  # bit j of below[i]: members[j] <= members[i]
    for i, p in enumerate(members):
        for j, q in enumerate(members):
            if leq(q, p):
                below[i] |= 1 << j
    above = [0] * size
    for i in range(size):
        mask = below[i]
        while mask:
            lsb = mask & -mask
            j = lsb.bit_length() - 1
            mask ^= lsb
            above[j] |= 1 << i
    mu_val = {}
    for i, p in enumerate(members):
        mask = above[i]
        while mask:
            lsb = mask & -mask
            j = lsb.bit_length() - 1
            mask ^= lsb
            mu_val[(i, j)] = int(moebius(lattice, p, members[j]))
    for j in range(size):
        outer = below[j]
        while outer:
            lsb = outer & -outer
            i = lsb.bit_length() - 1
            outer ^= lsb
            segment = below[j] & above[i]
            zeta_mu = 0
            mu_zeta = 0
            inner = segment
            while inner:
                l2 = inner & -inner
                k = l2.bit_length() - 1
                inner ^= l2
                zeta_mu += mu_val[(k, j)]
                mu_zeta += mu_val[(i, k)]
            expect = 1 if i == j else 0
            if zeta_mu != expect or mu_zeta != expect:
                return False
    return True
