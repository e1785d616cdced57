"""Free and boolean cumulants as weighted sums over partition families.

With kappa the classical cumulants of a moment sequence, the multiplicative
weight kappa_pi = prod over blocks of kappa_{|B|} satisfies

    free cumulant    c_n = sum of kappa_pi over connected partitions of [n]
    boolean cumulant h_n = sum of kappa_pi over irreducible partitions of [n]
    also             h_n = sum of c_pi over noncrossing irreducible partitions

and, refining the first line, the weight of a noncrossing pi collects exactly
the kappa_sigma of the sigma whose noncrossing closure is pi.  Everything in
this module streams over enumerated families (tallied once per family), so
these sums stay independent from the lattice recursions they are checked
against.  ``run_identity_checks`` exercises the identities on seeded random
rational inputs and reports exact equality.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .cumulants import (
    Sequence,
    cumulant_to_moment,
    moment_to_cumulant,
    profile_weighted_sum,
)
from .partitions import SetPartition, enumerate_partitions, family_profile_counts
from .rings import LambdaPoly, scalar_to_json

__all__ = [
    "block_count_polynomial",
    "boolean_from_classical",
    "boolean_from_free",
    "closure_fiber_sum",
    "count_connected",
    "count_connected_pairings",
    "dobinski",
    "free_from_classical",
    "random_classical_sequence",
    "run_identity_checks",
]


def _weighted_family_sum(kind: str, seq: Sequence, n: int):
    if not 1 <= n <= seq.order:
        raise ValueError(f"n={n} outside the sequence order {seq.order}")
    return profile_weighted_sum(family_profile_counts(n, kind), seq.values)


def free_from_classical(kappa: Sequence, n: int):
    """n-th free cumulant as the kappa-weighted sum over connected partitions."""
    if kappa.flavor != "classical":
        raise ValueError(f"need classical cumulants, got {kappa.flavor!r}")
    return _weighted_family_sum("connected", kappa, n)


def boolean_from_classical(kappa: Sequence, n: int):
    """n-th boolean cumulant as the kappa-weighted sum over irreducible partitions."""
    if kappa.flavor != "classical":
        raise ValueError(f"need classical cumulants, got {kappa.flavor!r}")
    return _weighted_family_sum("irreducible", kappa, n)


def boolean_from_free(free: Sequence, n: int):
    """n-th boolean cumulant as the free-cumulant-weighted sum over
    noncrossing irreducible partitions."""
    if free.flavor != "free":
        raise ValueError(f"need free cumulants, got {free.flavor!r}")
    return _weighted_family_sum("nc-irreducible", free, n)


def closure_fiber_sum(pi: SetPartition, kappa: Sequence):
    """Sum of kappa_sigma over all sigma whose noncrossing closure is pi.

    pi must be noncrossing.  Summed over the noncrossing lattice these fibers
    partition all partitions, and per fiber the sum is the connected-sum
    weight taken blockwise on pi.
    """
    if not pi.is_noncrossing():
        raise ValueError("closure fibers are indexed by noncrossing partitions")
    if pi.n > kappa.order:
        raise ValueError(f"need cumulants up to order {pi.n}")
    if kappa.flavor != "classical":
        raise ValueError(f"need classical cumulants, got {kappa.flavor!r}")
    total = Fraction(0)
    for sigma in enumerate_partitions(pi.n, "all"):
        if sigma.closure() != pi:
            continue
        term = Fraction(1)
        for s in sigma.block_sizes():
            term = term * kappa.values[s - 1]
        total = total + term
    return total


def count_connected(n: int) -> int:
    """Number of connected partitions of [n], by direct enumeration."""
    return sum(1 for _ in enumerate_partitions(n, "connected"))


def count_connected_pairings(n: int) -> int:
    """Number of connected pairings of [n] (n even), by direct enumeration."""
    return sum(1 for _ in enumerate_partitions(n, "connected-pairing"))


def block_count_polynomial(n: int) -> LambdaPoly:
    """Sum of λ^(number of blocks) over connected partitions of [n].

    Equals the n-th free cumulant of the poisson law with formal rate λ.
    """
    coeffs: dict[int, int] = {}
    for profile, count in family_profile_counts(n, "connected"):
        k = len(profile)
        coeffs[k] = coeffs.get(k, 0) + count
    top = max(coeffs)
    return LambdaPoly(tuple(Fraction(coeffs.get(k, 0)) for k in range(top + 1)))


def dobinski(n: int, terms: int) -> float:
    """Floating partial sum e^-1 * sum_{k=0}^{terms} k^n / k!.

    Converges to the number of partitions of [n]; the one approximate
    computation in this package.
    """
    if n < 0 or terms < 0:
        raise ValueError("n and terms must be nonnegative")
    total = 0.0
    for k in range(terms + 1):
        total += k**n / math.factorial(k)
    return total * math.exp(-1.0)


def random_classical_sequence(order: int, seed: int, bound: int = 100) -> Sequence:
    """Seeded random classical cumulants with numerators and denominators
    bounded by ``bound``; the same seed always gives the same sequence."""
    rng = random.Random(seed)
    vals = tuple(
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(order)
    )
    return Sequence("classical", vals)


def run_identity_checks(max_n: int, trials: int = 5, seed: int = 0, tamper: bool = False) -> list:
    """Exercise the three weighted-sum identities on random rational inputs.

    For each trial a seeded classical cumulant sequence is drawn, its moments
    are induced, and for every n <= max_n the connected, irreducible and
    noncrossing-irreducible sums are compared exactly against the lattice
    transforms.  Returns one JSON-ready dict per comparison; ``tamper``
    deliberately corrupts the last one (a hook for testing failure handling).
    """
    if max_n < 1:
        raise ValueError("max_n must be positive")
    if trials < 1:
        raise ValueError("trials must be positive")
    raw = []
    for t in range(trials):
        trial_seed = seed + t
        kappa = random_classical_sequence(max_n, trial_seed)
        m = cumulant_to_moment(kappa)
        free = moment_to_cumulant(m, "free")
        boolean = moment_to_cumulant(m, "boolean")
        for n in range(1, max_n + 1):
            raw.append(
                ("free-vs-connected-sum", n, trial_seed,
                 free.values[n - 1], free_from_classical(kappa, n))
            )
            raw.append(
                ("boolean-vs-irreducible-sum", n, trial_seed,
                 boolean.values[n - 1], boolean_from_classical(kappa, n))
            )
            raw.append(
                ("boolean-vs-nc-irreducible-sum", n, trial_seed,
                 boolean.values[n - 1], boolean_from_free(free, n))
            )
    if tamper:
        name, n, s, lhs, rhs = raw[-1]
        raw[-1] = (name, n, s, lhs, rhs + 1)
    return [
        {
            "identity": name,
            "n": n,
            "seed": s,
            "lhs": scalar_to_json(lhs),
            "rhs": scalar_to_json(rhs),
            "equal": lhs == rhs,
        }
        for name, n, s, lhs, rhs in raw
    ]
