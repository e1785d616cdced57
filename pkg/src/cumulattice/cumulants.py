"""Moment and cumulant sequences and the transforms between them.

A ``Sequence`` is v_1 .. v_N tagged with a flavor: raw "moments", or the
cumulants attached to one of the three partition lattices ("classical" for
all partitions, "free" for noncrossing, "boolean" for interval).  The
production transform is the triangular recursion

    k_n = m_n - sum over non-maximal lattice partitions of prod k_{|B|}
    m_n = sum over all lattice partitions of prod k_{|B|}

evaluated through block-size profile counts; it is the inverse pair of the
lattice zeta / Moebius transforms.  Explicit Moebius inversion and the
generating-series routes are also provided so each path can check the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import series as _series
from .incidence import moebius
from .partitions import (
    SetPartition,
    enumerate_partitions,
    lattice_profile_counts,
)
from .rings import as_scalar, scalar_from_json, scalar_to_json

__all__ = [
    "CUMULANT_FLAVORS",
    "FLAVORS",
    "Sequence",
    "convolve_boolean",
    "convolve_classical",
    "convolve_free",
    "cumulant_to_moment",
    "cumulant_to_moment_by_series",
    "dilate",
    "gaussian",
    "moment_to_cumulant",
    "moment_to_cumulant_by_inversion",
    "moment_to_cumulant_by_series",
    "poisson",
    "profile_weighted_sum",
    "transform",
]

FLAVORS = ("moments", "classical", "free", "boolean")
CUMULANT_FLAVORS = ("classical", "free", "boolean")

_LATTICE_OF = {"classical": "all", "free": "noncrossing", "boolean": "interval"}
_INCIDENCE_OF = {"classical": "full", "free": "noncrossing", "boolean": "interval"}


@dataclass(frozen=True)
class Sequence:
    """Values v_1 .. v_N with a flavor tag; v_0 is implicitly 1 for moments."""

    flavor: str
    values: tuple

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        vals = tuple(as_scalar(v) for v in self.values)
        if not vals:
            raise ValueError("a sequence needs at least one value")
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return len(self.values)

    def nth(self, n: int):
        """1-based accessor."""
        if not 1 <= n <= self.order:
            raise ValueError(f"index {n} outside 1..{self.order}")
        return self.values[n - 1]

    def to_json(self) -> list:
        return [scalar_to_json(v) for v in self.values]

    @classmethod
    def from_json(cls, flavor: str, items) -> "Sequence":
        return cls(flavor, tuple(scalar_from_json(v) for v in items))


def _require_flavor(seq: Sequence, flavor: str):
    if seq.flavor != flavor:
        raise ValueError(f"need a {flavor} sequence, got {seq.flavor!r}")


def _require_cumulant_flavor(flavor: str):
    if flavor not in CUMULANT_FLAVORS:
        raise ValueError(f"not a cumulant flavor: {flavor!r}")


def profile_weighted_sum(profile_counts, values, skip=None):
    """Sum of count * prod(values[s-1] for s in profile) over a profile tally."""
    total = Fraction(0)
    for profile, count in profile_counts:
        if profile == skip:
            continue
        term = Fraction(count)
        for s in profile:
            term = term * values[s - 1]
        total = total + term
    return total


def moment_to_cumulant(m: Sequence, flavor: str) -> Sequence:
    """Cumulants of one flavor from moments, by the triangular lattice recursion."""
    _require_flavor(m, "moments")
    _require_cumulant_flavor(flavor)
    kind = _LATTICE_OF[flavor]
    out: list = []
    for n in range(1, m.order + 1):
        pairs = lattice_profile_counts(n, kind)
        acc = m.values[n - 1] - profile_weighted_sum(pairs, out, skip=(n,))
        out.append(acc)
    return Sequence(flavor, tuple(out))


def cumulant_to_moment(k: Sequence) -> Sequence:
    """Moments from cumulants of any flavor: the lattice zeta transform."""
    _require_cumulant_flavor(k.flavor)
    kind = _LATTICE_OF[k.flavor]
    out = tuple(
        profile_weighted_sum(lattice_profile_counts(n, kind), k.values)
        for n in range(1, k.order + 1)
    )
    return Sequence("moments", out)


def moment_to_cumulant_by_inversion(m: Sequence, flavor: str) -> Sequence:
    """Same transform through explicit Moebius inversion; enumeration-priced,
    kept as an independent route for checking."""
    _require_flavor(m, "moments")
    _require_cumulant_flavor(flavor)
    lattice = _INCIDENCE_OF[flavor]
    kind = _LATTICE_OF[flavor]
    out = []
    for n in range(1, m.order + 1):
        top = SetPartition.one_block(n)
        total = Fraction(0)
        for sigma in enumerate_partitions(n, kind):
            term = moebius(lattice, sigma, top)
            for s in sigma.block_sizes():
                term = term * m.values[s - 1]
            total = total + term
        out.append(total)
    return Sequence(flavor, tuple(out))


def moment_to_cumulant_by_series(m: Sequence, flavor: str) -> Sequence:
    """Same transform through generating series."""
    _require_flavor(m, "moments")
    _require_cumulant_flavor(flavor)
    if flavor == "classical":
        k = _series.egf_of(m).log()
        fact = 1
        vals = []
        for n in range(1, m.order + 1):
            fact *= n
            vals.append(k.coeffs[n] * fact)
        return Sequence("classical", tuple(vals))
    mseries = _series.ogf_of(m)
    if flavor == "free":
        return Sequence("free", _series.solve_free(mseries).coeffs[1:])
    inv = mseries.inverse()
    vals = tuple(-c for c in inv.coeffs[1:])  # coefficients of 1 - 1/M
    return Sequence("boolean", vals)


def cumulant_to_moment_by_series(k: Sequence) -> Sequence:
    """Inverse of the series route."""
    _require_cumulant_flavor(k.flavor)
    if k.flavor == "classical":
        fact = 1
        coeffs = [Fraction(0)]
        for n, v in enumerate(k.values, start=1):
            fact *= n
            coeffs.append(v / fact)
        f = _series.FormalPowerSeries(tuple(coeffs)).exp()
        return Sequence("moments", _series.moments_from_egf(f))
    if k.flavor == "free":
        c = _series.FormalPowerSeries((Fraction(1),) + k.values)
        return Sequence("moments", _series.moments_from_ogf(_series.free_moment_series(c)))
    h = _series.FormalPowerSeries((Fraction(0),) + k.values)
    one = _series.FormalPowerSeries.constant(Fraction(1), k.order)
    m = (one - h).inverse()
    return Sequence("moments", _series.moments_from_ogf(m))


def transform(x: Sequence, target: str) -> Sequence:
    """Route any flavor to any other, through moments."""
    if target not in FLAVORS:
        raise ValueError(f"unknown flavor {target!r}")
    if target == x.flavor:
        return x
    m = x if x.flavor == "moments" else cumulant_to_moment(x)
    return m if target == "moments" else moment_to_cumulant(m, target)


def gaussian(order: int) -> Sequence:
    """Classical cumulants of the unit gaussian: k_2 = 1, all else 0."""
    if order < 1:
        raise ValueError("order must be positive")
    vals = tuple(Fraction(1 if n == 2 else 0) for n in range(1, order + 1))
    return Sequence("classical", vals)


def poisson(rate, order: int) -> Sequence:
    """Classical cumulants of a poisson law: every cumulant equals the rate.

    The rate may be rational or the formal parameter λ.
    """
    if order < 1:
        raise ValueError("order must be positive")
    r = as_scalar(rate)
    return Sequence("classical", (r,) * order)


def dilate(x: Sequence, t) -> Sequence:
    """Scale the underlying variable by t: v_n picks up a factor t^n."""
    t = as_scalar(t)
    power = t
    vals = []
    for v in x.values:
        vals.append(power * v)
        power = power * t
    return Sequence(x.flavor, tuple(vals))


def _require_matching_moments(a: Sequence, b: Sequence):
    _require_flavor(a, "moments")
    _require_flavor(b, "moments")
    if a.order != b.order:
        raise ValueError("sequences have different orders")


def convolve_classical(a: Sequence, b: Sequence) -> Sequence:
    """Moments of the classical (independent) sum: product of the EGFs."""
    _require_matching_moments(a, b)
    f = _series.egf_of(a) * _series.egf_of(b)
    return Sequence("moments", _series.moments_from_egf(f))


def convolve_free(a: Sequence, b: Sequence) -> Sequence:
    """Moments of the free sum: free cumulants add."""
    _require_matching_moments(a, b)
    ca = moment_to_cumulant(a, "free")
    cb = moment_to_cumulant(b, "free")
    total = Sequence("free", tuple(x + y for x, y in zip(ca.values, cb.values)))
    return cumulant_to_moment(total)


def convolve_boolean(a: Sequence, b: Sequence) -> Sequence:
    """Moments of the boolean sum: boolean cumulants add."""
    _require_matching_moments(a, b)
    ha = moment_to_cumulant(a, "boolean")
    hb = moment_to_cumulant(b, "boolean")
    total = Sequence("boolean", tuple(x + y for x, y in zip(ha.values, hb.values)))
    return cumulant_to_moment(total)
