"""Truncated formal power series with exact coefficients.

A series carries coefficients a_0 .. a_N for an explicit truncation order N.
Arithmetic never extends an order silently: binary operations truncate to the
smaller operand order, and coefficients beyond the order do not exist.
Coefficients live in the scalar ring of ``rings`` (rationals or polynomials
in λ); every recursion below divides only by integers, so both kinds work.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import as_scalar, is_unit

__all__ = [
    "FormalPowerSeries",
    "egf_of",
    "free_moment_series",
    "moments_from_egf",
    "moments_from_ogf",
    "ogf_of",
    "solve_free",
]

_SCALARS = (int, Fraction)


def _scalar_or_none(x):
    try:
        return as_scalar(x)
    except TypeError:
        return None


class FormalPowerSeries:
    """Coefficients a_0 .. a_N of a series truncated at order N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(as_scalar(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs a constant term")
        self.coeffs = cs

    @classmethod
    def constant(cls, value, order: int) -> "FormalPowerSeries":
        if order < 0:
            raise ValueError("order must be nonnegative")
        return cls((as_scalar(value),) + (Fraction(0),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "FormalPowerSeries":
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return FormalPowerSeries(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"FormalPowerSeries({list(self.coeffs)!r})"

    def __add__(self, other):
        if isinstance(other, FormalPowerSeries):
            n = min(self.order, other.order)
            return FormalPowerSeries(
                tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))
            )
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return FormalPowerSeries((self.coeffs[0] + s,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return FormalPowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, FormalPowerSeries) or _scalar_or_none(other) is not None:
            return self.__add__(-other if isinstance(other, FormalPowerSeries) else -as_scalar(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, FormalPowerSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = []
            for k in range(n + 1):
                acc = a[0] * b[k]
                for i in range(1, k + 1):
                    acc = acc + a[i] * b[k - i]
                out.append(acc)
            return FormalPowerSeries(tuple(out))
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return FormalPowerSeries(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FormalPowerSeries":
        """Reciprocal series; needs an invertible constant term."""
        if not is_unit(self.coeffs[0]):
            raise ValueError("constant term is not invertible")
        n = self.order
        a = self.coeffs
        inv0 = Fraction(1) / a[0]
        out = [inv0]
        for k in range(1, n + 1):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * out[k - i]
            out.append(-inv0 * acc)
        return FormalPowerSeries(tuple(out))

    def compose(self, inner: "FormalPowerSeries") -> "FormalPowerSeries":
        """self(inner(z)); the inner series must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        fc = self.coeffs[: n + 1]
        out = FormalPowerSeries.constant(fc[-1], n)
        for c in reversed(fc[:-1]):
            out = out * g + c
        return out

    def exp(self) -> "FormalPowerSeries":
        """Exponential of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs zero constant term")
        n = self.order
        a = self.coeffs
        out = [Fraction(1)]
        for k in range(1, n + 1):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + (i * a[i]) * out[k - i]
            out.append(acc / k)
        return FormalPowerSeries(tuple(out))

    def log(self) -> "FormalPowerSeries":
        """Logarithm of a series with constant term one."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term one")
        n = self.order
        a = self.coeffs
        out = [Fraction(0)]
        for k in range(1, n + 1):
            acc = a[k] * k
            for i in range(1, k):
                acc = acc - (i * out[i]) * a[k - i]
            out.append(acc / k)
        return FormalPowerSeries(tuple(out))


def _values_of(seq) -> tuple:
    # accept a flavored sequence (must be moments) or any iterable of scalars
    flavor = getattr(seq, "flavor", None)
    if flavor is not None:
        if flavor != "moments":
            raise ValueError(f"need a moment sequence, got flavor {flavor!r}")
        return tuple(seq.values)
    return tuple(as_scalar(v) for v in seq)


def egf_of(moments) -> FormalPowerSeries:
    """Exponential generating series 1 + sum m_n z^n / n! from values m_1 .. m_N."""
    vals = _values_of(moments)
    if not vals:
        raise ValueError("need at least one moment")
    fact = 1
    out = [Fraction(1)]
    for n, v in enumerate(vals, start=1):
        fact *= n
        out.append(v / fact)
    return FormalPowerSeries(tuple(out))


def ogf_of(moments) -> FormalPowerSeries:
    """Ordinary generating series 1 + sum m_n z^n from values m_1 .. m_N."""
    vals = _values_of(moments)
    if not vals:
        raise ValueError("need at least one moment")
    return FormalPowerSeries((Fraction(1),) + vals)


def moments_from_egf(f: FormalPowerSeries) -> tuple:
    """Values m_1 .. m_N back out of an exponential generating series."""
    if f.coeffs[0] != 1:
        raise ValueError("moment series must start at one")
    fact = 1
    out = []
    for n in range(1, f.order + 1):
        fact *= n
        out.append(f.coeffs[n] * fact)
    return tuple(out)


def moments_from_ogf(f: FormalPowerSeries) -> tuple:
    """Values m_1 .. m_N back out of an ordinary generating series."""
    if f.coeffs[0] != 1:
        raise ValueError("moment series must start at one")
    return f.coeffs[1:]


def solve_free(m: FormalPowerSeries) -> FormalPowerSeries:
    """Solve M(z) = C(z M(z)) for C, both with constant term one.

    Writing u = z M, the coefficient of z^n in u^k is known once c_1 .. c_{n-1}
    are, and [z^n] u^n = 1, so the triangular system solves forward exactly.
    """
    if m.coeffs[0] != 1:
        raise ValueError("moment series must start at one")
    n = m.order
    if n == 0:
        return FormalPowerSeries((Fraction(1),))
    u = FormalPowerSeries((Fraction(0),) + m.coeffs[:n])
    powers = [None, u]
    for _ in range(2, n + 1):
        powers.append(powers[-1] * u)
    cs = [Fraction(1)]
    for k in range(1, n + 1):
        acc = m.coeffs[k]
        for i in range(1, k):
            acc = acc - cs[i] * powers[i].coeffs[k]
        cs.append(acc)
    return FormalPowerSeries(tuple(cs))


def free_moment_series(c: FormalPowerSeries) -> FormalPowerSeries:
    """Inverse of ``solve_free``: the M with M(z) = C(z M(z)).

    Iterating M -> C(z M) from M = 1 pins one further coefficient per pass.
    """
    if c.coeffs[0] != 1:
        raise ValueError("cumulant series must start at one")
    n = c.order
    m = FormalPowerSeries.constant(Fraction(1), n)
    for _ in range(n):
        zm = FormalPowerSeries((Fraction(0),) + m.coeffs[:n])
        m = c.compose(zm)
    return m
