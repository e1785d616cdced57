"""Exact scalars: arbitrary-precision rationals and polynomials in a formal parameter.

Every quantity in this package is either a ``fractions.Fraction`` or a
``LambdaPoly``, a univariate polynomial in the formal parameter λ with
rational coefficients.  Constant polynomials normalise to plain fractions
(see ``as_scalar``), so the two kinds mix freely in arithmetic, comparisons
and dict keys.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = [
    "LAMBDA",
    "LambdaPoly",
    "Scalar",
    "as_scalar",
    "is_unit",
    "parse_rational",
    "scalar_from_json",
    "scalar_str",
    "scalar_to_json",
]


def _poly_coeffs(x):
    # coefficient view of anything addable to a polynomial, None if unsupported
    if isinstance(x, LambdaPoly):
        return x.coeffs
    if isinstance(x, (int, Fraction)):
        return (Fraction(x),) if x != 0 else ()
    return None


class LambdaPoly:
    """Polynomial in the formal parameter λ, exact rational coefficients.

    Coefficients are stored ascending by exponent with trailing zeros
    stripped.  A polynomial of degree <= 0 compares and hashes equal to the
    rational it denotes.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, x) -> Fraction:
        """Value at a rational point, by Horner's rule."""
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other):
        oc = _poly_coeffs(other)
        if oc is None:
            return NotImplemented
        a, b = self.coeffs, oc
        n = max(len(a), len(b))
        return LambdaPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        oc = _poly_coeffs(other)
        if oc is None:
            return NotImplemented
        return self.__add__(LambdaPoly(-c for c in oc))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        oc = _poly_coeffs(other)
        if oc is None:
            return NotImplemented
        if not self.coeffs or not oc:
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(oc) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(oc):
                out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = LambdaPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, LambdaPoly):
            other = other.constant_value()  # nonconstant divisor raises here
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        d = Fraction(other)
        return LambdaPoly(c / d for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(("lambda-poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"LambdaPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "λ" if k == 1 else f"λ^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


LAMBDA = LambdaPoly((0, 1))

Scalar = Union[Fraction, LambdaPoly]


def as_scalar(x) -> Scalar:
    """Coerce to the scalar ring; constant polynomials collapse to fractions."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, LambdaPoly):
        return x.constant_value() if x.is_constant() else x
    raise TypeError(f"not a ring scalar: {x!r}")


def is_unit(x) -> bool:
    """True when x is invertible, i.e. a nonzero rational."""
    return isinstance(as_scalar(x), Fraction) and x != 0


def parse_rational(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def scalar_str(x) -> str:
    """Canonical text form: 'p/q' for rationals, ascending powers for polynomials."""
    return str(as_scalar(x))


def scalar_to_json(x):
    """JSON form: rationals as strings, polynomials as {exponent: coefficient} maps."""
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return str(x)
    return {str(k): str(c) for k, c in enumerate(x.coeffs) if c != 0}


def scalar_from_json(value) -> Scalar:
    """Inverse of ``scalar_to_json``; also accepts plain JSON integers."""
    if isinstance(value, bool):
        raise ValueError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, dict):
        if not value:
            return Fraction(0)
        coeffs = [Fraction(0)] * (max(int(k) for k in value) + 1)
        for k, c in value.items():
            exp = int(k)
            if exp < 0:
                raise ValueError("negative exponent in polynomial")
            coeffs[exp] = parse_rational(c)
        return as_scalar(LambdaPoly(coeffs))
    raise ValueError(f"not a scalar: {value!r}")
