"""Scalar field used throughout the library.

Two arithmetic modes are supported:

* **exact** -- ``int``, :class:`fractions.Fraction` and :class:`GaussianRational`
  (complex numbers with rational real and imaginary parts);
* **float** -- ``float`` / ``complex`` (double precision).

A single computation must stay in one mode. :func:`value_mode` classifies a
collection of values and raises :class:`~elastinv.errors.ModeError` on a mix.
"""
from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np

from .errors import ModeError

EXACT = "exact"
FLOAT = "float"

_EXACT_REAL = (int, Fraction)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise ModeError(f"cannot use {type(x).__name__} value {x!r} as an exact scalar")


class GaussianRational:
    """Complex number ``re + i*im`` with :class:`~fractions.Fraction` parts.

    Arithmetic with ``int`` and ``Fraction`` is supported; combining with a
    ``float`` or ``complex`` raises :class:`ModeError`.
    """

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        if isinstance(real, GaussianRational):
            if imag:
                raise TypeError("imag must be zero when real is a GaussianRational")
            self.real, self.imag = real.real, real.imag
            return
        self.real = _as_fraction(real)
        self.imag = _as_fraction(imag)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        z = object.__new__(cls)
        z.real = re
        z.imag = im
        return z

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _EXACT_REAL) and not isinstance(other, bool):
            return GaussianRational._raw(Fraction(other), Fraction(0))
        if isinstance(other, (float, complex, np.floating, np.complexfloating)):
            raise ModeError("cannot mix exact and floating-point scalars")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.real, self.imag, o.real, o.imag
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.real * o.real + o.imag * o.imag
        if n == 0:
            raise ZeroDivisionError("division by zero")
        a, b, c, d = self.real, self.imag, o.real, o.imag
        return GaussianRational._raw((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / (self ** -n)
        result = GaussianRational._raw(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return GaussianRational._raw(-self.real, -self.imag)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.real, -self.imag)

    def norm2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.real * self.real + self.imag * self.imag

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self) -> bool:
        return bool(self.real) or bool(self.imag)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.real == other.real and self.imag == other.imag
        if isinstance(other, _EXACT_REAL):
            return self.imag == 0 and self.real == other
        return NotImplemented

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self.real)!r}, {str(self.imag)!r})"

    def __str__(self) -> str:
        if self.imag == 0:
            return str(self.real)
        if self.real == 0:
            return f"{self.imag}i"
        sign = "+" if self.imag > 0 else "-"
        return f"{self.real}{sign}{abs(self.imag)}i"


numbers.Complex.register(GaussianRational)

I = GaussianRational(0, 1)


def is_exact_scalar(x) -> bool:
    return isinstance(x, (GaussianRational, Fraction, int, np.integer)) and not isinstance(x, bool)


def is_float_scalar(x) -> bool:
    return isinstance(x, (float, complex, np.floating, np.complexfloating))


def value_mode(values) -> str:
    """Return ``"exact"`` or ``"float"`` for an iterable of scalars.

    An empty iterable counts as exact. Raises :class:`ModeError` if both
    kinds occur, or on a value of neither kind.
    """
    seen_exact = seen_float = False
    for x in values:
        if is_exact_scalar(x):
            seen_exact = True
        elif is_float_scalar(x):
            seen_float = True
        else:
            raise ModeError(f"unsupported scalar type {type(x).__name__}")
        if seen_exact and seen_float:
            raise ModeError("cannot mix exact and floating-point scalars")
    return FLOAT if seen_float else EXACT


def to_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational._raw(_as_fraction(x), Fraction(0))


def imag_unit(mode: str):
    return I if mode == EXACT else 1j


def parse_scalar(token, mode: str):
    """Parse a JSON/CSV token into a scalar of the requested mode.

    Accepted tokens: numbers, strings such as ``"3/4"`` or ``"-2"``, and
    ``[re, im]`` pairs of those.
    """
    if isinstance(token, (list, tuple)):
        if len(token) != 2:
            raise ValueError(f"complex value must be a [re, im] pair, got {token!r}")
        re, im = (parse_scalar(t, mode) for t in token)
        if mode == EXACT:
            return GaussianRational(re, im)
        return complex(re, im)
    if mode == EXACT:
        if isinstance(token, float):
            if not token.is_integer():
                raise ModeError(
                    f"exact mode needs rational input; write {token!r} as a 'p/q' string")
            return Fraction(int(token))
        if isinstance(token, bool):
            raise ValueError(f"not a number: {token!r}")
        if isinstance(token, (int, str)):
            try:
                return _as_fraction(token)
            except ValueError:
                raise ValueError(f"not a rational number: {token!r}") from None
        raise ValueError(f"not a number: {token!r}")
    if isinstance(token, str):
        return float(Fraction(token.strip())) if "/" in token else float(token)
    if isinstance(token, bool) or not isinstance(token, (int, float)):
        raise ValueError(f"not a number: {token!r}")
    return float(token)


def format_real(x, mode: str):
    """Serialise a real scalar: ``"p/q"`` string in exact mode, float otherwise."""
    if mode == EXACT:
        return str(Fraction(x))
    return float(x)


def split_complex(z, mode: str):
    """Return (re, im) of a scalar, serialised with :func:`format_real`."""
    if mode == EXACT:
        g = to_gaussian(z)
        return format_real(g.real, mode), format_real(g.imag, mode)
    z = complex(z)
    return z.real, z.imag
