"""Homogeneous polynomials on R^3 and harmonic decompositions.

A totally symmetric tensor ``T`` of order ``n`` corresponds to the polynomial
``p(v) = T(v, ..., v)``. Harmonic (traceless) tensors correspond to
polynomials with zero Laplacian, and every homogeneous ``p`` splits as
``p = h_0 + q h_1 + ... + q^r h_r`` with ``q = x^2 + y^2 + z^2`` and each
``h_k`` harmonic.

The elasticity tensor is split as ``C -> (lambda0, mu0, a, b, D)`` with

* ``lambda0 = tr d``, ``mu0 = tr v`` (traces of the dilatation and Voigt tensors),
* ``a = (5 dev d - 4 dev v) / 7``, ``b = (-2 dev d + 3 dev v) / 7``,
* ``D`` the harmonic part of the quartic ``C(v, v, v, v)``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import ModeError, SymmetryError
from .scalars import EXACT, GaussianRational, value_mode
from .tensor_core import (FLOAT_SYMMETRY_TOL, ElasticityTensor,
                          _check_permutation_symmetry, array_mode, as_scalar_array,
                          deviator, dilatation, packed_to_tensor,
                          trace2, voigt_tensor)


def monomials(n: int):
    """Exponent triples ``(i, j, k)`` with ``i + j + k = n`` in lexicographic descending order."""
    return [(i, j, n - i - j) for i in range(n, -1, -1) for j in range(n - i, -1, -1)]


class Poly3:
    """Homogeneous polynomial in ``x, y, z``.

    Coefficients are stored in a dict keyed by exponent triples; zero
    coefficients are dropped. The nominal degree is kept for the zero
    polynomial.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        clean = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != 3 or sum(e) != degree or min(e) < 0:
                raise ValueError(f"exponent {e} does not have total degree {degree}")
            if c != 0:
                clean[e] = clean.get(e, 0) + c
        self.coeffs = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def q(cls) -> "Poly3":
        """The quadratic form ``x^2 + y^2 + z^2``."""
        return cls(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})

    @classmethod
    def const(cls, c) -> "Poly3":
        return cls(0, {(0, 0, 0): c})

    @classmethod
    def linear(cls, cx, cy, cz) -> "Poly3":
        return cls(1, {(1, 0, 0): cx, (0, 1, 0): cy, (0, 0, 1): cz})

    @property
    def mode(self) -> str:
        return value_mode(self.coeffs.values())

    def coefficient(self, i: int, j: int, k: int):
        return self.coeffs.get((i, j, k), 0)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(c) <= tol for c in self.coeffs.values())

    def __add__(self, other: "Poly3") -> "Poly3":
        if not isinstance(other, Poly3):
            return NotImplemented
        if other.degree != self.degree and other.coeffs and self.coeffs:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        degree = self.degree if self.coeffs or not other.coeffs else other.degree
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly3(degree, out)

    def __neg__(self) -> "Poly3":
        return Poly3(self.degree, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Poly3") -> "Poly3":
        return self + (-other)

    def __mul__(self, other) -> "Poly3":
        if isinstance(other, Poly3):
            out: dict = {}
            for (a, b, c), s in self.coeffs.items():
                for (d, e, f), t in other.coeffs.items():
                    key = (a + d, b + e, c + f)
                    out[key] = out.get(key, 0) + s * t
            return Poly3(self.degree + other.degree, out)
        return Poly3(self.degree, {e: c * other for e, c in self.coeffs.items()})

    def __rmul__(self, other) -> "Poly3":
        return self * other

    def __truediv__(self, s) -> "Poly3":
        if isinstance(s, int):
            s = Fraction(s)
        return Poly3(self.degree, {e: c / s for e, c in self.coeffs.items()})

    def __pow__(self, n: int) -> "Poly3":
        out = Poly3.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly3):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.degree == other.degree or not self.coeffs

    def __call__(self, x, y, z):
        return sum((c * x ** i * y ** j * z ** k for (i, j, k), c in self.coeffs.items()), 0)

    def map_coeffs(self, fn) -> "Poly3":
        return Poly3(self.degree, {e: fn(c) for e, c in self.coeffs.items()})

    def conjugate(self) -> "Poly3":
        return self.map_coeffs(lambda c: c.conjugate())

    def __repr__(self):
        if not self.coeffs:
            return f"Poly3({self.degree}, 0)"
        terms = []
        for (i, j, k), c in sorted(self.coeffs.items(), reverse=True):
            mono = "*".join(f"{v}^{p}" if p > 1 else v
                            for v, p in zip("xyz", (i, j, k)) if p)
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return f"Poly3({self.degree}, " + " + ".join(terms) + ")"


def laplacian(p: Poly3) -> Poly3:
    """Laplacian of ``p``; the zero polynomial of degree 0 when ``deg p < 2``."""
    if p.degree < 2:
        return Poly3(0)
    out: dict = {}
    for (i, j, k), c in p.coeffs.items():
        for e, n in (((i - 2, j, k), i), ((i, j - 2, k), j), ((i, j, k - 2), k)):
            if n >= 2:
                out[e] = out.get(e, 0) + n * (n - 1) * c
    return Poly3(p.degree - 2, out)


def laplacian_power(p: Poly3, k: int) -> Poly3:
    for _ in range(k):
        p = laplacian(p)
    return p


def is_harmonic(p: Poly3, tol: float = 0.0) -> bool:
    return laplacian(p).is_zero(tol)


def act_on_poly(g, p: Poly3) -> Poly3:
    """``(g.p)(v) = p(g^{-1} v)`` for an orthogonal (possibly complex) ``g``."""
    m = g.matrix if hasattr(g, "matrix") else np.asarray(g, dtype=object)
    # g^{-1} = g^T, so the new x-coordinate fed to p is sum_j g[j][0] v_j, etc.
    subs = [Poly3.linear(m[0, c], m[1, c], m[2, c]) for c in range(3)]
    powers = [[Poly3.const(1)] for _ in range(3)]
    for c in range(3):
        for _ in range(p.degree):
            powers[c].append(powers[c][-1] * subs[c])
    out = Poly3(p.degree)
    for (i, j, k), c in p.coeffs.items():
        out = out + powers[0][i] * powers[1][j] * powers[2][k] * c
    return Poly3(p.degree, out.coeffs)


def _multinomial(e) -> int:
    i, j, k = e
    return factorial(i + j + k) // (factorial(i) * factorial(j) * factorial(k))


def _index_exponent(idx) -> tuple:
    c = Counter(idx)
    return (c[0], c[1], c[2])


def _polarize_array(t: np.ndarray) -> Poly3:
    n = t.ndim
    out: dict = {}
    for idx in itertools.product(range(3), repeat=n):
        e = _index_exponent(idx)
        out[e] = out.get(e, 0) + t[idx]
    return Poly3(n, out)


def tensor_to_poly(T, *, tol: float = FLOAT_SYMMETRY_TOL) -> Poly3:
    """``p(v) = T(v, ..., v)`` for a totally symmetric tensor of order 2 or 4."""
    arr = T if isinstance(T, np.ndarray) else as_scalar_array(T)[0]
    if arr.ndim not in (2, 4) or arr.shape != (3,) * arr.ndim:
        raise ValueError(f"expected a 3x...x3 tensor of order 2 or 4, got shape {arr.shape}")
    perms = [p for p in itertools.permutations(range(arr.ndim)) if list(p) != sorted(p)]
    _check_permutation_symmetry(arr, perms, array_mode(arr), tol, "tensor")
    return _polarize_array(arr)


def poly_to_tensor(p: Poly3) -> np.ndarray:
    """Totally symmetric tensor of a quadratic or quartic polynomial (polarization).

    ``T[i1..in] = coefficient(monomial) / multinomial(monomial)``.
    """
    if p.degree not in (2, 4):
        raise ValueError(f"only degrees 2 and 4 are supported, got {p.degree}")
    exact = p.mode == EXACT
    arr = np.empty((3,) * p.degree, dtype=object if exact else np.complex128)
    for idx in itertools.product(range(3), repeat=p.degree):
        e = _index_exponent(idx)
        arr[idx] = _divide(p.coefficient(*e), _multinomial(e), exact)
    if not exact and not np.any(arr.imag):
        arr = arr.real.copy()
    return arr


def _divide(c, m: int, exact: bool):
    if not exact:
        return c / m
    if isinstance(c, GaussianRational):
        x = c / m
        return x.real if x.imag == 0 else x
    return Fraction(c) / m


def symmetric_index(n: int) -> tuple:
    """Sorted index tuples labelling the independent entries of a symmetric order-``n`` tensor."""
    if n == 2:
        return SYM2_INDEX
    return tuple(tuple(sorted(sum(([a] * m for a, m in enumerate(e)), []))) for e in monomials(n))


def symmetric_components(p: Poly3) -> list:
    """Independent tensor entries of ``p`` in :func:`symmetric_index` order."""
    exact = p.mode == EXACT
    out = []
    for idx in symmetric_index(p.degree):
        e = _index_exponent(idx)
        out.append(_divide(p.coefficient(*e), _multinomial(e), exact))
    return out


def poly_from_components(n: int, values) -> Poly3:
    """Inverse of :func:`symmetric_components`."""
    index = symmetric_index(n)
    values = list(values)
    if len(values) != len(index):
        raise ValueError(f"order {n} needs {len(index)} components, got {len(values)}")
    coeffs = {}
    for idx, v in zip(index, values):
        e = _index_exponent(idx)
        coeffs[e] = v * _multinomial(e)
    return Poly3(n, coeffs)


def lambda_factor(k: int, n: int) -> Fraction:
    """``Delta^k (q^k h) = lambda_k(n) h`` for harmonic ``h`` of degree ``n``."""
    return Fraction(factorial(2 * (n + k) + 1) * factorial(k) * factorial(n),
                    factorial(2 * n + 1) * factorial(n + k))


def mu_factor(k: int, n: int) -> Fraction:
    """Normalisation of the k-th harmonic component of a degree-``n`` polynomial."""
    return Fraction(factorial(2 * n - 4 * k + 1) * factorial(n - k),
                    factorial(2 * n - 2 * k + 1) * factorial(k) * factorial(n - 2 * k))


def _scale_poly(p: Poly3, s: Fraction, exact: bool) -> Poly3:
    return p * (s if exact else float(s))


def harmonic_decompose_poly(p: Poly3) -> list[Poly3]:
    """Return ``[h_0, ..., h_r]`` with ``p = sum_k q^k h_k``, ``r = n // 2``.

    ``h_k`` is harmonic of degree ``n - 2k``. The top component is
    ``Delta^r p / (2r+1)!`` (``n`` even) or ``3! (r+1) Delta^r p / (2r+3)!``
    (``n`` odd); lower ones follow recursively.
    """
    n = p.degree
    r = n // 2
    exact = p.mode == EXACT
    q = Poly3.q()
    h: list = [None] * (r + 1)
    top = laplacian_power(p, r)
    if n % 2 == 0:
        h[r] = _scale_poly(top, Fraction(1, factorial(2 * r + 1)), exact)
    else:
        h[r] = _scale_poly(top, Fraction(6 * (r + 1), factorial(2 * r + 3)), exact)
    h[r] = Poly3(n - 2 * r, h[r].coeffs)
    for k in range(r - 1, -1, -1):
        rest = p
        for j in range(k + 1, r + 1):
            rest = rest - (q ** j) * h[j]
        hk = _scale_poly(laplacian_power(rest, k), mu_factor(k, n), exact)
        h[k] = Poly3(n - 2 * k, hk.coeffs)
    return h


def harmonic_part(p: Poly3) -> Poly3:
    return harmonic_decompose_poly(p)[0]


def recompose_poly(parts: list[Poly3]) -> Poly3:
    q = Poly3.q()
    n = parts[0].degree
    out = Poly3(n)
    for k, hk in enumerate(parts):
        out = out + Poly3(n, ((q ** k) * hk).coeffs)
    return out


@dataclass(frozen=True)
class HarmonicParts:
    """Harmonic components ``(lambda0, mu0, a, b, D)`` of an elasticity tensor.

    ``a`` and ``b`` are traceless symmetric ``3x3`` arrays; ``D`` is a totally
    symmetric traceless ``3x3x3x3`` array.
    """

    lambda0: object
    mu0: object
    a: np.ndarray
    b: np.ndarray
    D: np.ndarray

    @property
    def mode(self) -> str:
        return array_mode(self.a)

    def __eq__(self, other):
        if not isinstance(other, HarmonicParts):
            return NotImplemented
        return (self.lambda0 == other.lambda0 and self.mu0 == other.mu0
                and bool(np.all(self.a == other.a)) and bool(np.all(self.b == other.b))
                and bool(np.all(self.D == other.D)))

    def vector(self) -> list:
        """Flat coordinates: ``lambda0, mu0``, 6 of ``a``, 6 of ``b``, 15 of ``D``."""
        out = [self.lambda0, self.mu0]
        out += [self.a[i, j] for i, j in SYM2_INDEX]
        out += [self.b[i, j] for i, j in SYM2_INDEX]
        out += [self.D[idx] for idx in SYM4_INDEX]
        return out


# Independent components of symmetric 2- and 4-tensors, used for serialisation.
SYM2_INDEX = ((0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1))
SYM4_INDEX = tuple(
    tuple(sorted(sum(([a] * m for a, m in enumerate(e)), [])))
    for e in monomials(4))


def check_harmonic2(s: np.ndarray, name: str, tol: float):
    mode = array_mode(s)
    _check_permutation_symmetry(s, ((1, 0),), mode, tol, name)
    t = trace2(s)
    if (t != 0) if mode == EXACT else abs(t) > tol * max(1.0, float(np.max(np.abs(s)))):
        raise SymmetryError(f"{name} is not traceless (trace = {t})")


def check_harmonic4(D: np.ndarray, name: str = "D", tol: float = FLOAT_SYMMETRY_TOL):
    mode = array_mode(D)
    perms = [p for p in itertools.permutations(range(4)) if list(p) != sorted(p)]
    _check_permutation_symmetry(D, perms, mode, tol, name)
    tr = D[0, 0] + D[1, 1] + D[2, 2]
    scale = 1.0 if mode == EXACT else max(1.0, float(np.max(np.abs(D))))
    for i, j in itertools.product(range(3), repeat=2):
        if (tr[i, j] != 0) if mode == EXACT else abs(tr[i, j]) > tol * scale:
            raise SymmetryError(f"{name} is not traceless: trace[{i}][{j}] = {tr[i, j]}")


def harmonic_decompose_elasticity(C: ElasticityTensor) -> HarmonicParts:
    """Split ``C`` into ``(lambda0, mu0, a, b, D)``."""
    C = ElasticityTensor(C)
    exact = C.is_exact
    d, v = dilatation(C), voigt_tensor(C)
    dd, dv = deviator(d), deviator(v)
    seventh = Fraction(1, 7) if exact else 1.0 / 7.0
    a = (5 * dd - 4 * dv) * seventh
    b = (-2 * dd + 3 * dv) * seventh
    h0 = harmonic_part(_polarize_array(C.components))
    D = poly_to_tensor(h0) if h0.coeffs else _zeros4(exact)
    if not exact:
        D = np.real(D).astype(np.float64)
    return HarmonicParts(trace2(d), trace2(v), a, b, D)


def _zeros4(exact: bool) -> np.ndarray:
    if exact:
        return np.full((3, 3, 3, 3), Fraction(0), dtype=object)
    return np.zeros((3, 3, 3, 3))


@lru_cache(maxsize=None)
def _reconstruction_matrix():
    """Exact left inverse of the 21 -> 29 linear map ``C -> parts.vector()``."""
    import sympy

    columns = []
    for slot in range(21):
        unit = [Fraction(int(s == slot)) for s in range(21)]
        columns.append(harmonic_decompose_elasticity(packed_to_tensor(unit)).vector())
    L = sympy.Matrix(29, 21, lambda i, j: sympy.Rational(columns[j][i].numerator,
                                                         columns[j][i].denominator))
    P = (L.T * L).inv() * L.T
    return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in P.row(i)) for i in range(21))


def reconstruct_elasticity(parts: HarmonicParts, *, tol: float = FLOAT_SYMMETRY_TOL) -> ElasticityTensor:
    """Inverse of :func:`harmonic_decompose_elasticity`."""
    a, mode_a = as_scalar_array(parts.a, (3, 3))
    b, mode_b = as_scalar_array(parts.b, (3, 3))
    D, mode_d = as_scalar_array(parts.D, (3, 3, 3, 3))
    scalars_mode = value_mode([parts.lambda0, parts.mu0])
    if len({mode_a, mode_b, mode_d, scalars_mode}) != 1:
        raise ModeError("harmonic parts mix exact and float values")
    check_harmonic2(a, "a", tol)
    check_harmonic2(b, "b", tol)
    check_harmonic4(D, "D", tol)
    vec = HarmonicParts(parts.lambda0, parts.mu0, a, b, D).vector()
    P = _reconstruction_matrix()
    if mode_a == EXACT:
        vec = [Fraction(x) for x in vec]
        packed = [sum(p * x for p, x in zip(row, vec)) for row in P]
    else:
        packed = list(np.array(P, dtype=np.float64) @ np.array(vec, dtype=np.float64))
    return packed_to_tensor(packed)


__all__ = [
    "Poly3", "monomials", "laplacian", "laplacian_power", "is_harmonic", "act_on_poly",
    "tensor_to_poly", "poly_to_tensor", "lambda_factor", "mu_factor",
    "harmonic_decompose_poly", "harmonic_part", "recompose_poly", "HarmonicParts",
    "harmonic_decompose_elasticity", "reconstruct_elasticity", "check_harmonic2",
    "check_harmonic4", "SYM2_INDEX", "SYM4_INDEX", "symmetric_index", "symmetric_components",
    "poly_from_components",
]
