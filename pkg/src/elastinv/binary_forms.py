"""Binary forms, transvectants and the Cartan correspondence.

A binary form of degree ``p`` is stored by its *raw* coefficients
``c_0, ..., c_p`` of the monomials ``u^(p-j) v^j``. The binomially weighted
coefficients ``a_j = c_j / binom(p, j)`` are available through
:attr:`BinaryForm.weighted`.

Exact forms keep Gaussian-integer numerators over one positive common
denominator, so the transvectant kernel runs on Python integers only.
Float forms hold a ``complex128`` array.

The transvectant is normalised as

    (f, g)_r = sum_i (-1)^i binom(r, i) d^r f / du^(r-i) dv^i * d^r g / du^i dv^(r-i)

with no further prefactor.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

import numpy as np

from .errors import InvalidRotationError, ModeError
from .harmonic import Poly3, harmonic_part
from .scalars import (EXACT, FLOAT, GaussianRational, imag_unit, is_exact_scalar,
                      to_gaussian, value_mode)

_KRONECKER_MIN = 4


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _split_exact(values) -> tuple[list[int], list[int], int]:
    """Gaussian rationals -> (re numerators, im numerators, common denominator)."""
    gs = [to_gaussian(x) for x in values]
    den = 1
    for z in gs:
        den = _lcm(den, z.real.denominator)
        den = _lcm(den, z.imag.denominator)
    re = [z.real.numerator * (den // z.real.denominator) for z in gs]
    im = [z.imag.numerator * (den // z.imag.denominator) for z in gs]
    return re, im, den


def _pmul_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pmul(a: list[int], b: list[int]) -> list[int]:
    """Product of integer polynomials given as coefficient lists."""
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _pmul_school(a, b)
    # Kronecker substitution: evaluate at 2^k, multiply once, unpack signed digits.
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if not ma or not mb:
        return [0] * (len(a) + len(b) - 1)
    k = (ma * mb * min(len(a), len(b))).bit_length() + 2
    A = 0
    for x in reversed(a):
        A = (A << k) + x
    B = 0
    for x in reversed(b):
        B = (B << k) + x
    P = A * B
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    full = 1 << k
    out = []
    for _ in range(len(a) + len(b) - 1):
        d = P & mask
        if d >= half:
            d -= full
        out.append(d)
        P = (P - d) >> k
    return out


def _gmul(ar, ai, br, bi):
    """Gaussian-integer polynomial product with three real multiplications."""
    a_zero = not any(ai)
    b_zero = not any(bi)
    if a_zero and b_zero:
        t = _pmul(ar, br)
        return t, [0] * len(t)
    if a_zero:
        return _pmul(ar, br), _pmul(ar, bi)
    if b_zero:
        return _pmul(ar, br), _pmul(ai, br)
    t1 = _pmul(ar, br)
    t2 = _pmul(ai, bi)
    t3 = _pmul([x + y for x, y in zip(ar, ai)], [x + y for x, y in zip(br, bi)])
    return ([x - y for x, y in zip(t1, t2)],
            [z - x - y for x, y, z in zip(t1, t2, t3)])


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def _deriv_factors(p: int, a: int, b: int) -> list[int]:
    return [_falling(p - j, a) * _falling(j, b) for j in range(b, p - a + 1)]


class BinaryForm:
    """Homogeneous polynomial ``sum_j c_j u^(p-j) v^j`` in two variables.

    Parameters
    ----------
    coeffs : sequence
        Raw coefficients ``c_0 .. c_p``. Exact scalars (``int``, ``Fraction``,
        :class:`~elastinv.scalars.GaussianRational`) give an exact form, floats
        or complex numbers a float form.
    degree : int, optional
        Nominal degree, needed only for an empty coefficient list.
    """

    __slots__ = ("degree", "_re", "_im", "_den", "_c")

    def __init__(self, coeffs, degree: int | None = None):
        coeffs = list(coeffs)
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            raise ValueError("a binary form needs at least one coefficient or a degree")
        if coeffs and len(coeffs) != degree + 1:
            raise ValueError(f"degree {degree} form needs {degree + 1} coefficients, got {len(coeffs)}")
        mode = value_mode(coeffs)
        if mode == EXACT:
            if not coeffs:
                coeffs = [0] * (degree + 1)
            re, im, den = _split_exact(coeffs)
            self._set_exact(degree, re, im, den)
        else:
            self.degree = degree
            self._c = np.array(coeffs, dtype=np.complex128)
            self._c.setflags(write=False)
            self._re = self._im = self._den = None

    def _set_exact(self, degree, re, im, den):
        g = gcd(den, *re, *im)
        if g > 1:
            re = [x // g for x in re]
            im = [x // g for x in im]
            den //= g
        self.degree = degree
        self._re = tuple(re)
        self._im = tuple(im)
        self._den = den
        self._c = None

    @classmethod
    def _exact(cls, degree, re, im, den) -> "BinaryForm":
        f = object.__new__(cls)
        f._set_exact(degree, re, im, den)
        return f

    @classmethod
    def _float(cls, degree, c) -> "BinaryForm":
        f = object.__new__(cls)
        f.degree = degree
        f._c = np.asarray(c, dtype=np.complex128)
        f._c.setflags(write=False)
        f._re = f._im = f._den = None
        return f

    @classmethod
    def from_weighted(cls, a) -> "BinaryForm":
        """Form ``sum_k binom(p, k) a_k u^(p-k) v^k``."""
        a = list(a)
        p = len(a) - 1
        return cls([comb(p, k) * x for k, x in enumerate(a)])

    @classmethod
    def zero(cls, degree: int, mode: str = EXACT) -> "BinaryForm":
        if mode == EXACT:
            return cls._exact(degree, [0] * (degree + 1), [0] * (degree + 1), 1)
        return cls._float(degree, np.zeros(degree + 1))

    @classmethod
    def monomial(cls, degree: int, j: int, c=1) -> "BinaryForm":
        """``c u^(degree-j) v^j``."""
        coeffs = [0 * c] * (degree + 1)
        coeffs[j] = c
        return cls(coeffs)

    @property
    def mode(self) -> str:
        return FLOAT if self._c is not None else EXACT

    @property
    def is_exact(self) -> bool:
        return self._c is None

    @property
    def order(self) -> int:
        return self.degree

    @property
    def coeffs(self) -> tuple:
        """Raw coefficients as GaussianRationals (exact) or complex numbers."""
        if self._c is not None:
            return tuple(complex(x) for x in self._c)
        d = self._den
        return tuple(GaussianRational._raw(Fraction(r, d), Fraction(i, d))
                     for r, i in zip(self._re, self._im))

    @property
    def weighted(self) -> tuple:
        """Weighted coefficients ``a_k = c_k / binom(p, k)``."""
        p = self.degree
        if self._c is not None:
            return tuple(complex(x) / comb(p, k) for k, x in enumerate(self._c))
        return tuple(c / comb(p, k) for k, c in enumerate(self.coeffs))

    def value(self):
        """The single coefficient of a degree-0 form (an invariant)."""
        if self.degree != 0:
            raise ValueError(f"form of degree {self.degree} is not a constant")
        return self.coeffs[0]

    def is_zero(self, tol: float = 0.0) -> bool:
        if self._c is not None:
            return bool(np.all(np.abs(self._c) <= tol))
        return not any(self._re) and not any(self._im)

    def to_float(self) -> "BinaryForm":
        if self._c is not None:
            return self
        return BinaryForm._float(self.degree, [complex(z) for z in self.coeffs])

    def _check(self, other: "BinaryForm"):
        if self.mode != other.mode:
            raise ModeError("cannot combine exact and float binary forms")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check(other)
        if other.degree != self.degree:
            raise ValueError(f"cannot add forms of degree {self.degree} and {other.degree}")
        if self._c is not None:
            return BinaryForm._float(self.degree, self._c + other._c)
        d1, d2 = self._den, other._den
        den = _lcm(d1, d2)
        s, t = den // d1, den // d2
        return BinaryForm._exact(
            self.degree,
            [x * s + y * t for x, y in zip(self._re, other._re)],
            [x * s + y * t for x, y in zip(self._im, other._im)], den)

    def __neg__(self) -> "BinaryForm":
        if self._c is not None:
            return BinaryForm._float(self.degree, -self._c)
        return BinaryForm._exact(self.degree, [-x for x in self._re],
                                 [-x for x in self._im], self._den)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __mul__(self, other) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            self._check(other)
            deg = self.degree + other.degree
            if self._c is not None:
                return BinaryForm._float(deg, np.convolve(self._c, other._c))
            re, im = _gmul(list(self._re), list(self._im), list(other._re), list(other._im))
            return BinaryForm._exact(deg, re, im, self._den * other._den)
        if self._c is not None:
            if is_exact_scalar(other) and not isinstance(other, int):
                other = complex(other)
            return BinaryForm._float(self.degree, self._c * other)
        if not is_exact_scalar(other):
            raise ModeError("cannot scale an exact form by a float")
        (sr,), (si,), sd = _split_exact([other])
        re = [x * sr - y * si for x, y in zip(self._re, self._im)]
        im = [x * si + y * sr for x, y in zip(self._re, self._im)]
        return BinaryForm._exact(self.degree, re, im, self._den * sd)

    def __rmul__(self, other) -> "BinaryForm":
        return self * other

    def __pow__(self, n: int) -> "BinaryForm":
        if n < 0:
            raise ValueError("negative power of a binary form")
        result = BinaryForm([1] if self.is_exact else [1.0])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree or self.mode != other.mode:
            return False
        if self._c is not None:
            return bool(np.array_equal(self._c, other._c))
        return (self._re, self._im, self._den) == (other._re, other._im, other._den)

    def __hash__(self):
        if self._c is not None:
            return hash((self.degree, self._c.tobytes()))
        return hash((self.degree, self._re, self._im, self._den))

    def allclose(self, other: "BinaryForm", rtol: float = 1e-9, atol: float = 0.0) -> bool:
        a = np.array([complex(x) for x in self.coeffs])
        b = np.array([complex(x) for x in other.coeffs])
        return self.degree == other.degree and bool(np.allclose(a, b, rtol=rtol, atol=atol))

    def __call__(self, u, v):
        p = self.degree
        return sum((c * u ** (p - j) * v ** j for j, c in enumerate(self.coeffs)), 0 * u)

    def conjugate(self) -> "BinaryForm":
        """Form with complex-conjugated coefficients."""
        if self._c is not None:
            return BinaryForm._float(self.degree, np.conj(self._c))
        return BinaryForm._exact(self.degree, list(self._re), [-x for x in self._im], self._den)

    def derivative(self, a: int, b: int) -> "BinaryForm":
        """``d^(a+b) f / du^a dv^b``."""
        p = self.degree
        m = p - a - b
        if m < 0:
            return BinaryForm.zero(0, self.mode)
        fac = _deriv_factors(p, a, b)
        if self._c is not None:
            return BinaryForm._float(m, self._c[b:p - a + 1] * np.array(fac, dtype=np.float64))
        re = [x * s for x, s in zip(self._re[b:p - a + 1], fac)]
        im = [x * s for x, s in zip(self._im[b:p - a + 1], fac)]
        return BinaryForm._exact(m, re, im, self._den)

    def __repr__(self):
        return f"BinaryForm(degree={self.degree}, coeffs={[str(c) for c in self.coeffs]})"


def transvectant(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant ``(f, g)_r``, a form of degree ``deg f + deg g - 2r``.

    Returns the zero form when ``r > min(deg f, deg g)``.
    """
    if r < 0:
        raise ValueError(f"transvectant index must be nonnegative, got {r}")
    f._check(g)
    n, p = f.degree, g.degree
    m = n + p - 2 * r
    if r > min(n, p):
        return BinaryForm.zero(max(m, 0), f.mode)
    if f._c is not None:
        acc = np.zeros(m + 1, dtype=np.complex128)
        for i in range(r + 1):
            s = (-1) ** i * comb(r, i)
            df = f._c[i:n - r + i + 1] * np.array(_deriv_factors(n, r - i, i), dtype=np.float64)
            dg = g._c[r - i:p - i + 1] * np.array(_deriv_factors(p, i, r - i), dtype=np.float64)
            acc += s * np.convolve(df, dg)
        return BinaryForm._float(m, acc)
    acc_re = [0] * (m + 1)
    acc_im = [0] * (m + 1)
    for i in range(r + 1):
        s = (-1) ** i * comb(r, i)
        ff = _deriv_factors(n, r - i, i)
        gf = _deriv_factors(p, i, r - i)
        fr = [x * t * s for x, t in zip(f._re[i:n - r + i + 1], ff)]
        fi = [x * t * s for x, t in zip(f._im[i:n - r + i + 1], ff)]
        gr = [x * t for x, t in zip(g._re[r - i:p - i + 1], gf)]
        gi = [x * t for x, t in zip(g._im[r - i:p - i + 1], gf)]
        pr, pi = _gmul(fr, fi, gr, gi)
        for j in range(m + 1):
            acc_re[j] += pr[j]
            acc_im[j] += pi[j]
    return BinaryForm._exact(m, acc_re, acc_im, f._den * g._den)


def _sl2_entries(gamma):
    m = gamma.tolist() if isinstance(gamma, np.ndarray) else [list(r) for r in gamma]
    if len(m) != 2 or any(len(r) != 2 for r in m):
        raise ValueError("an SL(2) element must be a 2x2 matrix")
    (a, b), (c, d) = m
    mode = value_mode([a, b, c, d])
    if mode == EXACT:
        a, b, c, d = (to_gaussian(x) for x in (a, b, c, d))
        if a * d - b * c != 1:
            raise InvalidRotationError(f"determinant is {a * d - b * c}, expected 1")
    else:
        a, b, c, d = (complex(x) for x in (a, b, c, d))
        if abs(a * d - b * c - 1) > 1e-12:
            raise InvalidRotationError(f"determinant is {a * d - b * c}, expected 1")
    return mode, a, b, c, d


def sl2_act(gamma, f: BinaryForm) -> BinaryForm:
    """``(gamma . f)(u, v) = f(gamma^{-1} (u, v))`` for ``det gamma = 1``."""
    mode, a, b, c, d = _sl2_entries(gamma)
    if mode != f.mode:
        raise ModeError("SL(2) element and form are in different arithmetic modes")
    # gamma^{-1} = [[d, -b], [-c, a]]
    l1 = BinaryForm([d, -b])
    l2 = BinaryForm([-c, a])
    p = f.degree
    p1 = [BinaryForm([1] if mode == EXACT else [1.0])]
    p2 = [p1[0]]
    for _ in range(p):
        p1.append(p1[-1] * l1)
        p2.append(p2[-1] * l2)
    out = BinaryForm.zero(p, mode)
    for j, cj in enumerate(f.coeffs):
        if cj != 0:
            out = out + p1[p - j] * p2[j] * cj
    return out


def _spinor_matrix(x, y, z, i):
    return ((-z, x + i * y), (x - i * y, z))


def _spinor_coords(m, i):
    return ((m[0][1] + m[1][0]) / 2, (m[0][1] - m[1][0]) / (2 * i), m[1][1])


def sl2_to_so3(gamma) -> np.ndarray:
    """Image of ``gamma`` under the spinor cover SL(2, C) -> SO(3, C).

    ``gamma`` acts on ``M(x, y, z) = [[-z, x+iy], [x-iy, z]]`` by
    conjugation ``M -> gamma M gamma^{-1}``; the result is the matrix of that
    linear map in the ``(x, y, z)`` coordinates. Exact input gives an
    object array of GaussianRationals.
    """
    mode, a, b, c, d = _sl2_entries(gamma)
    i = imag_unit(mode)
    g = ((a, b), (c, d))
    ginv = ((d, -b), (-c, a))

    def mat(p, q):
        return tuple(tuple(sum((p[r][k] * q[k][s] for k in range(2)), 0 * i) for s in range(2))
                     for r in range(2))

    cols = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        e = [x * (i ** 0) for x in e]
        cols.append(_spinor_coords(mat(mat(g, _spinor_matrix(*e, i)), ginv), i))
    out = np.empty((3, 3), dtype=object if mode == EXACT else np.complex128)
    for col, v in enumerate(cols):
        for row in range(3):
            out[row, col] = v[row]
    return out


def cartan_map(u, v) -> tuple:
    """``(u, v) -> ((u^2 - v^2)/2, (u^2 + v^2)/(2i), uv)``, a point on the isotropic cone."""
    mode = value_mode([u, v])
    i = imag_unit(mode)
    if mode == EXACT:
        u, v = to_gaussian(u), to_gaussian(v)
    return ((u * u - v * v) / 2, (u * u + v * v) / (2 * i), u * v)


def _cartan_quadrics(mode: str):
    if mode == EXACT:
        half, i = Fraction(1, 2), GaussianRational(0, 1)
        return (BinaryForm([half, 0, -half]),
                BinaryForm([-i * half, 0, -i * half]),
                BinaryForm([0, 1, 0]))
    return (BinaryForm([0.5, 0.0, -0.5]),
            BinaryForm([-0.5j, 0.0, -0.5j]),
            BinaryForm([0.0, 1.0, 0.0]))


def cartan_pullback(h: Poly3) -> BinaryForm:
    """``(phi^* h)(u, v) = h((u^2 - v^2)/2, (u^2 + v^2)/(2i), uv)``, degree ``2n``.

    For a non-harmonic ``h`` this equals the pullback of its harmonic part,
    since ``q`` vanishes on the isotropic cone.
    """
    n = h.degree
    mode = h.mode
    X, Y, Z = _cartan_quadrics(mode)
    one = BinaryForm([1] if mode == EXACT else [1.0])
    px, py, pz = [one], [one], [one]
    for _ in range(n):
        px.append(px[-1] * X)
        py.append(py[-1] * Y)
        pz.append(pz[-1] * Z)
    out = BinaryForm.zero(2 * n, mode)
    for (i, j, k), c in h.coeffs.items():
        out = out + px[i] * py[j] * pz[k] * c
    return out


def cartan_pushforward(f: BinaryForm) -> Poly3:
    """Inverse of :func:`cartan_pullback`: the harmonic polynomial of degree ``deg f / 2``.

    Each monomial ``u^(2n-k) v^k`` is replaced by ``z^k (x+iy)^(n-k)``
    (``k <= n``) or ``z^(2n-k) (-x+iy)^(k-n)`` (``k >= n``), and the
    harmonic part of the result is returned.
    """
    if f.degree % 2:
        raise ValueError(f"only even-degree forms correspond to harmonic polynomials, got {f.degree}")
    n = f.degree // 2
    i = imag_unit(f.mode)
    z = Poly3.linear(0, 0, 1)
    plus = Poly3.linear(1, i, 0)
    minus = Poly3.linear(-1, i, 0)
    p = Poly3(n)
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        if k <= n:
            mono = (z ** k) * (plus ** (n - k))
        else:
            mono = (z ** (2 * n - k)) * (minus ** (k - n))
        p = p + mono * c
    h0 = harmonic_part(p)
    return Poly3(n, {e: _simplify(c) for e, c in h0.coeffs.items()})


def _simplify(c):
    if isinstance(c, GaussianRational) and c.imag == 0:
        return c.real
    return c


def is_real_form(f: BinaryForm, tol: float = 0.0) -> bool:
    """Whether ``f`` is the image of a real harmonic polynomial.

    Tests ``a_(2n-k) = (-1)^(n-k) conj(a_k)`` on the weighted coefficients.
    ``tol`` applies to float forms only.
    """
    if f.degree % 2:
        raise ValueError(f"reality is defined for even-degree forms only, got {f.degree}")
    n = f.degree // 2
    a = f.weighted
    for k in range(n + 1):
        lhs = a[2 * n - k]
        rhs = (-1) ** (n - k) * a[k].conjugate()
        if f.is_exact:
            if lhs != rhs:
                return False
        elif abs(lhs - rhs) > tol:
            return False
    return True
