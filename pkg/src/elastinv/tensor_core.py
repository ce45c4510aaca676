"""Elasticity tensors, rotations and the SO(3) action.

Tensors are stored as full ``3x3x3x3`` numpy arrays. Exact-mode arrays have
``dtype=object`` and hold :class:`~fractions.Fraction` (or
:class:`~elastinv.scalars.GaussianRational`) entries; float-mode arrays are
``float64`` (or ``complex128``).

Voigt convention: slot order ``(11, 22, 33, 23, 13, 12)`` with *raw*
components, i.e. ``m[I, J] = C[i, j, k, l]`` with no factor 2 or sqrt(2).
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import InvalidRotationError, ModeError, SymmetryError
from .scalars import EXACT, FLOAT, GaussianRational, is_exact_scalar, value_mode

VOIGT_PAIRS = ((0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1))
VOIGT_INDEX = {}
for _a, (_i, _j) in enumerate(VOIGT_PAIRS):
    VOIGT_INDEX[_i, _j] = VOIGT_INDEX[_j, _i] = _a

# Order of the 21 independent components used for CSV and packed vectors:
# upper triangle of the Voigt matrix, row by row (C11 C12 ... C16 C22 ... C66).
VOIGT_UPPER = tuple((a, b) for a in range(6) for b in range(a, 6))

FLOAT_SYMMETRY_TOL = 1e-10
FLOAT_ROTATION_TOL = 1e-12


def _exactify(x):
    if isinstance(x, GaussianRational):
        return x.real if x.imag == 0 else x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def as_scalar_array(values, shape=None) -> tuple[np.ndarray, str]:
    """Convert nested numeric data into a mode-tagged numpy array.

    Python ints, Fractions, GaussianRationals and ``"p/q"`` strings give an
    exact object array; floats (including numpy float arrays) give a float
    array. Returns ``(array, mode)``.
    """
    if isinstance(values, np.ndarray) and values.dtype != object:
        if np.issubdtype(values.dtype, np.integer):
            arr = np.vectorize(Fraction, otypes=[object])(values)
            mode = EXACT
        else:
            arr, mode = values.astype(np.result_type(values.dtype, np.float64)), FLOAT
    else:
        raw = np.array(values, dtype=object)
        flat = raw.ravel()
        if any(isinstance(x, str) for x in flat):
            if not all(isinstance(x, str) or is_exact_scalar(x) for x in flat):
                raise ModeError("string components require exact mode throughout")
            mode = EXACT
        else:
            mode = value_mode(flat)
        if mode == EXACT:
            arr = np.empty(raw.shape, dtype=object)
            arr.ravel()[:] = [_exactify(x) for x in flat]
        else:
            cplx = any(isinstance(x, (complex, np.complexfloating)) for x in flat)
            arr = raw.astype(np.complex128 if cplx else np.float64)
    if shape is not None and arr.shape != tuple(shape):
        raise ValueError(f"expected shape {tuple(shape)}, got {arr.shape}")
    return arr, mode


def array_mode(arr: np.ndarray) -> str:
    return EXACT if arr.dtype == object else FLOAT


def _scale(arr: np.ndarray):
    if arr.dtype == object:
        return 1
    m = float(np.max(np.abs(arr))) if arr.size else 0.0
    return max(m, 1.0)


def _close(a, b, mode, tol, scale=1.0) -> bool:
    if mode == EXACT:
        return a == b
    return abs(a - b) <= tol * scale


def _check_permutation_symmetry(arr, perms, mode, tol, what):
    scale = _scale(arr)
    for idx in itertools.product(range(3), repeat=arr.ndim):
        for perm in perms:
            jdx = tuple(idx[p] for p in perm)
            if not _close(arr[idx], arr[jdx], mode, tol, scale):
                raise SymmetryError(
                    f"{what}: component {idx} = {arr[idx]} differs from {jdx} = {arr[jdx]}")


_MINOR_MAJOR = ((1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1))
_ELASTIC_GROUP = ((0, 1, 2, 3), (1, 0, 2, 3), (0, 1, 3, 2), (1, 0, 3, 2),
                  (2, 3, 0, 1), (3, 2, 0, 1), (2, 3, 1, 0), (3, 2, 1, 0))


class ElasticityTensor:
    """Fourth-order tensor with minor and major symmetries (21 dof).

    Parameters
    ----------
    components : array-like, shape (3, 3, 3, 3)
        Exact (ints, Fractions, ``"p/q"`` strings) or float entries.
    tol : float
        Relative tolerance for the symmetry check in float mode; exact
        mode requires exact symmetry.
    """

    __slots__ = ("_c", "mode")

    def __init__(self, components, *, tol: float = FLOAT_SYMMETRY_TOL):
        if isinstance(components, ElasticityTensor):
            self._c, self.mode = components._c, components.mode
            return
        arr, mode = as_scalar_array(components, (3, 3, 3, 3))
        if mode == FLOAT and np.iscomplexobj(arr):
            raise ModeError("elasticity tensors must be real")
        if mode == EXACT and any(isinstance(x, GaussianRational) for x in arr.ravel()):
            raise ModeError("elasticity tensors must be real")
        _check_permutation_symmetry(arr, _MINOR_MAJOR, mode, tol, "elasticity tensor")
        if mode == FLOAT:
            arr = sum(arr.transpose(p) for p in _ELASTIC_GROUP) / 8.0
        arr.setflags(write=False)
        self._c = arr
        self.mode = mode

    @property
    def components(self) -> np.ndarray:
        """Read-only ``(3, 3, 3, 3)`` array."""
        return self._c

    @property
    def is_exact(self) -> bool:
        return self.mode == EXACT

    @classmethod
    def from_voigt(cls, m) -> "ElasticityTensor":
        return voigt_to_tensor(m)

    def to_voigt(self) -> np.ndarray:
        return tensor_to_voigt(self)

    @classmethod
    def isotropic(cls, lam, mu) -> "ElasticityTensor":
        """``C_ijkl = lam d_ij d_kl + mu (d_ik d_jl + d_il d_jk)``."""
        exact = is_exact_scalar(lam) and is_exact_scalar(mu)
        arr = np.zeros((3, 3, 3, 3), dtype=object if exact else np.float64)
        if exact:
            arr[...] = Fraction(0)
            lam, mu = Fraction(lam), Fraction(mu)
        for i, j, k, l in itertools.product(range(3), repeat=4):
            arr[i, j, k, l] = (lam * (i == j) * (k == l)
                               + mu * ((i == k) * (j == l) + (i == l) * (j == k)))
        return cls(arr)

    @classmethod
    def zeros(cls, mode: str = EXACT) -> "ElasticityTensor":
        if mode == EXACT:
            return cls(np.full((3, 3, 3, 3), Fraction(0), dtype=object))
        return cls(np.zeros((3, 3, 3, 3)))

    def astype_float(self) -> "ElasticityTensor":
        return ElasticityTensor(self._c.astype(np.float64))

    def _other(self, other):
        other = ElasticityTensor(other)
        if other.mode != self.mode:
            raise ModeError("cannot combine exact and float tensors")
        return other

    def __add__(self, other):
        return ElasticityTensor(self._c + self._other(other)._c)

    def __sub__(self, other):
        return ElasticityTensor(self._c - self._other(other)._c)

    def __mul__(self, s):
        if self.mode == EXACT and not is_exact_scalar(s):
            raise ModeError("exact tensor scaled by a float")
        if self.mode == EXACT:
            s = Fraction(s)
        return ElasticityTensor(self._c * s)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ElasticityTensor):
            return NotImplemented
        return bool(np.all(self._c == other._c))

    def __repr__(self):
        return f"ElasticityTensor(mode={self.mode!r}, voigt=\n{tensor_to_voigt(self)})"


def voigt_to_tensor(m) -> ElasticityTensor:
    """Build a tensor from a symmetric 6x6 Voigt matrix (raw components)."""
    arr, mode = as_scalar_array(m, (6, 6))
    scale = _scale(arr)
    for a in range(6):
        for b in range(a + 1, 6):
            if not _close(arr[a, b], arr[b, a], mode, FLOAT_SYMMETRY_TOL, scale):
                raise SymmetryError(
                    f"Voigt matrix not symmetric: m[{a}][{b}] = {arr[a, b]} but m[{b}][{a}] = {arr[b, a]}")
    c = np.empty((3, 3, 3, 3), dtype=arr.dtype)
    for i, j, k, l in itertools.product(range(3), repeat=4):
        c[i, j, k, l] = arr[VOIGT_INDEX[i, j], VOIGT_INDEX[k, l]]
    return ElasticityTensor(c)


def tensor_to_voigt(C: ElasticityTensor) -> np.ndarray:
    c = C.components
    m = np.empty((6, 6), dtype=c.dtype)
    for a, (i, j) in enumerate(VOIGT_PAIRS):
        for b, (k, l) in enumerate(VOIGT_PAIRS):
            m[a, b] = c[i, j, k, l]
    return m


def tensor_to_packed(C: ElasticityTensor) -> list:
    """The 21 independent components in :data:`VOIGT_UPPER` order."""
    m = tensor_to_voigt(C)
    return [m[a, b] for a, b in VOIGT_UPPER]


def packed_to_tensor(values) -> ElasticityTensor:
    values = list(values)
    if len(values) != 21:
        raise ValueError(f"expected 21 packed components, got {len(values)}")
    m = [[None] * 6 for _ in range(6)]
    for (a, b), x in zip(VOIGT_UPPER, values):
        m[a][b] = m[b][a] = x
    return voigt_to_tensor(m)


class Rotation:
    """Element of SO(3): ``R^T R = I`` and ``det R = 1``.

    Exact rotations are checked exactly, float ones to ``tol``. Complex
    orthogonal matrices (SO(3, C)) are accepted as well; they arise as images
    of SL(2, C) under the spinor cover.
    """

    __slots__ = ("_m", "mode")

    def __init__(self, matrix, *, tol: float = FLOAT_ROTATION_TOL):
        if isinstance(matrix, Rotation):
            self._m, self.mode = matrix._m, matrix.mode
            return
        m, mode = as_scalar_array(matrix, (3, 3))
        check_orthogonal(m, mode, tol)
        m.setflags(write=False)
        self._m = m
        self.mode = mode

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @classmethod
    def identity(cls, mode: str = EXACT) -> "Rotation":
        if mode == EXACT:
            return cls([[Fraction(int(i == j)) for j in range(3)] for i in range(3)])
        return cls(np.eye(3))

    def __matmul__(self, other: "Rotation") -> "Rotation":
        other = Rotation(other)
        if other.mode != self.mode:
            raise ModeError("cannot compose exact and float rotations")
        return Rotation(self._m @ other._m)

    def inverse(self) -> "Rotation":
        return Rotation(self._m.T.copy())

    def __eq__(self, other):
        if not isinstance(other, Rotation):
            return NotImplemented
        return bool(np.all(self._m == other._m))

    def __repr__(self):
        return f"Rotation({self._m.tolist()!r})"


def _det3(m):
    return (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))


def check_orthogonal(m: np.ndarray, mode: str, tol: float = FLOAT_ROTATION_TOL) -> None:
    gram = m.T @ m
    for i in range(3):
        for j in range(3):
            if not _close(gram[i, j], int(i == j), mode, tol):
                raise InvalidRotationError(
                    f"matrix is not orthogonal: (R^T R)[{i}][{j}] = {gram[i, j]}")
    if not _close(_det3(m), 1, mode, tol):
        raise InvalidRotationError(f"determinant is {_det3(m)}, expected 1")


def rotation_from_quaternion(w, x, y, z) -> Rotation:
    """Rotation matrix of the (not necessarily unit) quaternion ``w + xi + yj + zk``.

    The standard unit-quaternion formula is divided by the squared norm, so
    rational quaternions give exactly orthogonal rational matrices; ``q``
    and ``-q`` give the same rotation.
    """
    q = [w, x, y, z]
    exact = all(is_exact_scalar(t) or isinstance(t, str) for t in q)
    if exact:
        w, x, y, z = (Fraction(t) for t in q)
    else:
        w, x, y, z = (float(t) for t in q)
    n = w * w + x * x + y * y + z * z
    if n == 0:
        raise InvalidRotationError("zero quaternion has no rotation")
    m = [
        [w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z],
    ]
    return Rotation([[e / n for e in row] for row in m])


def _rotation_matrix(g) -> np.ndarray:
    return Rotation(g).matrix


def _match_modes(g: np.ndarray, t: np.ndarray):
    if array_mode(g) != array_mode(t):
        raise ModeError("rotation and tensor are in different arithmetic modes")


def rotate_tensor(g, t: np.ndarray) -> np.ndarray:
    """Apply ``g`` to every index of an arbitrary-order tensor on R^3."""
    g = _rotation_matrix(g)
    _match_modes(g, t)
    out = t
    for axis in range(t.ndim):
        out = np.moveaxis(np.tensordot(g, out, axes=([1], [axis])), 0, axis)
    return out


def rotate_elasticity(g, C: ElasticityTensor) -> ElasticityTensor:
    """``(g.C)_ijkl = g_ip g_jq g_kr g_ls C_pqrs``."""
    return ElasticityTensor(rotate_tensor(g, C.components))


def as_sym2(s, *, tol: float = FLOAT_SYMMETRY_TOL) -> np.ndarray:
    arr, mode = as_scalar_array(s, (3, 3))
    _check_permutation_symmetry(arr, ((1, 0),), mode, tol, "second-order tensor")
    return arr


def act_on_sym2(g, s) -> np.ndarray:
    """Congruence action ``g s g^T`` on a symmetric 2-tensor."""
    s = as_sym2(s)
    g = _rotation_matrix(g)
    _match_modes(g, s)
    return g @ s @ g.T


def trace2(s: np.ndarray):
    return s[0, 0] + s[1, 1] + s[2, 2]


def deviator(s: np.ndarray) -> np.ndarray:
    """Traceless part of a symmetric 2-tensor."""
    t = trace2(s)
    third = Fraction(1, 3) if s.dtype == object else 1.0 / 3.0
    out = s.copy()
    for i in range(3):
        out[i, i] = s[i, i] - t * third
    return out


def dilatation(C: ElasticityTensor) -> np.ndarray:
    """``d_ij = sum_k C_kkij``."""
    c = C.components
    return c[0, 0] + c[1, 1] + c[2, 2]


def voigt_tensor(C: ElasticityTensor) -> np.ndarray:
    """``v_ij = sum_k C_kikj``."""
    c = C.components
    return c[0, :, 0, :] + c[1, :, 1, :] + c[2, :, 2, :]
