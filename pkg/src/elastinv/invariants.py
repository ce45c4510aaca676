"""The 297 generating invariants of the elasticity tensor and orbit comparison.

Assembly order of :func:`full_basis`:

1. ``lambda0``, ``mu0``;
2. the nine trace invariants ``J2 .. J10`` of ``D``;
3. ``I2, I3`` of ``a``, ``J2, J3`` of ``b``, then ``K2, K3, L3, K4``;
4. the 52 joint invariants of ``(f, h)``, then of ``(f, k)``;
5. the 174 joint invariants of ``(f, h, k)``.

Here ``f``, ``h``, ``k`` are the Cartan pullbacks of ``D``, ``a``, ``b``.
Joint rows are ``(degree, left, right, r)`` meaning ``(left, right)_r``; left
products use the covariants ``f1 .. f69`` of ``f``, right products use ``h``
with ``h2_4 = (h, h)_2`` and ``h3_6 = (h, h2_4)_1``, or the covariants
``h1 .. h28`` of ``(h, k)``.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .binary_forms import BinaryForm, cartan_pullback, transvectant
from .covariant_tables import (CovariantSet, evaluate_product, helper_covariants,
                               s4s4_covariant_basis, s8_covariant_basis)
from .errors import ModeError
from .harmonic import (check_harmonic2, check_harmonic4, harmonic_decompose_elasticity,
                       tensor_to_poly)
from .scalars import EXACT, FLOAT, to_gaussian
from .tensor_core import FLOAT_SYMMETRY_TOL, ElasticityTensor, array_mode, as_scalar_array

S8S4_TABLE = (
    (3, 'f3', 'h', 4),
    (3, 'f1', 'h^2', 8),
    (4, 'f1', 'h.h2_4', 8),
    (4, 'f4', 'h^2', 8),
    (4, 'f3', 'h2_4', 4),
    (4, 'f7', 'h', 4),
    (5, 'f1', 'h2_4^2', 8),
    (5, 'f4', 'h.h2_4', 8),
    (5, 'f5', 'h^3', 12),
    (5, 'f7', 'h2_4', 4),
    (5, 'f9', 'h^2', 8),
    (5, 'f15', 'h', 4),
    (5, 'f16', 'h', 4),
    (6, 'f4', 'h2_4^2', 8),
    (6, 'f5', 'h^2.h2_4', 12),
    (6, 'f11', 'h^3', 12),
    (6, 'f9', 'h.h2_4', 8),
    (6, 'f15', 'h2_4', 4),
    (6, 'f8', 'h3_6', 6),
    (6, 'f18', 'h^2', 8),
    (6, 'f16', 'h2_4', 4),
    (6, 'f26', 'h', 4),
    (6, 'f27', 'h', 4),
    (7, 'f5', 'h.h2_4^2', 12),
    (7, 'f10', 'h.h3_6', 10),
    (7, 'f11', 'h^2.h2_4', 12),
    (7, 'f18', 'h.h2_4', 8),
    (7, 'f17', 'h3_6', 6),
    (7, 'f21', 'h^3', 12),
    (7, 'f30', 'h^2', 8),
    (7, 'f27', 'h2_4', 4),
    (7, 'f26', 'h2_4', 4),
    (7, 'f37', 'h', 4),
    (7, 'f38', 'h', 4),
    (8, 'f47', 'h', 4),
    (8, 'f48', 'h', 4),
    (8, 'f37', 'h2_4', 4),
    (8, 'f38', 'h2_4', 4),
    (8, 'f42', 'h^2', 8),
    (8, 'f29', 'h3_6', 6),
    (8, 'f30', 'h.h2_4', 8),
    (8, 'f20', 'h.h3_6', 10),
    (8, 'f21', 'h^2.h2_4', 12),
    (8, 'f11', 'h.h2_4^2', 12),
    (9, 'f8^2', 'h^3', 12),
    (9, 'f48', 'h2_4', 4),
    (9, 'f47', 'h2_4', 4),
    (9, 'f55', 'h', 4),
    (9, 'f56', 'h', 4),
    (10, 'f56', 'h2_4', 4),
    (10, 'f63', 'h', 4),
    (11, 'f25^2', 'h', 4),
)

S8S4S4_TABLE = (
    (3, 'f1', 'h1.h2', 8),
    (4, 'f1', 'h1.h8', 8),
    (4, 'f1', 'h2.h9', 8),
    (4, 'f1', 'h2.h7', 8),
    (4, 'f1', 'h1.h9', 8),
    (4, 'f3', 'h9', 4),
    (4, 'f4', 'h1.h2', 8),
    (5, 'f1', 'h8.h9', 8),
    (5, 'f1', 'h2.h17', 8),
    (5, 'f1', 'h7.h8', 8),
    (5, 'f1', 'h2.h18', 8),
    (5, 'f1', 'h9^2', 8),
    (5, 'f1', 'h7.h9', 8),
    (5, 'f1', 'h1.h18', 8),
    (5, 'f4', 'h1.h8', 8),
    (5, 'f4', 'h2.h9', 8),
    (5, 'f5', 'h1.h2^2', 12),
    (5, 'f3', 'h17', 4),
    (5, 'f4', 'h2.h7', 8),
    (5, 'f3', 'h18', 4),
    (5, 'f4', 'h1.h9', 8),
    (5, 'f5', 'h1^2.h2', 12),
    (5, 'f9', 'h1.h2', 8),
    (5, 'f7', 'h9', 4),
    (5, 'f8', 'h10', 6),
    (6, 'f1', 'h8.h17', 8),
    (6, 'f1', 'h2.h6^2', 8),
    (6, 'f1', 'h9.h17', 8),
    (6, 'f1', 'h9.h18', 8),
    (6, 'f1', 'h1.h6^2', 8),
    (6, 'f1', 'h7.h18', 8),
    (6, 'f4', 'h2.h17', 8),
    (6, 'f5', 'h1.h2.h8', 12),
    (6, 'f4', 'h8.h9', 8),
    (6, 'f5', 'h2^2.h9', 12),
    (6, 'f4', 'h2.h18', 8),
    (6, 'f5', 'h1.h2.h9', 12),
    (6, 'f5', 'h1^2.h8', 12),
    (6, 'f4', 'h9^2', 8),
    (6, 'f4', 'h7.h8', 8),
    (6, 'f5', 'h2^2.h7', 12),
    (6, 'f5', 'h1^2.h9', 12),
    (6, 'f4', 'h7.h9', 8),
    (6, 'f4', 'h1.h18', 8),
    (6, 'f5', 'h1.h2.h7', 12),
    (6, 'f9', 'h1.h8', 8),
    (6, 'f8', 'h21', 6),
    (6, 'f10', 'h2.h10', 10),
    (6, 'f8', 'h2.h6', 6),
    (6, 'f9', 'h2.h9', 8),
    (6, 'f11', 'h1.h2^2', 12),
    (6, 'f11', 'h1^2.h2', 12),
    (6, 'f10', 'h1.h10', 10),
    (6, 'f9', 'h2.h7', 8),
    (6, 'f9', 'h1.h9', 8),
    (6, 'f8', 'h1.h6', 6),
    (6, 'f8', 'h22', 6),
    (6, 'f16', 'h9', 4),
    (6, 'f17', 'h10', 6),
    (6, 'f18', 'h1.h2', 8),
    (6, 'f15', 'h9', 4),
    (7, 'f5', 'h2^2.h17', 12),
    (7, 'f5', 'h1.h8^2', 12),
    (7, 'f5', 'h2.h8.h9', 12),
    (7, 'f5', 'h2^2.h18', 12),
    (7, 'f5', 'h1.h8.h9', 12),
    (7, 'f5', 'h2.h7.h8', 12),
    (7, 'f5', 'h2.h9^2', 12),
    (7, 'f5', 'h1.h9^2', 12),
    (7, 'f5', 'h2.h7.h9', 12),
    (7, 'f5', 'h1.h2.h18', 12),
    (7, 'f5', 'h1.h7.h8', 12),
    (7, 'f5', 'h1.h7.h9', 12),
    (7, 'f5', 'h1^2.h18', 12),
    (7, 'f5', 'h2.h7^2', 12),
    (7, 'f10', 'h2.h21', 10),
    (7, 'f10', 'h1.h20', 10),
    (7, 'f11', 'h2^2.h9', 12),
    (7, 'f11', 'h1.h2.h8', 12),
    (7, 'f10', 'h2^2.h6', 10),
    (7, 'f12', 'h2^2.h10', 14),
    (7, 'f10', 'h1.h2.h6', 10),
    (7, 'f11', 'h1^2.h8', 12),
    (7, 'f10', 'h1.h21', 10),
    (7, 'f10', 'h2.h22', 10),
    (7, 'f12', 'h1.h2.h10', 14),
    (7, 'f11', 'h1.h2.h9', 12),
    (7, 'f11', 'h2^2.h7', 12),
    (7, 'f9', 'h9^2', 8),
    (7, 'f10', 'h1.h22', 10),
    (7, 'f11', 'h1.h2.h7', 12),
    (7, 'f11', 'h1^2.h9', 12),
    (7, 'f10', 'h1^2.h6', 10),
    (7, 'f10', 'h2.h19', 10),
    (7, 'f12', 'h1^2.h10', 14),
    (7, 'f21', 'h1.h2^2', 12),
    (7, 'f18', 'h2.h9', 8),
    (7, 'f17', 'h21', 6),
    (7, 'f17', 'h2.h6', 6),
    (7, 'f20', 'h2.h10', 10),
    (7, 'f19', 'h2.h10', 10),
    (7, 'f18', 'h1.h8', 8),
    (7, 'f17', 'h1.h6', 6),
    (7, 'f18', 'h1.h9', 8),
    (7, 'f17', 'h22', 6),
    (7, 'f20', 'h1.h10', 10),
    (7, 'f21', 'h1^2.h2', 12),
    (7, 'f19', 'h1.h10', 10),
    (7, 'f18', 'h2.h7', 8),
    (7, 'f29', 'h10', 6),
    (7, 'f30', 'h1.h2', 8),
    (7, 'f26', 'h9', 4),
    (7, 'f27', 'h9', 4),
    (7, 'f28', 'h10', 6),
    (8, 'f37', 'h9', 4),
    (8, 'f38', 'h9', 4),
    (8, 'f40', 'h10', 6),
    (8, 'f41', 'h10', 6),
    (8, 'f42', 'h1.h2', 8),
    (8, 'f29', 'h21', 6),
    (8, 'f30', 'h1.h8', 8),
    (8, 'f30', 'h2.h9', 8),
    (8, 'f31', 'h2.h10', 10),
    (8, 'f32', 'h2.h10', 10),
    (8, 'f33', 'h2.h10', 10),
    (8, 'f29', 'h22', 6),
    (8, 'f30', 'h1.h9', 8),
    (8, 'f30', 'h2.h7', 8),
    (8, 'f31', 'h1.h10', 10),
    (8, 'f32', 'h1.h10', 10),
    (8, 'f33', 'h1.h10', 10),
    (8, 'f20', 'h2.h22', 10),
    (8, 'f20', 'h1.h2.h6', 10),
    (8, 'f21', 'h1^2.h8', 12),
    (8, 'f21', 'h1.h2.h9', 12),
    (8, 'f21', 'h2^2.h7', 12),
    (8, 'f22', 'h1.h2.h10', 14),
    (8, 'f20', 'h1.h22', 10),
    (8, 'f20', 'h1^2.h6', 10),
    (8, 'f21', 'h1^2.h9', 12),
    (8, 'f21', 'h1.h2.h7', 12),
    (8, 'f22', 'h1^2.h10', 14),
    (8, 'f11', 'h2.h7.h9', 12),
    (8, 'f12', 'h1^2.h2.h6', 14),
    (8, 'f13', 'h1^2.h2.h10', 18),
    (8, 'f11', 'h2.h7^2', 12),
    (8, 'f12', 'h1^3.h6', 14),
    (8, 'f13', 'h1^3.h10', 18),
    (8, 'f11', 'h2.h9^2', 12),
    (8, 'f12', 'h1.h2^2.h6', 14),
    (8, 'f13', 'h1.h2^2.h10', 18),
    (8, 'f20', 'h2.h21', 10),
    (8, 'f20', 'h2^2.h6', 10),
    (8, 'f21', 'h1.h2.h8', 12),
    (8, 'f21', 'h2^2.h9', 12),
    (8, 'f22', 'h2^2.h10', 14),
    (8, 'f11', 'h2.h8.h9', 12),
    (8, 'f12', 'h2^3.h6', 14),
    (8, 'f13', 'h2^3.h10', 18),
    (9, 'f1.f25', 'h2.h10', 10),
    (9, 'f43', 'h2.h10', 10),
    (9, 'f8^2', 'h1.h2^2', 12),
    (9, 'f1.f25', 'h1.h10', 10),
    (9, 'f8^2', 'h1^2.h2', 12),
    (9, 'f43', 'h1.h10', 10),
    (9, 'f3.f25', 'h10', 6),
    (9, 'f51', 'h10', 6),
    (9, 'f48', 'h9', 4),
    (9, 'f47', 'h9', 4),
    (10, 'f54', 'h6', 2),
    (10, 'f56', 'h9', 4),
    (11, 'f61', 'h6', 2),
    (11, 'f62', 'h6', 2),
    (11, 'f63', 'h9', 4),
)


FAMILIES = ("H0-lambda", "H0-mu", "H4-simple", "H2a-simple", "H2b-simple",
            "H2H2-joint", "H4H2a-joint", "H4H2b-joint", "H4H2H2-joint")

DEGREE_HISTOGRAM = (2, 4, 10, 16, 33, 57, 76, 66, 21, 7, 5)
BASIS_SIZE = 297


class InvariantId(NamedTuple):
    family: str
    degree: int
    index: int
    label: str

    def __str__(self):
        return f"{self.family}:{self.degree}:{self.index}"


# ---------------------------------------------------------------- trace invariants

def _as_harmonic4(D, tol):
    arr, _ = as_scalar_array(D, (3, 3, 3, 3))
    check_harmonic4(arr, "D", tol)
    return arr


def _as_harmonic2(s, name, tol):
    arr, _ = as_scalar_array(s, (3, 3))
    check_harmonic2(arr, name, tol)
    return arr


def _tr(m):
    return m[0, 0] + m[1, 1] + m[2, 2]


def trace_invariants_h4(D, *, tol: float = FLOAT_SYMMETRY_TOL) -> list:
    """``J2 .. J10`` of a harmonic fourth-order tensor, ``J_k = tr d_k``.

    ``d2 = tr13 D^2``, ``d3 = tr13 D^3`` and the higher ``d_k`` are matrix
    products of ``d2`` with ``D`` applied to ``d2`` or ``d2^2``.
    """
    D = _as_harmonic4(D, tol)

    def Dx(x):
        return np.tensordot(D, x, axes=([2, 3], [0, 1]))

    D2 = np.tensordot(D, D, axes=([2, 3], [0, 1]))
    D3 = np.tensordot(D2, D, axes=([2, 3], [0, 1]))
    d2 = np.trace(D2, axis1=0, axis2=2)
    d3 = np.trace(D3, axis1=0, axis2=2)
    d4 = d2 @ d2
    ds = [d2, d3, d4, d2 @ Dx(d2), d4 @ d2, d4 @ Dx(d2), d4 @ Dx(Dx(d2)),
          d4 @ Dx(d4), d4 @ Dx(Dx(d4))]
    return [_tr(d) for d in ds]


def trace_invariants_h2h2(a, b, *, tol: float = FLOAT_SYMMETRY_TOL) -> list:
    """``[I2, I3, J2, J3, K2, K3, L3, K4]`` of two traceless symmetric matrices."""
    a = _as_harmonic2(a, "a", tol)
    b = _as_harmonic2(b, "b", tol)
    if array_mode(a) != array_mode(b):
        raise ModeError("a and b are in different arithmetic modes")
    a2, b2 = a @ a, b @ b
    return [_tr(a2), _tr(a2 @ a), _tr(b2), _tr(b2 @ b),
            _tr(a @ b), _tr(a2 @ b), _tr(a @ b2), _tr(a2 @ b2)]


# ---------------------------------------------------------------- joint invariants

def _joint_label(left, right, r):
    return f"({left}, {right})_{r}"


def _evaluate_rows(rows, lookup) -> list:
    out = []
    for _, left, right, r in rows:
        form = transvectant(evaluate_product(left, lookup), evaluate_product(right, lookup), r)
        if form.degree != 0:
            raise ValueError(f"row {_joint_label(left, right, r)} has order {form.degree}, not 0")
        out.append(form.value())
    return out


def _check_form(form, degree, name):
    if not isinstance(form, BinaryForm) or form.degree != degree:
        got = form.degree if isinstance(form, BinaryForm) else type(form).__name__
        raise ValueError(f"{name} must be a binary form of degree {degree}, got {got}")


def _s8s4_values(fcov: CovariantSet, h: BinaryForm) -> list:
    h2_4, h3_6 = helper_covariants(h)
    forms = {"h": h, "h2_4": h2_4, "h3_6": h3_6}

    def lookup(name):
        return forms[name] if name in forms else fcov.form(name)

    return _evaluate_rows(S8S4_TABLE, lookup)


def _s8s4s4_values(fcov: CovariantSet, hcov: CovariantSet) -> list:
    def lookup(name):
        return (hcov if name.startswith("h") else fcov).form(name)

    return _evaluate_rows(S8S4S4_TABLE, lookup)


def joint_invariants_s8s4(f: BinaryForm, h: BinaryForm) -> list:
    """The 52 joint invariants of a degree-8 form ``f`` and a quartic ``h``."""
    _check_form(f, 8, "f")
    _check_form(h, 4, "h")
    if f.mode != h.mode:
        raise ModeError("f and h are in different arithmetic modes")
    return _s8s4_values(s8_covariant_basis(f), h)


def joint_invariants_s8s4s4(f: BinaryForm, h: BinaryForm, k: BinaryForm) -> list:
    """The 174 joint invariants of ``f`` (degree 8) and quartics ``h``, ``k``."""
    _check_form(f, 8, "f")
    _check_form(h, 4, "h")
    _check_form(k, 4, "k")
    if len({f.mode, h.mode, k.mode}) > 1:
        raise ModeError("f, h and k are in different arithmetic modes")
    return _s8s4s4_values(s8_covariant_basis(f), s4s4_covariant_basis(h, k))


# ---------------------------------------------------------------- full basis

def _build_ids() -> tuple[InvariantId, ...]:
    entries = [("H0-lambda", 1, "lambda0"), ("H0-mu", 1, "mu0")]
    entries += [("H4-simple", k, f"J{k}(D)") for k in range(2, 11)]
    entries += [("H2a-simple", 2, "I2"), ("H2a-simple", 3, "I3"),
                ("H2b-simple", 2, "J2"), ("H2b-simple", 3, "J3")]
    entries += [("H2H2-joint", 2, "K2"), ("H2H2-joint", 3, "K3"),
                ("H2H2-joint", 3, "L3"), ("H2H2-joint", 4, "K4")]
    for family, var in (("H4H2a-joint", "h"), ("H4H2b-joint", "k")):
        for deg, left, right, r in S8S4_TABLE:
            if var == "k":
                right = right.replace("h", "k")
            entries.append((family, deg, _joint_label(left, right, r)))
    entries += [("H4H2H2-joint", deg, _joint_label(left, right, r))
                for deg, left, right, r in S8S4S4_TABLE]
    seen = Counter()
    ids = []
    for family, deg, label in entries:
        ids.append(InvariantId(family, deg, seen[family, deg], label))
        seen[family, deg] += 1
    return tuple(ids)


INVARIANT_IDS = _build_ids()


@dataclass(frozen=True)
class InvariantVector:
    """The 297 invariant values of one tensor, in the fixed order of ``INVARIANT_IDS``.

    Exact values are GaussianRationals, float values Python complex numbers.
    """

    values: tuple
    mode: str

    @property
    def ids(self) -> tuple[InvariantId, ...]:
        return INVARIANT_IDS

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(zip(INVARIANT_IDS, self.values))

    def __getitem__(self, i):
        return self.values[i]

    def as_complex(self) -> np.ndarray:
        return np.array([complex(v) for v in self.values], dtype=np.complex128)

    def family(self, name: str) -> list:
        return [v for i, v in self if i.family == name]


def harmonic_forms(C: ElasticityTensor) -> tuple:
    """Decompose ``C`` and return ``(parts, f, h, k)`` with the pulled-back forms."""
    parts = harmonic_decompose_elasticity(C)
    f = cartan_pullback(tensor_to_poly(parts.D))
    h = cartan_pullback(tensor_to_poly(parts.a))
    k = cartan_pullback(tensor_to_poly(parts.b))
    return parts, f, h, k


def full_basis(C: ElasticityTensor) -> InvariantVector:
    """Evaluate all 297 invariants of ``C`` in its arithmetic mode."""
    C = ElasticityTensor(C)
    parts, f, h, k = harmonic_forms(C)
    fcov = s8_covariant_basis(f)
    values = [parts.lambda0, parts.mu0]
    values += trace_invariants_h4(parts.D)
    values += trace_invariants_h2h2(parts.a, parts.b)
    values += _s8s4_values(fcov, h)
    values += _s8s4_values(fcov, k)
    values += _s8s4s4_values(fcov, s4s4_covariant_basis(h, k))
    mode = EXACT if C.is_exact else FLOAT
    conv = to_gaussian if mode == EXACT else complex
    return InvariantVector(tuple(conv(v) for v in values), mode)


def default_workers() -> int:
    """Worker cap from ``ELASTINV_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("ELASTINV_THREADS", "1")))
    except ValueError:
        return 1


def full_basis_many(tensors, workers: int | None = None) -> list[InvariantVector]:
    """:func:`full_basis` over several tensors, optionally in worker processes.

    Output order follows input order whatever the worker count.
    """
    tensors = list(tensors)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(tensors) <= 1:
        return [full_basis(C) for C in tensors]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(full_basis, tensors))


# ---------------------------------------------------------------- orbit comparison

@dataclass(frozen=True)
class OrbitComparison:
    """Verdict of :func:`orbit_equivalent` with the largest relative discrepancy."""

    equivalent: bool
    max_discrepancy: float
    worst: InvariantId | None
    tol: float

    def __bool__(self):
        return self.equivalent


def _relative_gap(v1, v2) -> float:
    a, b = complex(v1), complex(v2)
    return abs(a - b) / (1.0 + abs(a) + abs(b))


def orbit_equivalent(C1: ElasticityTensor, C2: ElasticityTensor,
                     tol: float | None = None) -> OrbitComparison:
    """Compare all 297 invariants of two tensors.

    The relative gap of one invariant is ``|v1 - v2| / (1 + |v1| + |v2|)``.
    The tensors count as equivalent when the largest gap is at most ``tol``
    (default ``0`` for exact input, ``1e-9`` for float input). With exact
    input and ``tol = 0`` the comparison is exact equality of all values.
    """
    C1, C2 = ElasticityTensor(C1), ElasticityTensor(C2)
    if C1.is_exact != C2.is_exact:
        raise ModeError("cannot compare an exact tensor with a float tensor")
    if tol is None:
        tol = 0.0 if C1.is_exact else 1e-9
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    v1, v2 = full_basis(C1), full_basis(C2)
    worst, gap = None, 0.0
    for ident, a, b in zip(INVARIANT_IDS, v1.values, v2.values):
        if a == b:
            continue
        g = _relative_gap(a, b)
        if worst is None or g > gap:
            worst, gap = ident, g
    if C1.is_exact and tol == 0:
        equivalent = worst is None
    else:
        equivalent = gap <= tol
    return OrbitComparison(equivalent, gap, worst, tol)
