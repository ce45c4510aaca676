"""Minimal covariant bases of S8 and S4 + S4, evaluated on given forms.

Each table row ``(id, left, right, r, degree)`` defines
``id = (left, right)_r`` where ``left``/``right`` are products of earlier
covariants written as ``"f3.f7"`` or ``"h1^2"``. The seed covariants are
``f1 = f`` for S8 and ``h1 = h``, ``h2 = k`` for S4 + S4.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Callable, Iterator

from .binary_forms import BinaryForm, transvectant
from .errors import ModeError

S8_TABLE = (
    ('f2', 'f1', 'f1', 8, (2, 0)),
    ('f3', 'f1', 'f1', 6, (2, 4)),
    ('f4', 'f1', 'f1', 4, (2, 8)),
    ('f5', 'f1', 'f1', 2, (2, 12)),
    ('f6', 'f4', 'f1', 8, (3, 0)),
    ('f7', 'f5', 'f1', 8, (3, 4)),
    ('f8', 'f5', 'f1', 7, (3, 6)),
    ('f9', 'f5', 'f1', 6, (3, 8)),
    ('f10', 'f5', 'f1', 5, (3, 10)),
    ('f11', 'f5', 'f1', 4, (3, 12)),
    ('f12', 'f5', 'f1', 3, (3, 14)),
    ('f13', 'f5', 'f1', 1, (3, 18)),
    ('f14', 'f9', 'f1', 8, (4, 0)),
    ('f15', 'f11', 'f1', 8, (4, 4)),
    ('f16', 'f10', 'f1', 7, (4, 4)),
    ('f17', 'f12', 'f1', 8, (4, 6)),
    ('f18', 'f12', 'f1', 7, (4, 8)),
    ('f19', 'f13', 'f1', 8, (4, 10)),
    ('f20', 'f12', 'f1', 6, (4, 10)),
    ('f21', 'f13', 'f1', 7, (4, 12)),
    ('f22', 'f13', 'f1', 6, (4, 14)),
    ('f23', 'f13', 'f1', 4, (4, 18)),
    ('f24', 'f3^2', 'f1', 8, (5, 0)),
    ('f25', 'f20', 'f1', 8, (5, 2)),
    ('f26', 'f21', 'f1', 8, (5, 4)),
    ('f27', 'f20', 'f1', 7, (5, 4)),
    ('f28', 'f22', 'f1', 8, (5, 6)),
    ('f29', 'f21', 'f1', 7, (5, 6)),
    ('f30', 'f22', 'f1', 7, (5, 8)),
    ('f31', 'f23', 'f1', 8, (5, 10)),
    ('f32', 'f22', 'f1', 6, (5, 10)),
    ('f33', 'f21', 'f1', 5, (5, 10)),
    ('f34', 'f23', 'f1', 6, (5, 14)),
    ('f35', 'f3.f7', 'f1', 8, (6, 0)),
    ('f36', 'f33', 'f1', 8, (6, 2)),
    ('f37', 'f33', 'f1', 7, (6, 4)),
    ('f38', 'f32', 'f1', 7, (6, 4)),
    ('f39', 'f34', 'f1', 8, (6, 6)),
    ('f40', 'f33', 'f1', 6, (6, 6)),
    ('f41', 'f32', 'f1', 6, (6, 6)),
    ('f42', 'f34', 'f1', 7, (6, 8)),
    ('f43', 'f34', 'f1', 6, (6, 10)),
    ('f44', 'f7^2', 'f1', 8, (7, 0)),
    ('f45', 'f43', 'f1', 8, (7, 2)),
    ('f46', 'f42', 'f1', 7, (7, 2)),
    ('f47', 'f43', 'f1', 7, (7, 4)),
    ('f48', 'f42', 'f1', 6, (7, 4)),
    ('f49', 'f43', 'f1', 6, (7, 6)),
    ('f50', 'f42', 'f1', 5, (7, 6)),
    ('f51', 'f41', 'f1', 4, (7, 6)),
    ('f52', 'f7.f16', 'f1', 8, (8, 0)),
    ('f53', 'f51', 'f1', 6, (8, 2)),
    ('f54', 'f50', 'f1', 6, (8, 2)),
    ('f55', 'f51', 'f1', 5, (8, 4)),
    ('f56', 'f50', 'f1', 5, (8, 4)),
    ('f57', 'f51', 'f1', 4, (8, 6)),
    ('f58', 'f50', 'f1', 4, (8, 6)),
    ('f59', 'f15.f16', 'f1', 8, (9, 0)),
    ('f60', 'f58', 'f1', 6, (9, 2)),
    ('f61', 'f57', 'f1', 6, (9, 2)),
    ('f62', 'f16.f17', 'f1', 8, (9, 2)),
    ('f63', 'f58', 'f1', 5, (9, 4)),
    ('f64', 'f17.f25', 'f1', 8, (10, 0)),
    ('f65', 'f17.f27', 'f1', 8, (10, 2)),
    ('f66', 'f17.f26', 'f1', 8, (10, 2)),
    ('f67', 'f27.f29', 'f1', 8, (11, 2)),
    ('f68', 'f27.f28', 'f1', 8, (11, 2)),
    ('f69', 'f29.f38', 'f1', 8, (12, 2)),
)

S4S4_TABLE = (
    ('h3', 'h1', 'h1', 4, (2, 0, 0)),
    ('h4', 'h2', 'h2', 4, (0, 2, 0)),
    ('h5', 'h1', 'h2', 4, (1, 1, 0)),
    ('h6', 'h1', 'h2', 3, (1, 1, 2)),
    ('h7', 'h1', 'h1', 2, (2, 0, 4)),
    ('h8', 'h2', 'h2', 2, (0, 2, 4)),
    ('h9', 'h1', 'h2', 2, (1, 1, 4)),
    ('h10', 'h1', 'h2', 1, (1, 1, 6)),
    ('h11', 'h1', 'h7', 4, (3, 0, 0)),
    ('h12', 'h2', 'h8', 4, (0, 3, 0)),
    ('h13', 'h1', 'h8', 4, (1, 2, 0)),
    ('h14', 'h2', 'h7', 4, (2, 1, 0)),
    ('h15', 'h1', 'h8', 3, (1, 2, 2)),
    ('h16', 'h2', 'h7', 3, (2, 1, 2)),
    ('h17', 'h1', 'h8', 2, (1, 2, 4)),
    ('h18', 'h2', 'h7', 2, (2, 1, 4)),
    ('h19', 'h1', 'h7', 1, (3, 0, 6)),
    ('h20', 'h2', 'h8', 1, (0, 3, 6)),
    ('h21', 'h1', 'h8', 1, (1, 2, 6)),
    ('h22', 'h2', 'h7', 1, (2, 1, 6)),
    ('h23', 'h7', 'h8', 4, (2, 2, 0)),
    ('h24', 'h7', 'h8', 3, (2, 2, 2)),
    ('h25', 'h19', 'h2', 4, (3, 1, 2)),
    ('h26', 'h1', 'h20', 4, (1, 3, 2)),
    ('h27', 'h1^2', 'h20', 6, (2, 3, 2)),
    ('h28', 'h19', 'h2^2', 6, (3, 2, 2)),
)



@dataclass(frozen=True)
class Covariant:
    """A labelled covariant: its form, polynomial degree in the inputs, and order."""

    id: str
    form: BinaryForm
    degree: int | tuple[int, ...]
    order: int


class CovariantSet(Mapping):
    """Read-only ordered map ``id -> Covariant``."""

    def __init__(self, items: list[Covariant]):
        self._items = {c.id: c for c in items}

    def __getitem__(self, key: str) -> Covariant:
        return self._items[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def form(self, key: str) -> BinaryForm:
        return self._items[key].form

    def __repr__(self):
        return f"CovariantSet({list(self._items)})"


def evaluate_product(expr: str, lookup: Callable[[str], BinaryForm]) -> BinaryForm:
    """Evaluate ``"f3.f7"``, ``"h1^2.h8"`` and the like with ``lookup`` for each factor."""
    result = None
    for factor in expr.split("."):
        name, _, power = factor.partition("^")
        term = lookup(name) ** int(power) if power else lookup(name)
        result = term if result is None else result * term
    return result


def _check_degree(form: BinaryForm, degree: int, what: str):
    if not isinstance(form, BinaryForm):
        raise TypeError(f"{what} must be a BinaryForm, got {type(form).__name__}")
    if form.degree != degree:
        raise ValueError(f"{what} must have degree {degree}, got {form.degree}")


def _build(seeds: list[Covariant], table) -> CovariantSet:
    done = {c.id: c for c in seeds}

    def lookup(name):
        return done[name].form

    for cid, left, right, r, deg in table:
        form = transvectant(evaluate_product(left, lookup), evaluate_product(right, lookup), r)
        *degree, order = deg
        degree = degree[0] if len(degree) == 1 else tuple(degree)
        done[cid] = Covariant(cid, form, degree, order)
    return CovariantSet(list(done.values()))


def s8_covariant_basis(f: BinaryForm) -> CovariantSet:
    """The 69 generating covariants ``f1 .. f69`` of a degree-8 form."""
    _check_degree(f, 8, "f")
    return _build([Covariant("f1", f, 1, 8)], S8_TABLE)


def s4s4_covariant_basis(h: BinaryForm, k: BinaryForm) -> CovariantSet:
    """The 28 generating covariants ``h1 .. h28`` of a pair of quartics.

    Degrees are pairs ``(degree in h, degree in k)``.
    """
    _check_degree(h, 4, "h")
    _check_degree(k, 4, "k")
    if h.mode != k.mode:
        raise ModeError("h and k are in different arithmetic modes")
    return _build([Covariant("h1", h, (1, 0), 4), Covariant("h2", k, (0, 1), 4)], S4S4_TABLE)


def helper_covariants(h: BinaryForm) -> tuple[BinaryForm, BinaryForm]:
    """``h2_4 = (h, h)_2`` (order 4) and ``h3_6 = (h, h2_4)_1`` (order 6)."""
    _check_degree(h, 4, "h")
    h2_4 = transvectant(h, h, 2)
    return h2_4, transvectant(h, h2_4, 1)
