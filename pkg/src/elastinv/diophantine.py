"""Minimal nonnegative solutions of homogeneous linear Diophantine systems.

Gordan's construction of joint covariants of two form spaces with orders
``a_1..a_p`` and ``b_1..b_q`` needs the irreducible solutions
``(alpha, beta, u, v, r)`` of

    sum_i alpha_i a_i = u + r,        sum_j beta_j b_j = v + r,

each giving a candidate transvectant
``(f_1^alpha_1 ... f_p^alpha_p, g_1^beta_1 ... g_q^beta_q)_r``.

Systems are stored as an integer matrix ``A`` with unknowns ``x >= 0`` and
``A x = 0``. Solutions are found by the Contejean-Devie completion: starting
from the unit vectors, a non-solution ``x`` is extended by ``e_j`` only when
``<A x, A e_j> < 0`` (the step moves ``A x`` towards 0), and a candidate is
dropped once it dominates a solution already found.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IncompleteSearchError

DEFAULT_CAP = 64


@dataclass(frozen=True)
class DiophantineSystem:
    """``A x = 0`` over nonnegative integer vectors ``x``."""

    matrix: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in row) for row in self.matrix)
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("the system matrix must be a nonempty rectangular integer matrix")
        object.__setattr__(self, "matrix", rows)
        if self.names is not None and len(self.names) != len(rows[0]):
            raise ValueError(f"{len(self.names)} names for {len(rows[0])} unknowns")

    @classmethod
    def gordan(cls, orders_a, orders_b) -> "DiophantineSystem":
        """The system for joint covariants of forms of orders ``orders_a`` and ``orders_b``."""
        a = [int(x) for x in orders_a]
        b = [int(x) for x in orders_b]
        if any(x < 0 for x in a + b):
            raise ValueError("form orders must be nonnegative")
        p, q = len(a), len(b)
        row1 = a + [0] * q + [-1, 0, -1]
        row2 = [0] * p + b + [0, -1, -1]
        names = tuple([f"alpha{i + 1}" for i in range(p)] + [f"beta{j + 1}" for j in range(q)]
                      + ["u", "v", "r"])
        return cls((tuple(row1), tuple(row2)), names)

    @property
    def nvars(self) -> int:
        return len(self.matrix[0])

    def residual(self, x) -> tuple[int, ...]:
        return tuple(sum(c * xi for c, xi in zip(row, x)) for row in self.matrix)

    def is_solution(self, x) -> bool:
        return all(xi >= 0 for xi in x) and not any(self.residual(x))


def _dominates(x, y) -> bool:
    return all(a >= b for a, b in zip(x, y))


def irreducible_solutions(system: DiophantineSystem, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All minimal nonzero solutions of ``system``, sorted.

    ``cap`` bounds every component of the search frontier. If a live
    candidate exceeds it, :class:`IncompleteSearchError` is raised rather than
    returning a partial set.
    """
    n = system.nvars
    cols = [tuple(row[j] for row in system.matrix) for j in range(n)]
    found: list[tuple[int, ...]] = []
    frontier = {tuple(int(i == j) for i in range(n)): cols[j] for j in range(n)}
    while frontier:
        solutions = [x for x, ax in frontier.items() if not any(ax)]
        found.extend(solutions)
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for x, ax in frontier.items():
            if not any(ax):
                continue
            for j in range(n):
                if sum(s * t for s, t in zip(ax, cols[j])) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt or any(_dominates(y, s) for s in found):
                    continue
                if y[j] > cap:
                    raise IncompleteSearchError(
                        f"search needs a component above the cap {cap}; raise the cap to certify completeness")
                nxt[y] = tuple(s + t for s, t in zip(ax, cols[j]))
        frontier = nxt
    return sorted(found)


def brute_force_irreducible(system: DiophantineSystem, bound: int) -> list[tuple[int, ...]]:
    """Minimal nonzero solutions with every component at most ``bound``, by enumeration."""
    n = system.nvars
    A = np.array(system.matrix, dtype=np.int64)
    # Enumerate the box in slabs over the first unknown to bound memory.
    if n > 1:
        tail = np.indices((bound + 1,) * (n - 1), dtype=np.int64).reshape(n - 1, -1).T
    else:
        tail = np.zeros((1, 0), dtype=np.int64)
    chunks = []
    for x0 in range(bound + 1):
        block = np.hstack([np.full((len(tail), 1), x0, dtype=np.int64), tail])
        chunks.append(block[np.all(block @ A.T == 0, axis=1)])
    sols = np.vstack(chunks)
    sols = sols[sols.sum(axis=1) > 0]
    sols = sols[np.argsort(sols.sum(axis=1), kind="stable")]
    minimal = np.empty((0, n), dtype=np.int64)
    for x in sols:
        if minimal.size and np.any(np.all(x >= minimal, axis=1)):
            continue
        minimal = np.vstack([minimal, x])
    return sorted(tuple(int(v) for v in row) for row in minimal)


@dataclass(frozen=True)
class CandidateTransvectant:
    """``(f^alpha, g^beta)_r`` with exponent vectors over the two form lists."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    r: int

    def __str__(self):
        def prod(exps, sym):
            parts = [f"{sym}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e]
            return ".".join(parts) or "1"
        return f"({prod(self.alpha, 'f')}, {prod(self.beta, 'g')})_{self.r}"


def candidate_transvectants(orders_a, orders_b, cap: int = DEFAULT_CAP) -> list[CandidateTransvectant]:
    """One candidate transvectant per irreducible solution of the Gordan system."""
    orders_a, orders_b = list(orders_a), list(orders_b)
    if not orders_a and not orders_b:
        return []
    system = DiophantineSystem.gordan(orders_a, orders_b)
    p, q = len(orders_a), len(orders_b)
    out = []
    for x in irreducible_solutions(system, cap):
        alpha, beta, r = x[:p], x[p:p + q], x[-1]
        left = sum(e * o for e, o in zip(alpha, orders_a))
        right = sum(e * o for e, o in zip(beta, orders_b))
        if left >= r and right >= r:
            out.append(CandidateTransvectant(alpha, beta, r))
    return out
