"""Random exact samples for tests and demos.

All samplers take a :class:`random.Random` so runs are reproducible.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .binary_forms import BinaryForm, cartan_pullback
from .harmonic import Poly3, harmonic_part, monomials
from .scalars import GaussianRational
from .tensor_core import ElasticityTensor, Rotation, packed_to_tensor, rotation_from_quaternion


def random_fraction(rng: random.Random, num: int = 20, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_gaussian(rng: random.Random, num: int = 20, den: int = 6) -> GaussianRational:
    return GaussianRational(random_fraction(rng, num, den), random_fraction(rng, num, den))


def random_tensor(rng: random.Random, num: int = 50, den: int = 7) -> ElasticityTensor:
    """Exact tensor with 21 independent random rational components."""
    return packed_to_tensor([random_fraction(rng, num, den) for _ in range(21)])


def random_rotation(rng: random.Random, bound: int = 10) -> Rotation:
    """Exact rotation from a nonzero quaternion with integer parts in ``[-bound, bound]``."""
    while True:
        q = [rng.randint(-bound, bound) for _ in range(4)]
        if any(q):
            return rotation_from_quaternion(*q)


def random_sl2(rng: random.Random, complex_entries: bool = True, bound: int = 5):
    """Exact 2x2 matrix of determinant 1, a product of elementary factors."""
    pick = (lambda: random_gaussian(rng, bound, 3)) if complex_entries else (
        lambda: random_fraction(rng, bound, 3))
    s, t = pick(), pick()
    d = Fraction(0)
    while d == 0:
        d = random_fraction(rng, bound, 3)
    # [[1, s], [0, 1]] [[1, 0], [t, 1]] diag(d, 1/d)
    a, b, c, e = 1 + s * t, s, t, 1
    return [[a * d, b / d], [c * d, e / d]]


def random_poly(rng: random.Random, degree: int, complex_coeffs: bool = False) -> Poly3:
    pick = (lambda: random_gaussian(rng)) if complex_coeffs else (lambda: random_fraction(rng))
    return Poly3(degree, {e: pick() for e in monomials(degree)})


def random_harmonic(rng: random.Random, degree: int, complex_coeffs: bool = False) -> Poly3:
    return harmonic_part(random_poly(rng, degree, complex_coeffs))


def random_form(rng: random.Random, degree: int, complex_coeffs: bool = True) -> BinaryForm:
    pick = (lambda: random_gaussian(rng)) if complex_coeffs else (lambda: random_fraction(rng))
    return BinaryForm([pick() for _ in range(degree + 1)])


def random_real_form(rng: random.Random, degree: int) -> BinaryForm:
    """Pullback of a random real harmonic polynomial (``degree`` must be even)."""
    return cartan_pullback(random_harmonic(rng, degree // 2))
