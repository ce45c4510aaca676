"""Independent reference computations used by the tests.

These deliberately avoid the library's kernels: transvectants and Cartan
substitutions go through sympy's symbolic differentiation and expansion,
tensor contractions through explicit index loops.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

import sympy

from elastinv.scalars import GaussianRational, to_gaussian

u, v = sympy.symbols("u v")
x, y, z = sympy.symbols("x y z")


def to_sympy(c):
    if isinstance(c, complex):
        return sympy.Float(c.real) + sympy.I * sympy.Float(c.imag)
    g = to_gaussian(c)
    return sympy.Rational(g.real.numerator, g.real.denominator) + sympy.I * sympy.Rational(
        g.imag.numerator, g.imag.denominator)


def from_sympy(c) -> GaussianRational:
    re, im = sympy.re(c), sympy.im(c)
    return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def form_expr(f):
    p = f.degree
    return sum((to_sympy(c) * u ** (p - j) * v ** j for j, c in enumerate(f.coeffs)), sympy.Integer(0))


def expr_coeffs(expr, p):
    """Raw coefficients of a homogeneous degree-p expression in u, v."""
    poly = sympy.Poly(sympy.expand(expr), u, v)
    return [from_sympy(poly.coeff_monomial(u ** (p - j) * v ** j)) for j in range(p + 1)]


def transvectant_sympy(f, g, r):
    """Raw coefficients of (f, g)_r via symbolic differentiation."""
    F, G = form_expr(f), form_expr(g)
    out = sympy.Integer(0)
    for i in range(r + 1):
        df = sympy.diff(F, u, r - i, v, i) if r else F
        dg = sympy.diff(G, u, i, v, r - i) if r else G
        out += (-1) ** i * comb(r, i) * df * dg
    return expr_coeffs(out, f.degree + g.degree - 2 * r)


def poly_expr(p):
    return sum((to_sympy(c) * x ** i * y ** j * z ** k for (i, j, k), c in p.coeffs.items()),
               sympy.Integer(0))


def pullback_sympy(p):
    """Raw coefficients of h((u^2 - v^2)/2, (u^2 + v^2)/(2i), uv)."""
    sub = {x: (u ** 2 - v ** 2) / 2, y: (u ** 2 + v ** 2) / (2 * sympy.I), z: u * v}
    return expr_coeffs(poly_expr(p).subs(sub, simultaneous=True), 2 * p.degree)


def laplacian_sympy(p):
    e = poly_expr(p)
    return sympy.expand(sympy.diff(e, x, 2) + sympy.diff(e, y, 2) + sympy.diff(e, z, 2))


def rotate4_loops(g, c):
    """``C'_ijkl = g_ip g_jq g_kr g_ls C_pqrs`` by explicit summation."""
    out = [[[[0] * 3 for _ in range(3)] for _ in range(3)] for _ in range(3)]
    r3 = range(3)
    for i, j, k, l in itertools.product(r3, repeat=4):
        s = 0
        for p, q, r, t in itertools.product(r3, repeat=4):
            w = g[i][p] * g[j][q] * g[k][r] * g[l][t]
            if w:
                s += w * c[p][q][r][t]
        out[i][j][k][l] = s
    return out


def dilatation_loops(c):
    return [[sum(c[k][k][i][j] for k in range(3)) for j in range(3)] for i in range(3)]


def voigt_loops(c):
    return [[sum(c[k][i][k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def j2_loops(D):
    """tr(tr13 D^2) = sum D_ijpq D_pqij over all indices."""
    r3 = range(3)
    return sum(D[i][j][p][q] * D[p][q][i][j] for i, j, p, q in itertools.product(r3, repeat=4))


def j3_loops(D):
    """tr(tr13 D^3) = sum D_ijpq D_pqrs D_rsij."""
    r3 = range(3)
    total = 0
    for i, j, p, q in itertools.product(r3, repeat=4):
        a = D[i][j][p][q]
        if a:
            for r, s in itertools.product(r3, repeat=2):
                total += a * D[p][q][r][s] * D[r][s][i][j]
    return total


def matrix_traces(a, b):
    """I2, I3, J2, J3, K2, K3, L3, K4 via sympy matrices."""
    A = sympy.Matrix(3, 3, lambda i, j: to_sympy(a[i][j]))
    B = sympy.Matrix(3, 3, lambda i, j: to_sympy(b[i][j]))
    vals = [A ** 2, A ** 3, B ** 2, B ** 3, A * B, A ** 2 * B, A * B ** 2, A ** 2 * B ** 2]
    return [from_sympy(sympy.expand(m.trace())) for m in vals]


def quaternion_matrix_sympy(w, a, b, c):
    """Rotation matrix of a quaternion via sympy's Quaternion class."""
    q = sympy.Quaternion(w, a, b, c)
    return q.to_rotation_matrix()
