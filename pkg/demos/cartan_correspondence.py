"""
Harmonic polynomials as binary forms
====================================

Substituting x = (u^2 - v^2)/2, y = (u^2 + v^2)/(2i), z = uv turns a harmonic
polynomial of degree n in (x, y, z) into a binary form of degree 2n. Rotations
become SL(2) substitutions on (u, v), which is what lets classical
transvectant calculus produce rotation invariants.
"""
import random

from elastinv import (BinaryForm, Poly3, cartan_pullback, cartan_pushforward, is_real_form,
                      sl2_act, sl2_to_so3, transvectant)
from elastinv.harmonic import act_on_poly
from elastinv.sampling import random_harmonic, random_sl2

rng = random.Random(7)

# z pulls back to uv, and the isotropic quadric to zero.
print("z   ->", cartan_pullback(Poly3.linear(0, 0, 1)))
print("q   ->", cartan_pullback(Poly3.q()))

# A real harmonic quartic gives a degree-8 form satisfying the reality condition.
h = random_harmonic(rng, 4)
f = cartan_pullback(h)
print("degree", f.degree, "real:", is_real_form(f))
print("round trip exact:", cartan_pushforward(f) == h)

# A spinor matrix gamma acts on forms, its image in SO(3) acts on polynomials,
# and the substitution intertwines the two.
gamma = random_sl2(rng, complex_entries=False)
g = sl2_to_so3(gamma)
print("equivariant:", sl2_act(gamma, f) == cartan_pullback(act_on_poly(g, h)))

# Transvectants are covariant, so (f, f)_8 is a rotation invariant of h.
print("(f, f)_8 =", transvectant(f, f, 8).value())
print("after rotation:", transvectant(sl2_act(gamma, f), sl2_act(gamma, f), 8).value())

# The Hessian of a binary cubic, computed as a second transvectant.
u3_plus_v3 = BinaryForm([1, 0, 0, 1])
print("(f, f)_2 of u^3 + v^3:", transvectant(u3_plus_v3, u3_plus_v3, 2))
