"""
Harmonic pieces of a cubic crystal
==================================

A cubic stiffness tensor has no preferred second-order direction, so both
traceless matrices of its decomposition vanish and all anisotropy sits in the
fourth-order harmonic part D. Values below are copper-like (GPa) and kept as
integers so the whole computation stays exact.
"""
from fractions import Fraction

from elastinv import ElasticityTensor, harmonic_decompose_elasticity, reconstruct_elasticity
from elastinv.tensor_core import tensor_to_voigt

C11, C12, C44 = 168, 121, 75
voigt = [[C11, C12, C12, 0, 0, 0],
         [C12, C11, C12, 0, 0, 0],
         [C12, C12, C11, 0, 0, 0],
         [0, 0, 0, C44, 0, 0],
         [0, 0, 0, 0, C44, 0],
         [0, 0, 0, 0, 0, C44]]
C = ElasticityTensor.from_voigt([[Fraction(x) for x in row] for row in voigt])

# The isotropic scalars are traces of the dilatation and Voigt contractions.
parts = harmonic_decompose_elasticity(C)
print("lambda0 =", parts.lambda0, " mu0 =", parts.mu0)
print("a is zero:", not parts.a.any(), " b is zero:", not parts.b.any())
print("D_1111 =", parts.D[0, 0, 0, 0], " D_1122 =", parts.D[0, 0, 1, 1])

# The anisotropy ratio 2 C44 / (C11 - C12) equals 1 exactly when D vanishes.
print("Zener ratio:", Fraction(2 * C44, C11 - C12))

# Reassembling the five pieces gives back the input, exactly.
back = reconstruct_elasticity(parts)
print("reconstruction exact:", (tensor_to_voigt(back) == tensor_to_voigt(C)).all())
