"""
Telling materials apart up to rotation
======================================

Two stiffness tensors describe the same material in different orientations
exactly when all 297 invariants agree. In exact mode the check is equality of
rationals; in float mode a relative tolerance separates rounding noise from a
genuine difference.
"""
import random
from collections import Counter

from elastinv import ElasticityTensor, full_basis, orbit_equivalent, rotate_elasticity
from elastinv.sampling import random_rotation, random_tensor

rng = random.Random(3)
C = random_tensor(rng)
g = random_rotation(rng)
rotated = rotate_elasticity(g, C)

vec = full_basis(C)
print(len(vec), "invariants; per degree:", sorted(Counter(i.degree for i in vec.ids).items()))
first = vec.ids[2]
print(f"{first.label} = {vec[2]}")

exact = orbit_equivalent(C, rotated)
print("exact, rotated copy:", "same" if exact else "different")

F = ElasticityTensor(C.components.astype(float))
F_rot = ElasticityTensor(rotated.components.astype(float))
print("float, rotated copy:", orbit_equivalent(F, F_rot).max_discrepancy)

bumped = F_rot.components.copy()
bumped[2, 2, 2, 2] += 1e-3
res = orbit_equivalent(F, ElasticityTensor(bumped))
print(f"float, C3333 + 1e-3: {'same' if res else 'different'}, "
      f"largest gap {res.max_discrepancy:.2e} at {res.worst.label}")
