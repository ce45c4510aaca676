"""
Candidate joint covariants from a Diophantine system
====================================================

A transvectant (f^alpha, g^beta)_r of forms with orders a_i and b_j needs
sum alpha_i a_i >= r and sum beta_j b_j >= r. Writing the slack as u and v
gives a homogeneous linear system whose minimal nonnegative solutions list
every generator candidate. Here: one octic against two quartics.
"""
from elastinv.diophantine import (DiophantineSystem, brute_force_irreducible,
                                  candidate_transvectants, irreducible_solutions)

system = DiophantineSystem.gordan([8], [4, 4])
print("unknowns:", system.names)
sols = irreducible_solutions(system, cap=16)
print(len(sols), "minimal solutions")

# Enumerating the whole box is a slow but independent cross-check.
print("matches brute force:", sols == brute_force_irreducible(system, 8))

for cand in candidate_transvectants([8], [4, 4], cap=16):
    if cand.r:
        print(" ", cand)
