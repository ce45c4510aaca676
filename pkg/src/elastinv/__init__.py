"""Harmonic decomposition and polynomial invariants of 3D elasticity tensors."""
from .binary_forms import (BinaryForm, cartan_map, cartan_pullback, cartan_pushforward,
                           is_real_form, sl2_act, sl2_to_so3, transvectant)
from .covariant_tables import (Covariant, CovariantSet, helper_covariants,
                               s4s4_covariant_basis, s8_covariant_basis)
from .diophantine import (CandidateTransvectant, DiophantineSystem, brute_force_irreducible,
                          candidate_transvectants, irreducible_solutions)
from .errors import (ElastinvError, IncompleteSearchError, InvalidRotationError, ModeError,
                     SymmetryError)
from .harmonic import (HarmonicParts, Poly3, harmonic_decompose_elasticity,
                       harmonic_decompose_poly, harmonic_part, is_harmonic, laplacian,
                       poly_to_tensor, reconstruct_elasticity, tensor_to_poly)
from .invariants import (INVARIANT_IDS, InvariantId, InvariantVector, OrbitComparison,
                         full_basis, full_basis_many, joint_invariants_s8s4,
                         joint_invariants_s8s4s4, orbit_equivalent, trace_invariants_h2h2,
                         trace_invariants_h4)
from .scalars import EXACT, FLOAT, GaussianRational, I
from .tensor_core import (ElasticityTensor, Rotation, act_on_sym2, dilatation,
                          rotate_elasticity, rotation_from_quaternion, tensor_to_voigt,
                          voigt_tensor, voigt_to_tensor)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "cartan_map",
    "cartan_pullback",
    "cartan_pushforward",
    "is_real_form",
    "sl2_act",
    "sl2_to_so3",
    "transvectant",
    "Covariant",
    "CovariantSet",
    "helper_covariants",
    "s4s4_covariant_basis",
    "s8_covariant_basis",
    "CandidateTransvectant",
    "DiophantineSystem",
    "brute_force_irreducible",
    "candidate_transvectants",
    "irreducible_solutions",
    "ElastinvError",
    "IncompleteSearchError",
    "InvalidRotationError",
    "ModeError",
    "SymmetryError",
    "HarmonicParts",
    "Poly3",
    "harmonic_decompose_elasticity",
    "harmonic_decompose_poly",
    "harmonic_part",
    "is_harmonic",
    "laplacian",
    "poly_to_tensor",
    "reconstruct_elasticity",
    "tensor_to_poly",
    "INVARIANT_IDS",
    "InvariantId",
    "InvariantVector",
    "OrbitComparison",
    "full_basis",
    "full_basis_many",
    "joint_invariants_s8s4",
    "joint_invariants_s8s4s4",
    "orbit_equivalent",
    "trace_invariants_h2h2",
    "trace_invariants_h4",
    "EXACT",
    "FLOAT",
    "GaussianRational",
    "I",
    "ElasticityTensor",
    "Rotation",
    "act_on_sym2",
    "dilatation",
    "rotate_elasticity",
    "rotation_from_quaternion",
    "tensor_to_voigt",
    "voigt_tensor",
    "voigt_to_tensor",
]
