"""One-exponent analysis of unimodular 2x2 transfer matrices.

Any real 2x2 matrix with unit determinant can be written as a rotation and
squeeze conjugate of sign * exp(r M(theta)), where the traceless generator
M(theta) sweeps a rotation generator, a boost generator and the two shear
generators as theta crosses +/-pi/4.  The package provides the canonical
decomposition, the closed-form exponential with its independent series
oracle, O(1) periodic powers, and three applications: polarization rotation
under asymmetric attenuation, two-mirror resonator round trips, and
periodic layered stacks.
"""

from .activity import FieldSample, MediumParams, micro_product, rotation_full, trajectory, z_matrix
from .cavity import (
    CavityConfig,
    cavity_alpha,
    gap_matrix,
    half_cycle,
    mid_cavity_decomp,
    mirror_matrix,
    n_round_trips,
    stability,
)
from .expform import (
    ExpForm,
    boundary_expansion,
    exp_closed,
    exp_taylor,
    log_to_expform,
    m_of_theta,
    n_cycle,
)
from .multilayer import (
    CoreDecomp,
    LayerPair,
    boundary_matrix,
    complex_cycle,
    conjugate_to_real,
    core_decompose,
    core_equidiag,
    cycle,
    full_decompose,
    multilayer_branch,
    phase_matrix,
    stack,
)
from .sl2 import (
    Branch,
    DomainError,
    EquiDiag,
    WignerDecomp,
    boost,
    classify,
    default_tol,
    ensure_unimodular,
    equidiagonalize,
    reconstruct,
    rotation_half,
    squeeze,
    wigner_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CavityConfig",
    "CoreDecomp",
    "DomainError",
    "EquiDiag",
    "ExpForm",
    "FieldSample",
    "LayerPair",
    "MediumParams",
    "WignerDecomp",
    "boost",
    "boundary_expansion",
    "boundary_matrix",
    "cavity_alpha",
    "classify",
    "complex_cycle",
    "conjugate_to_real",
    "core_decompose",
    "core_equidiag",
    "cycle",
    "default_tol",
    "ensure_unimodular",
    "equidiagonalize",
    "exp_closed",
    "exp_taylor",
    "full_decompose",
    "gap_matrix",
    "half_cycle",
    "log_to_expform",
    "m_of_theta",
    "micro_product",
    "mid_cavity_decomp",
    "mirror_matrix",
    "multilayer_branch",
    "n_cycle",
    "n_round_trips",
    "phase_matrix",
    "reconstruct",
    "rotation_full",
    "rotation_half",
    "squeeze",
    "stability",
    "stack",
    "trajectory",
    "wigner_decompose",
    "z_matrix",
]
