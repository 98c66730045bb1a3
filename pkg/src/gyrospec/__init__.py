"""gyrospec: spectra of relativistic quantum rigid rotors.

Builds the Klein-Gordon and Dirac gyroscope operators on finite angular
momentum bases, evaluates the closed-form energy formulas, and verifies each
against brute-force diagonalization; a covariant classical-kinematics module
checks the Lorentz-invariant construction numerically.
"""

from .angular import AngularOperators, DiracBlocks, build_dirac_blocks, build_orbital, ladder
from .covariant import (
    ParticleSystem,
    b_vector,
    boost,
    classical_energy,
    four_velocity,
    inertia_tensor_covariant,
    inverse_sqrt_inertia,
    jacobi_identity_residual,
    jacobi_transform,
    mass_shell_residual,
    minkowski_dot,
    pauli_lubanski,
    transverse_project,
)
from .dirac import (
    DiracEigenpair,
    DiracGyroParams,
    build_dirac_hamiltonian,
    dirac_energies_numeric,
    dirac_energy_nonabelian,
    dirac_energy_spherical,
    dirac_energy_symmetric,
    f_symmetric,
    fit_spin_orbit_coefficient,
    spinor_chi,
    squared_hamiltonian_residual,
)
from .errors import (
    BadQuantumNumbers,
    ConfigError,
    DegenerateEnergy,
    DegenerateInertia,
    GyrospecError,
    InvalidParams,
    NoConvergence,
    NotHermitian,
    NotSymmetric,
    NotTimelike,
    SuperluminalVelocity,
)
from .kg import (
    GyroParams,
    SpectralLine,
    build_kg_operator,
    kg_energies_numeric,
    kg_energy_symmetric,
)
from .operators import EigenDecomposition, eig_hermitian, hermiticity_residual, kron
from .validation import run_validation

__version__ = "0.1.0"

__all__ = [
    "AngularOperators",
    "BadQuantumNumbers",
    "ConfigError",
    "DegenerateEnergy",
    "DegenerateInertia",
    "DiracBlocks",
    "DiracEigenpair",
    "DiracGyroParams",
    "EigenDecomposition",
    "GyroParams",
    "GyrospecError",
    "InvalidParams",
    "NoConvergence",
    "NotHermitian",
    "NotSymmetric",
    "NotTimelike",
    "ParticleSystem",
    "SpectralLine",
    "SuperluminalVelocity",
    "b_vector",
    "boost",
    "build_dirac_blocks",
    "build_dirac_hamiltonian",
    "build_kg_operator",
    "build_orbital",
    "classical_energy",
    "dirac_energies_numeric",
    "dirac_energy_nonabelian",
    "dirac_energy_spherical",
    "dirac_energy_symmetric",
    "eig_hermitian",
    "f_symmetric",
    "fit_spin_orbit_coefficient",
    "four_velocity",
    "hermiticity_residual",
    "inertia_tensor_covariant",
    "inverse_sqrt_inertia",
    "jacobi_identity_residual",
    "jacobi_transform",
    "kg_energies_numeric",
    "kg_energy_symmetric",
    "kron",
    "ladder",
    "mass_shell_residual",
    "minkowski_dot",
    "pauli_lubanski",
    "run_validation",
    "spinor_chi",
    "squared_hamiltonian_residual",
    "transverse_project",
]
