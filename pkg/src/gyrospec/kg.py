"""Klein-Gordon gyroscope at the center of mass.

The stationary operator is Mc² Σ_i I_i⁻¹ L_i² on the (2l+1)-dim basis; its
eigenvalues λ give energies ±sqrt(λ + M²c⁴). For a symmetric top (I1 == I2)
the closed form

    E = ± sqrt( Mc² hbar² [ l(l+1)/I1 + (1/I3 - 1/I1) m² ] + M²c⁴ )

is also available and is validated against the numeric spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angular import build_orbital
from .errors import BadQuantumNumbers, InvalidParams, NotSymmetric
from .operators import eig_hermitian

SYMMETRY_TOL = 1e-12  # relative tolerance on |I1 - I2| for "symmetric top"


@dataclass(frozen=True)
class GyroParams:
    """Physical constants and principal moments of inertia, all strictly positive."""

    hbar: float = 1.0
    c: float = 1.0
    mass: float = 1.0
    i1: float = 1.0
    i2: float = 1.0
    i3: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "c", "mass", "i1", "i2", "i3"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InvalidParams(f"{name} must be a positive finite number, got {value!r}")

    @property
    def moments(self) -> tuple[float, float, float]:
        return (self.i1, self.i2, self.i3)

    @property
    def rest_energy(self) -> float:
        return self.mass * self.c**2

    def is_symmetric(self, tol: float = SYMMETRY_TOL) -> bool:
        return abs(self.i1 - self.i2) <= tol * max(self.i1, self.i2)

    def is_spherical(self, tol: float = SYMMETRY_TOL) -> bool:
        top = max(self.moments)
        return max(top - min(self.moments), 0.0) <= tol * top


@dataclass(frozen=True)
class SpectralLine:
    """One labeled eigenvalue of a gyroscope spectrum.

    m2 is the doubled projection label (2m for orbital lines, 2m_j for Dirac
    lines) so half-integers stay exact; it is None for numerically labeled
    lines of asymmetric tops, which instead carry idx, the energy-ordered index
    within their sign branch. branch is the secular branch (1 or 2) for
    symmetric Dirac lines.
    """

    l: int
    sign: int
    energy: float
    m2: int | None = None
    branch: int | None = None
    idx: int | None = None


def _check_l(l) -> int:
    if int(l) != l or l < 0:
        raise BadQuantumNumbers(f"l must be a non-negative integer, got {l!r}")
    return int(l)


def build_kg_operator(l: int, params: GyroParams) -> np.ndarray:
    """Mc² Σ_i I_i⁻¹ L_i² on the (2l+1)-dim |l, m> basis; Hermitian, PSD."""
    l = _check_l(l)
    ops = build_orbital(l, params.hbar)
    mc2 = params.rest_energy
    return mc2 * (
        ops.L1 @ ops.L1 / params.i1
        + ops.L2 @ ops.L2 / params.i2
        + ops.L3 @ ops.L3 / params.i3
    )


def kg_kinetic_symmetric(l: int, m: int, params: GyroParams) -> float:
    """Eigenvalue of the KG operator for the symmetric top, per (l, m)."""
    l = _check_l(l)
    if int(m) != m or abs(m) > l:
        raise BadQuantumNumbers(f"m must be an integer with |m| <= l, got m={m!r}, l={l}")
    if not params.is_symmetric():
        raise NotSymmetric(f"closed form needs I1 == I2, got I1={params.i1}, I2={params.i2}")
    mc2 = params.rest_energy
    hb2 = params.hbar**2
    return mc2 * hb2 * (l * (l + 1) / params.i1 + (1.0 / params.i3 - 1.0 / params.i1) * m * m)


def kg_energy_symmetric(l: int, m: int, params: GyroParams) -> tuple[float, float]:
    """Closed-form (E+, E-) for the symmetric top."""
    lam = kg_kinetic_symmetric(l, m, params)
    energy = math.sqrt(lam + params.rest_energy**2)
    return (energy, -energy)


def kg_energies_numeric(l: int, params: GyroParams) -> list[SpectralLine]:
    """Both ± branches from direct diagonalization; 2(2l+1) lines.

    Lines are labeled by idx, the ascending-eigenvalue rank of the underlying
    kinetic eigenvalue (the projection m is not a good label for an asymmetric
    top).
    """
    l = _check_l(l)
    dec = eig_hermitian(build_kg_operator(l, params))
    mc2sq = params.rest_energy**2
    lines: list[SpectralLine] = []
    for rank, lam in enumerate(dec.eigenvalues):
        energy = math.sqrt(max(float(lam), 0.0) + mc2sq)
        lines.append(SpectralLine(l=l, sign=+1, energy=energy, idx=rank))
        lines.append(SpectralLine(l=l, sign=-1, energy=-energy, idx=rank))
    return lines
