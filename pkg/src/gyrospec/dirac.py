"""Dirac gyroscope at the center of mass.

Ground truth is the matrix Hamiltonian built from first principles,

    abelian:     H = sqrt(M) c Σ_i α_i I_i^{-1/2} L_i  +  β3 Mc²
    nonabelian:  H = (β·v̂) K + β3 Mc²,   K = c1 (S+L- + S-L+) + c3 S3 L3

on the 4(2l+1)-dim (big/small) ⊗ (spin) ⊗ (orbital) space. All closed forms are
validated against its brute-force spectrum.

Conventions resolved numerically (see also the validation report):

* With plain ladders (L± = L1 ± iL2) the kinetic operator K reproduces the
  abelian Hamiltonian using c1 = (c/hbar) sqrt(M/I1), c3 = (2c/hbar) sqrt(M/I3).
  The closed-form eigenvalue f_symmetric is stated in the rescaled "symmetric"
  convention c1_sym = 2*c1, the one in which the spherical top is exactly
  c1_sym == c3; DiracGyroParams exposes both.
* The discriminant of the 2x2 secular problem carries the projection term
  4(c3² - c1²)(m_j² - 1/4) in the symmetric convention. The sign-flipped
  variant with 4(c1² - c3²) is kept only as a negative control: away from the
  spherical point it does not reproduce the numeric spectrum.
* Branch i=1 is the upper secular root and maps to j = l + 1/2 in the
  spherical limit; i=2 is the lower root, j = l - 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angular import build_dirac_blocks, build_orbital, ladder
from .errors import (
    BadQuantumNumbers,
    DegenerateEnergy,
    InvalidParams,
    NotSymmetric,
)
from .kg import GyroParams, SpectralLine, _check_l
from .operators import eig_hermitian, frobenius, kron

UNIT_VECTOR_TOL = 1e-12
SPIN_ORBIT_STRENGTH = 2.0  # resolved coefficient of the cross-product L·S term in H²


@dataclass(frozen=True)
class DiracGyroParams:
    """Gyroscope parameters plus the Dirac-sector variant.

    v is the unit 3-vector steering the nonabelian inverse-sqrt inertia tensor;
    it is required (and must be unit to 1e-12) exactly when variant is
    "nonabelian".
    """

    base: GyroParams
    variant: str = "abelian"
    v: tuple[float, float, float] | None = None

    def __post_init__(self):
        if self.variant not in ("abelian", "nonabelian"):
            raise InvalidParams(f"variant must be 'abelian' or 'nonabelian', got {self.variant!r}")
        if self.variant == "nonabelian":
            if self.v is None:
                raise InvalidParams("nonabelian variant requires the unit vector v")
            v = np.asarray(self.v, dtype=float)
            if v.shape != (3,) or not np.all(np.isfinite(v)):
                raise InvalidParams(f"v must be a finite 3-vector, got {self.v!r}")
            if abs(float(v @ v) - 1.0) > 2.0 * UNIT_VECTOR_TOL:
                raise InvalidParams(f"v must be a unit vector to 1e-12, got |v|²={float(v @ v)!r}")
            object.__setattr__(self, "v", (float(v[0]), float(v[1]), float(v[2])))

    @property
    def c1(self) -> float:
        """(c/hbar) sqrt(M/I1): plain-ladder coefficient of S+L- + S-L+."""
        b = self.base
        return (b.c / b.hbar) * math.sqrt(b.mass / b.i1)

    @property
    def c3(self) -> float:
        """(2c/hbar) sqrt(M/I3): coefficient of S3 L3."""
        b = self.base
        return (2.0 * b.c / b.hbar) * math.sqrt(b.mass / b.i3)

    @property
    def c1_sym(self) -> float:
        """2*c1: ladder coefficient in the convention where spherical ⇔ c1 == c3."""
        return 2.0 * self.c1


@dataclass(frozen=True)
class DiracEigenpair:
    """One closed-form eigenvalue with its factorized eigenstate data.

    orbital_part holds the amplitudes over {|l, m_j-1/2>|up>, |l, m_j+1/2>|down>}
    (edge states m_j = ±(l+1/2) have a single nonzero amplitude);
    spinor_chi holds the big/small doublet amplitudes.
    """

    line: SpectralLine
    kinetic_f: float
    spinor_chi: np.ndarray
    orbital_part: np.ndarray


def _require_symmetric(params: DiracGyroParams) -> None:
    if not params.base.is_symmetric():
        raise NotSymmetric(
            f"symmetric-top operation needs I1 == I2, got I1={params.base.i1}, I2={params.base.i2}"
        )


def spin_orbit_operator(l: int, params: DiracGyroParams) -> np.ndarray:
    """K = c1 (S+L- + S-L+) + c3 S3 L3 on the full 4(2l+1)-dim space.

    Built with plain ladders and the plain-convention c1; for a symmetric top
    this equals (2c/hbar) sqrt(M) Σ_i I_i^{-1/2} S_i L_i, the kinetic factor of
    the Hamiltonian stripped of its beta matrix.
    """
    l = _check_l(l)
    b = params.base
    blocks = build_dirac_blocks(b.hbar)
    orb = build_orbital(l, b.hbar)
    lplus, lminus = ladder(orb, "plain")
    splus = blocks.S1 + 1j * blocks.S2
    sminus = blocks.S1 - 1j * blocks.S2
    s3l3 = kron(blocks.S3, orb.L3)
    return params.c1 * (kron(splus, lminus) + kron(sminus, lplus)) + params.c3 * s3l3


def build_dirac_hamiltonian(l: int, params: DiracGyroParams) -> np.ndarray:
    """The 4(2l+1)-dim Hermitian Dirac gyroscope Hamiltonian."""
    l = _check_l(l)
    b = params.base
    blocks = build_dirac_blocks(b.hbar)
    orb = build_orbital(l, b.hbar)
    eye_orb = np.eye(orb.dim, dtype=np.complex128)
    mass_term = b.rest_energy * kron(blocks.beta, eye_orb)
    if params.variant == "abelian":
        root_m_c = math.sqrt(b.mass) * b.c
        kinetic = np.zeros_like(mass_term)
        for alpha_i, l_i, moment in zip(
            blocks.alphas, (orb.L1, orb.L2, orb.L3), b.moments
        ):
            kinetic += root_m_c / math.sqrt(moment) * kron(alpha_i, l_i)
        return kinetic + mass_term
    _require_symmetric(params)
    v1, v2, v3 = params.v
    beta_v = v1 * blocks.beta1 + v2 * blocks.beta2 + v3 * blocks.beta3
    return kron(beta_v, eye_orb) @ spin_orbit_operator(l, params) + mass_term


def _second_order_form(l: int, params: DiracGyroParams, strength: float) -> np.ndarray:
    """Mc² Σ I_i⁻¹ L_i² - strength · Mc² Σ_k (I_p I_q)^{-1/2} S_k L_k + M²c⁴."""
    b = params.base
    blocks = build_dirac_blocks(b.hbar)
    orb = build_orbital(l, b.hbar)
    eye4 = np.eye(4, dtype=np.complex128)
    mc2 = b.rest_energy
    i1, i2, i3 = b.moments
    cross = (1.0 / math.sqrt(i2 * i3), 1.0 / math.sqrt(i1 * i3), 1.0 / math.sqrt(i1 * i2))
    out = mc2**2 * np.eye(4 * orb.dim, dtype=np.complex128)
    for spin_k, l_k, moment, cross_k in zip(
        blocks.spins, (orb.L1, orb.L2, orb.L3), b.moments, cross
    ):
        out += mc2 / moment * kron(eye4, l_k @ l_k)
        out -= strength * mc2 * cross_k * kron(spin_k, l_k)
    return out


def squared_hamiltonian_residual(l: int, params: DiracGyroParams) -> float:
    """Relative Frobenius residual of H² against its second-order closed form.

    The spin-orbit coefficient structure is the resolved one: cross products of
    the inverse-sqrt moments with overall strength 2 (a uniform I_i⁻¹ template
    does not fit once the moments differ; see fit_spin_orbit_coefficient).
    """
    if params.variant != "abelian":
        raise InvalidParams("squared-Hamiltonian identity applies to the abelian variant")
    h = build_dirac_hamiltonian(l, params)
    h2 = h @ h
    rhs = _second_order_form(l, params, SPIN_ORBIT_STRENGTH)
    return frobenius(h2 - rhs) / max(1.0, frobenius(h2))


def fit_spin_orbit_coefficient(l: int, params: DiracGyroParams) -> float:
    """Least-squares strength of the cross-product spin-orbit term in H².

    Projects H² minus its orbital and rest-mass parts onto
    -Mc² Σ_k (I_p I_q)^{-1/2} S_k L_k; the resolved value is 2."""
    if params.variant != "abelian":
        raise InvalidParams("squared-Hamiltonian identity applies to the abelian variant")
    h = build_dirac_hamiltonian(l, params)
    remainder = h @ h - _second_order_form(l, params, 0.0)
    basis = _second_order_form(l, params, 1.0) - _second_order_form(l, params, 0.0)
    denom = float(np.real(np.vdot(basis, basis)))
    if denom == 0.0:
        return 0.0
    return float(np.real(np.vdot(basis, remainder)) / denom)


def dirac_energy_spherical(l: int, j2: int, params: DiracGyroParams) -> tuple[float, float]:
    """Closed-form (E+, E-) for the spherical top, labels (l, j = j2/2).

    E = ± sqrt( (hbar² Mc²/I) (j(j+1) - l(l+1) - 3/4)² + M²c⁴ ).
    """
    l = _check_l(l)
    if j2 not in (2 * l - 1, 2 * l + 1) or j2 < 1:
        raise BadQuantumNumbers(f"j must be l ± 1/2 and positive, got 2j={j2} for l={l}")
    b = params.base
    if not b.is_spherical():
        raise NotSymmetric(f"spherical closed form needs I1 = I2 = I3, got {b.moments}")
    j = 0.5 * j2
    factor = j * (j + 1.0) - l * (l + 1.0) - 0.75
    energy = math.sqrt(b.hbar**2 * b.rest_energy / b.i1 * factor**2 + b.rest_energy**2)
    return (energy, -energy)


def f_symmetric(l: int, mj2: int, branch: int, c1: float, c3: float, hbar: float = 1.0) -> float:
    """Eigenvalue of K on the 2x2 block at (l, m_j = mj2/2), secular branch 1 or 2.

    c1 and c3 are the kinetic coefficients in the symmetric convention
    (spherical top ⇔ c1 == c3); for moments-derived parameters pass
    DiracGyroParams.c1_sym and .c3. Edge states m_j = ±(l+1/2) are single
    uncoupled states handled as 1x1 blocks (branch collapses to 1).
    """
    l = _check_l(l)
    if int(mj2) != mj2 or mj2 % 2 == 0 or abs(mj2) > 2 * l + 1:
        raise BadQuantumNumbers(f"2 m_j must be an odd integer with |m_j| <= l + 1/2, got {mj2!r}")
    mj2 = int(mj2)
    if branch not in (1, 2):
        raise BadQuantumNumbers(f"branch must be 1 or 2, got {branch!r}")
    if abs(mj2) == 2 * l + 1:
        if branch != 1:
            raise BadQuantumNumbers(f"edge state m_j = {mj2}/2 has a single branch (1)")
        return hbar**2 * c3 * (abs(mj2) - 1) / 4.0
    mj = 0.5 * mj2
    disc = c3**2 + 4.0 * c1**2 * l * (l + 1.0) + 4.0 * (c3**2 - c1**2) * (mj * mj - 0.25)
    return -(hbar**2 / 4.0) * (c3 + (-1.0) ** branch * math.sqrt(disc))


def f_symmetric_alt_sign(
    l: int, mj2: int, branch: int, c1: float, c3: float, hbar: float = 1.0
) -> float:
    """Variant of f_symmetric with the projection term of the discriminant
    sign-flipped to 4(c1² - c3²)(m_j² - 1/4).

    Kept purely as a negative control: away from the spherical point c1 == c3
    it does not reproduce the numeric spectrum (and its discriminant can go
    negative, returned as nan)."""
    l = _check_l(l)
    if abs(mj2) == 2 * l + 1:
        return f_symmetric(l, mj2, branch, c1, c3, hbar)
    mj = 0.5 * mj2
    disc = c3**2 + 4.0 * c1**2 * l * (l + 1.0) + 4.0 * (c1**2 - c3**2) * (mj * mj - 0.25)
    if disc < 0.0:
        return float("nan")
    return -(hbar**2 / 4.0) * (c3 + (-1.0) ** branch * math.sqrt(disc))


def orbital_amplitudes(
    l: int, mj2: int, branch: int, c1: float, c3: float, hbar: float = 1.0
) -> np.ndarray:
    """Normalized amplitudes of the K eigenvector over the coupled pair
    {|l, m_j-1/2>|up>, |l, m_j+1/2>|down>} (c1, c3 in the symmetric convention).

    The magnitudes are sqrt((2F ± hbar² c3 (m_j ± 1/2)) / (4F + hbar² c3)); the
    relative sign of the second amplitude follows the eigenvalue equation (it
    is negative on the lower branch)."""
    f_value = f_symmetric(l, mj2, branch, c1, c3, hbar)
    if abs(mj2) == 2 * l + 1:
        amps = (1.0, 0.0) if mj2 > 0 else (0.0, 1.0)
        return np.array(amps, dtype=np.complex128)
    mj = 0.5 * mj2
    ft = f_value / hbar**2
    upper_gap = ft - 0.5 * c3 * (mj - 0.5)      # F/hbar² minus the up-state diagonal
    lower_gap = ft + 0.5 * c3 * (mj + 0.5)      # F/hbar² minus the down-state diagonal
    total = upper_gap + lower_gap
    a = math.sqrt(max(lower_gap / total, 0.0))
    b = math.copysign(math.sqrt(max(upper_gap / total, 0.0)), upper_gap if upper_gap != 0 else 1.0)
    return np.array((a, b), dtype=np.complex128)


def spinor_chi(f_value: float, sign: int, params: DiracGyroParams) -> np.ndarray:
    """Big/small doublet amplitudes for the abelian eigenstate at kinetic
    eigenvalue F and energy sign ±.

    chi = ( sqrt((E+Mc²)/2E), ± sqrt((E-Mc²)/2E) ) with the relative sign
    sign((E - Mc²) F), which solves [F σ1 + Mc² σ3] chi = E chi on both
    branches."""
    if sign not in (+1, -1):
        raise BadQuantumNumbers(f"sign must be +1 or -1, got {sign!r}")
    mc2 = params.base.rest_energy
    energy = sign * math.sqrt(f_value**2 + mc2**2)
    if energy == 0.0:
        raise DegenerateEnergy("zero energy: spinor construction is singular")
    big = math.sqrt(max((energy + mc2) / (2.0 * energy), 0.0))
    small = math.sqrt(max((energy - mc2) / (2.0 * energy), 0.0))
    if (energy - mc2) * f_value < 0.0:
        small = -small
    return np.array((big, small), dtype=np.complex128)


def _labeled_pair(
    l: int, mj2: int, branch: int, f_value: float, magnitude: float,
    chi_plus: np.ndarray, chi_minus: np.ndarray, orbital: np.ndarray,
) -> tuple[DiracEigenpair, DiracEigenpair]:
    plus = DiracEigenpair(
        line=SpectralLine(l=l, sign=+1, energy=magnitude, m2=mj2, branch=branch),
        kinetic_f=f_value, spinor_chi=chi_plus, orbital_part=orbital,
    )
    minus = DiracEigenpair(
        line=SpectralLine(l=l, sign=-1, energy=-magnitude, m2=mj2, branch=branch),
        kinetic_f=f_value, spinor_chi=chi_minus, orbital_part=orbital,
    )
    return plus, minus


def dirac_energy_symmetric(
    l: int, mj2: int, branch: int, params: DiracGyroParams
) -> tuple[DiracEigenpair, DiracEigenpair]:
    """Closed-form (E+, E-) eigenpairs of the abelian symmetric top."""
    if params.variant != "abelian":
        raise InvalidParams("use dirac_energy_nonabelian for the nonabelian variant")
    _require_symmetric(params)
    hbar = params.base.hbar
    f_value = f_symmetric(l, mj2, branch, params.c1_sym, params.c3, hbar)
    magnitude = math.sqrt(f_value**2 + params.base.rest_energy**2)
    orbital = orbital_amplitudes(l, mj2, branch, params.c1_sym, params.c3, hbar)
    return _labeled_pair(
        l, mj2, branch, f_value, magnitude,
        spinor_chi(f_value, +1, params), spinor_chi(f_value, -1, params), orbital,
    )


def dirac_energy_nonabelian(
    l: int, mj2: int, branch: int, params: DiracGyroParams
) -> tuple[DiracEigenpair, DiracEigenpair]:
    """Closed-form (E+, E-) eigenpairs of the nonabelian symmetric top.

    E = ± sqrt(F² + M²c⁴ + 2 v3 F Mc²). The returned chi is the stated doublet
    object (1/E)[σ·v̂ F + σ3 Mc²]|±>; it is unit-norm, and the big/small
    eigenvector of H is proportional to |±> + chi±."""
    if params.variant != "nonabelian":
        raise InvalidParams("dirac_energy_nonabelian requires the nonabelian variant")
    _require_symmetric(params)
    b = params.base
    hbar = b.hbar
    f_value = f_symmetric(l, mj2, branch, params.c1_sym, params.c3, hbar)
    mc2 = b.rest_energy
    v1, v2, v3 = params.v
    mag_sq = f_value**2 + mc2**2 + 2.0 * v3 * f_value * mc2
    scale = max(f_value**2 + mc2**2, 1.0)
    if mag_sq <= 1e-28 * scale:
        raise DegenerateEnergy("zero energy at this (l, m_j, branch): spinor is singular")
    magnitude = math.sqrt(mag_sq)
    chi_plus = np.array(
        ((v3 * f_value + mc2) / magnitude, (v1 + 1j * v2) * f_value / magnitude),
        dtype=np.complex128,
    )
    chi_minus = np.array(
        ((v1 - 1j * v2) * f_value / -magnitude, (-v3 * f_value - mc2) / -magnitude),
        dtype=np.complex128,
    )
    orbital = orbital_amplitudes(l, mj2, branch, params.c1_sym, params.c3, hbar)
    return _labeled_pair(l, mj2, branch, f_value, magnitude, chi_plus, chi_minus, orbital)


def spectral_labels(l: int) -> list[tuple[int, int]]:
    """All valid (mj2, branch) pairs at this l: interior m_j carry two secular
    branches, the edges m_j = ±(l+1/2) a single one."""
    l = _check_l(l)
    labels = []
    for mj2 in range(-(2 * l + 1), 2 * l + 2, 2):
        branches = (1,) if abs(mj2) == 2 * l + 1 else (1, 2)
        for branch in branches:
            labels.append((mj2, branch))
    return labels


def dirac_energies_numeric(l: int, params: DiracGyroParams) -> list[SpectralLine]:
    """4(2l+1) lines from brute-force diagonalization of the Hamiltonian.

    Labeled by idx, the ascending-magnitude rank within each sign branch
    (physical labels belong to the closed forms)."""
    l = _check_l(l)
    dec = eig_hermitian(build_dirac_hamiltonian(l, params))
    vals = dec.eigenvalues
    positive = [float(v) for v in vals if v >= 0.0]
    negative = sorted((float(v) for v in vals if v < 0.0), key=abs)
    lines: list[SpectralLine] = []
    for rank, val in enumerate(positive):
        lines.append(SpectralLine(l=l, sign=+1, energy=val, idx=rank))
    for rank, val in enumerate(negative):
        lines.append(SpectralLine(l=l, sign=-1, energy=val, idx=rank))
    return lines
