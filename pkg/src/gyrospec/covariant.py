"""Covariant classical kinematics for a system of point masses.

Four-vectors are stored as contravariant components (x⁰, x¹, x², x³) with
metric signature (−,+,+,+), fixed by the mass shell p·p = −(mc)². Rank-2
tensors are stored contravariant, so a boost acts as Λ T Λᵀ.

The module builds the mass-weighted Jacobi variables, the covariant inertia
tensor and its inverse square root, the angular tensor, the Pauli-Lubanski
analog W and the kinetic-term vector B, and checks the invariant identities
numerically. Gauge potentials are identically zero here: the checks are
free-motion identities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import (
    DegenerateInertia,
    InvalidParams,
    NotTimelike,
    SuperluminalVelocity,
)
from .kg import GyroParams
from .operators import eig_hermitian

ETA = np.diag([-1.0, 1.0, 1.0, 1.0])

def _permutation_sign(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return 1 - 2 * (inversions % 2)


# (mu, nu, sigma, rho, sign) entries of the totally antisymmetric symbol,
# eps_0123 = +1, expanded over all 24 permutations.
_EPSILON4 = tuple((*perm, _permutation_sign(perm)) for perm in permutations(range(4)))


def minkowski_dot(a, b) -> float:
    """a·b = −a⁰b⁰ + a¹b¹ + a²b² + a³b³ on contravariant components."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(-a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3])


def lower(x) -> np.ndarray:
    """Covariant components x_mu = eta_mu_nu x^nu."""
    return ETA @ np.asarray(x, dtype=float)


def boost(velocity, c: float = 1.0) -> np.ndarray:
    """Boost matrix taking a body at rest to 3-velocity `velocity` (|v| < c).

    Preserves the metric: Λᵀ η Λ = η; maps (Mc, 0, 0, 0) to (γMc, γMβc)."""
    beta = np.asarray(velocity, dtype=float) / c
    if beta.shape != (3,):
        raise InvalidParams(f"velocity must be a 3-vector, got {velocity!r}")
    b2 = float(beta @ beta)
    if b2 >= (1.0 - 1e-12) ** 2:
        raise SuperluminalVelocity(f"|v|/c = {math.sqrt(b2):.15g} is not < 1 - 1e-12")
    if b2 == 0.0:
        return np.eye(4)
    gamma = 1.0 / math.sqrt(1.0 - b2)
    lam = np.eye(4)
    lam[0, 0] = gamma
    lam[0, 1:] = gamma * beta
    lam[1:, 0] = gamma * beta
    lam[1:, 1:] += (gamma - 1.0) * np.outer(beta, beta) / b2
    return lam


@dataclass(frozen=True)
class ParticleSystem:
    """N point masses with position and momentum four-vectors.

    Gauge potentials are identically zero in this artifact. positions and
    momenta are (N, 4) arrays of contravariant components."""

    masses: np.ndarray
    positions: np.ndarray
    momenta: np.ndarray

    def __post_init__(self):
        masses = np.asarray(self.masses, dtype=float)
        positions = np.asarray(self.positions, dtype=float)
        momenta = np.asarray(self.momenta, dtype=float)
        n = len(masses)
        if n < 1:
            raise InvalidParams("a particle system needs at least one particle")
        if positions.shape != (n, 4) or momenta.shape != (n, 4):
            raise InvalidParams(
                f"positions and momenta must be (N, 4) arrays, got {positions.shape} and {momenta.shape}"
            )
        if not (np.all(np.isfinite(masses)) and np.all(masses > 0)):
            raise InvalidParams("masses must be positive and finite")
        if not (np.all(np.isfinite(positions)) and np.all(np.isfinite(momenta))):
            raise InvalidParams("positions and momenta must be finite")
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "momenta", momenta)

    @property
    def n(self) -> int:
        return len(self.masses)

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.masses))

    @classmethod
    def from_dict(cls, doc: dict) -> "ParticleSystem":
        """Ingest the flat JSON document {"masses", "positions", "momenta", "units"}."""
        for field in ("masses", "positions", "momenta"):
            if field not in doc:
                raise InvalidParams(f"particle-system document is missing {field!r}")
        units = doc.get("units", "natural")
        if units != "natural":
            raise InvalidParams(f"unsupported units {units!r}; only 'natural' is defined")
        return cls(
            masses=np.asarray(doc["masses"], dtype=float),
            positions=np.asarray(doc["positions"], dtype=float),
            momenta=np.asarray(doc["momenta"], dtype=float),
        )

    @classmethod
    def from_json(cls, text: str) -> "ParticleSystem":
        return cls.from_dict(json.loads(text))

    def boosted(self, lam: np.ndarray) -> "ParticleSystem":
        """Apply a Lorentz transformation to every position and momentum."""
        return ParticleSystem(
            masses=self.masses.copy(),
            positions=self.positions @ lam.T,
            momenta=self.momenta @ lam.T,
        )


def jacobi_weight_matrix(masses) -> np.ndarray:
    """Orthogonal N×N matrix of the mass-weighted Jacobi transformation.

    Acts on the scaled coordinates sqrt(m_i/M) r_i (and sqrt(M/m_i) p_i): rows
    1..N-1 are the relative combinations, the last row is the center of mass."""
    masses = np.asarray(masses, dtype=float)
    n = len(masses)
    g = np.zeros((n, n))
    for row in range(1, n):
        g[row - 1, :row] = 1.0 / math.sqrt(row * (row + 1))
        g[row - 1, row] = -row / math.sqrt(row * (row + 1))
    g[n - 1, :] = 1.0 / math.sqrt(n)
    return g


@dataclass(frozen=True)
class JacobiVariables:
    """Center-of-mass pair (R, P) and the N-1 relative coordinate/momentum pairs."""

    center: np.ndarray
    momentum: np.ndarray
    rel_positions: np.ndarray
    rel_momenta: np.ndarray


def jacobi_transform(sys: ParticleSystem) -> JacobiVariables:
    total = sys.total_mass
    scaled_r = np.sqrt(sys.masses / total)[:, None] * sys.positions
    scaled_p = np.sqrt(total / sys.masses)[:, None] * sys.momenta
    g = jacobi_weight_matrix(sys.masses)
    dotted_r = g @ scaled_r
    dotted_p = g @ scaled_p
    return JacobiVariables(
        center=dotted_r[-1],
        momentum=dotted_p[-1],
        rel_positions=dotted_r[:-1],
        rel_momenta=dotted_p[:-1],
    )


def jacobi_identity_residual(sys: ParticleSystem) -> float:
    """|Σ_l (M/m_l) p_l·p_l − P·P − Σ ṗ_l·ṗ_l| / scale, with gauge potentials zero."""
    total = sys.total_mass
    terms = [
        total / m * minkowski_dot(p, p) for m, p in zip(sys.masses, sys.momenta)
    ]
    jac = jacobi_transform(sys)
    rhs = minkowski_dot(jac.momentum, jac.momentum) + sum(
        minkowski_dot(p, p) for p in jac.rel_momenta
    )
    scale = max(1.0, sum(abs(t) for t in terms))
    return abs(sum(terms) - rhs) / scale


def four_velocity(p) -> np.ndarray:
    """u = P / sqrt(−P·P); u·u = −1. Requires P timelike."""
    p = np.asarray(p, dtype=float)
    s = -minkowski_dot(p, p)
    if s <= 0.0:
        raise NotTimelike(f"momentum is not timelike: P·P = {-s:.6g}")
    return p / math.sqrt(s)


def transverse_project(x, u) -> np.ndarray:
    """Component of x orthogonal to the unit timelike u: x⊥ = x + u (u·x).

    The sign follows the (−,+,+,+) metric with u·u = −1, so that u·x⊥ = 0."""
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    return x + u * minkowski_dot(u, x)


def inertia_tensor_covariant(sys: ParticleSystem, u) -> np.ndarray:
    """Σ_l m_l (η^{μν} r⊥·r⊥ − r⊥^μ r⊥^ν), positions taken relative to the
    center of mass by the caller.

    The overall sign is fixed so that the rest-frame spatial block is the
    standard positive-semidefinite Σ m (δ_ij r² − r_i r_j)."""
    out = np.zeros((4, 4))
    for m, r in zip(sys.masses, sys.positions):
        perp = transverse_project(r, u)
        out += m * (ETA * minkowski_dot(perp, perp) - np.outer(perp, perp))
    return out


def _rest_frame_boost(u) -> tuple[np.ndarray, np.ndarray]:
    """(to_rest, to_lab) boosts for the frame of the unit timelike u."""
    u = np.asarray(u, dtype=float)
    vel = u[1:] / u[0]
    to_lab = boost(vel)
    to_rest = boost(-vel)
    return to_rest, to_lab


def principal_moments(inertia: np.ndarray, u) -> tuple[np.ndarray, np.ndarray]:
    """(moments ascending, 3x3 principal-axis columns) of the rest-frame spatial block."""
    to_rest, _ = _rest_frame_boost(u)
    rest = to_rest @ inertia @ to_rest.T
    dec = eig_hermitian(rest[1:, 1:].astype(np.complex128))
    return dec.eigenvalues.copy(), dec.eigenvectors.real.copy()


def inverse_sqrt_inertia(inertia: np.ndarray, u) -> np.ndarray:
    """Inverse square root of the inertia tensor on the subspace orthogonal to u.

    Constructed by boosting to the rest frame, applying λ → λ^{-1/2} to the
    spatial principal moments, and boosting back. Null along u, which keeps it
    real and makes B·P = 0 structural. Raises DegenerateInertia when a
    principal moment falls at or below 1e-10·||I||."""
    to_rest, to_lab = _rest_frame_boost(u)
    rest = to_rest @ inertia @ to_rest.T
    moments, axes = principal_moments(inertia, u)
    scale = float(np.sqrt(np.sum(rest * rest)))
    floor = 1e-10 * scale
    if np.any(moments <= floor):
        raise DegenerateInertia(
            f"principal moments {moments.tolist()} include one at or below {floor:.3e}"
        )
    spatial = axes @ np.diag(1.0 / np.sqrt(moments)) @ axes.T
    rest_bar = np.zeros((4, 4))
    rest_bar[1:, 1:] = spatial
    return to_lab @ rest_bar @ to_lab.T


def angular_tensor(positions, momenta) -> np.ndarray:
    """Antisymmetric M^{μν} = Σ_l r_l^μ p_l^ν − r_l^ν p_l^μ."""
    positions = np.asarray(positions, dtype=float)
    momenta = np.asarray(momenta, dtype=float)
    m = positions.T @ momenta
    return m - m.T


def pauli_lubanski(p, mten: np.ndarray) -> np.ndarray:
    """W^μ with W_μ = −(1/2) ε_{μνσρ} P^ν M^{σρ}, ε_0123 = +1.

    Expanded as the explicit 4-index sum; indices raised with η at the end.
    W·P = 0 identically by antisymmetry."""
    p = np.asarray(p, dtype=float)
    w_cov = np.zeros(4)
    for mu, nu, sigma, rho, sign in _EPSILON4:
        w_cov[mu] -= 0.5 * sign * p[nu] * mten[sigma, rho]
    return ETA @ w_cov


def spatial_angular_momentum(mten: np.ndarray) -> np.ndarray:
    """L_i = (1/2) ε_ijk M^{jk} from the spatial block of the angular tensor."""
    return np.array([mten[2, 3], mten[3, 1], mten[1, 2]])


def _b_from(p, positions_rel, masses, momenta) -> np.ndarray:
    total = float(np.sum(masses))
    u = four_velocity(p)
    rel_sys = ParticleSystem(masses=masses, positions=positions_rel, momenta=momenta)
    inertia = inertia_tensor_covariant(rel_sys, u)
    ibar = inverse_sqrt_inertia(inertia, u)
    mten = angular_tensor(positions_rel, momenta)
    w = pauli_lubanski(p, mten)
    pref = math.sqrt(total / -minkowski_dot(p, p))
    return pref * (ibar @ ETA @ w)


def b_vector(sys: ParticleSystem) -> np.ndarray:
    """B^μ = sqrt(M/(−P·P)) Ī_μ^ρ W_ρ, with positions taken relative to the
    Jacobi center of mass.

    In the rest frame with principal axes this reduces to B_i = sqrt(M) I_i^{-1/2} L_i,
    so B·B = M Σ I_i⁻¹ L_i²; B·P = 0 in every frame."""
    jac = jacobi_transform(sys)
    rel = sys.positions - jac.center
    return _b_from(jac.momentum, rel, sys.masses, sys.momenta)


def classical_energy(l_body, params: GyroParams) -> float:
    """E = sqrt( Mc² Σ I_i⁻¹ L_i² + (Mc²)² ) for body-frame angular momentum L."""
    l_body = np.asarray(l_body, dtype=float)
    if l_body.shape != (3,):
        raise InvalidParams(f"L must be a 3-vector, got {l_body!r}")
    mc2 = params.rest_energy
    quad = float(sum(l * l / i for l, i in zip(l_body, params.moments)))
    return math.sqrt(mc2 * quad + mc2 * mc2)


def rest_frame_energy(sys: ParticleSystem, c: float = 1.0, hbar: float = 1.0) -> float:
    """Classical energy of a rest-frame system from its own inertia tensor and
    angular momentum (both about the Jacobi center of mass, principal axes)."""
    jac = jacobi_transform(sys)
    rel = sys.positions - jac.center
    rel_sys = ParticleSystem(masses=sys.masses, positions=rel, momenta=sys.momenta)
    rest_u = np.array([1.0, 0.0, 0.0, 0.0])
    inertia = inertia_tensor_covariant(rel_sys, rest_u)
    moments, axes = principal_moments(inertia, rest_u)
    floor = 1e-10 * float(np.sqrt(np.sum(inertia * inertia)))
    if np.any(moments <= floor):
        raise DegenerateInertia(f"principal moments {moments.tolist()} are degenerate")
    l_body = axes.T @ spatial_angular_momentum(angular_tensor(rel, sys.momenta))
    params = GyroParams(
        hbar=hbar, c=c, mass=sys.total_mass,
        i1=float(moments[0]), i2=float(moments[1]), i3=float(moments[2]),
    )
    return classical_energy(l_body, params)


def mass_shell_residual(sys: ParticleSystem, boost_velocity=None, c: float = 1.0) -> float:
    """|(P+B)·(P+B) + (Mc)²| / (Mc)² with P⁰ set from the classical energy.

    The system must be prepared in its rest frame (spatial Jacobi momentum
    zero); P = (E/c, 0, 0, 0) is then assembled from the classical energy
    formula. With boost_velocity set, all particle coordinates, momenta and P
    are boosted first and every tensor is recomputed covariantly, so the
    residual checks frame invariance as well."""
    jac = jacobi_transform(sys)
    spatial = float(np.linalg.norm(jac.momentum[1:]))
    scale = max(1.0, float(np.linalg.norm(jac.momentum)))
    if spatial > 1e-9 * scale:
        raise InvalidParams(
            "mass_shell_residual expects a rest-frame system (spatial Jacobi momentum zero)"
        )
    energy = rest_frame_energy(sys, c=c)
    p = np.array([energy / c, 0.0, 0.0, 0.0])
    work = sys
    if boost_velocity is not None:
        lam = boost(boost_velocity, c=c)
        work = sys.boosted(lam)
        p = lam @ p
    jac_w = jacobi_transform(work)
    rel = work.positions - jac_w.center
    b = _b_from(p, rel, work.masses, work.momenta)
    total = p + b
    mc = sys.total_mass * c
    return abs(minkowski_dot(total, total) + mc * mc) / (mc * mc)
