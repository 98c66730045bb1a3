"""Angular momentum matrices on |l, m> bases and the 4x4 Dirac-space blocks.

The orbital operators act on the basis m = -l ... +l (ascending). The Dirac
space is ordered as (big/small doublet) ⊗ (spin doublet): the beta matrices act
on the first factor, the spin operators on the second, and the alpha matrices
mix both through alpha_i = (2/hbar) beta1 S_i. Only the algebraic relations
matter for the spectra, so one fixed factor ordering is used for both families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import dagger, kron

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
IDENTITY2 = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True)
class AngularOperators:
    """L1, L2, L3 and L² on the (2l+1)-dimensional |l, m> basis, in units of hbar."""

    l: int
    hbar: float
    L1: np.ndarray
    L2: np.ndarray
    L3: np.ndarray
    Lsq: np.ndarray

    @property
    def dim(self) -> int:
        return 2 * self.l + 1

    @property
    def m_values(self) -> np.ndarray:
        return np.arange(-self.l, self.l + 1)


def build_orbital(l: int, hbar: float = 1.0) -> AngularOperators:
    """Angular momentum matrices for total quantum number l >= 0.

    L3|l,m> = hbar m |l,m>; the raising/lowering matrix elements are
    hbar sqrt(l(l+1) - m(m±1)).
    """
    if int(l) != l or l < 0:
        raise ValueError(f"l must be a non-negative integer, got {l!r}")
    l = int(l)
    dim = 2 * l + 1
    m = np.arange(-l, l + 1, dtype=float)
    L3 = np.diag(hbar * m).astype(np.complex128)
    lplus = np.zeros((dim, dim), dtype=np.complex128)
    if dim > 1:
        amp = hbar * np.sqrt(l * (l + 1) - m[:-1] * (m[:-1] + 1.0))
        lplus[np.arange(1, dim), np.arange(dim - 1)] = amp
    lminus = dagger(lplus)
    L1 = 0.5 * (lplus + lminus)
    L2 = -0.5j * (lplus - lminus)
    Lsq = L1 @ L1 + L2 @ L2 + L3 @ L3
    return AngularOperators(l, float(hbar), L1, L2, L3, Lsq)


def ladder(ops: AngularOperators, convention: str = "plain") -> tuple[np.ndarray, np.ndarray]:
    """(L+, L-) in the requested normalization.

    "plain": L± = L1 ± i L2. "sqrt2": L± = (L1 ± i L2)/sqrt(2).
    """
    lplus = ops.L1 + 1j * ops.L2
    lminus = ops.L1 - 1j * ops.L2
    if convention == "sqrt2":
        lplus = lplus / np.sqrt(2.0)
        lminus = lminus / np.sqrt(2.0)
    elif convention != "plain":
        raise ValueError(f"unknown ladder convention {convention!r}")
    return lplus, lminus


@dataclass(frozen=True)
class DiracBlocks:
    """Spin, beta and alpha matrices on the 4-dim (big/small) ⊗ (spin) space.

    beta (the mass-term matrix) equals beta3 = diag(1, 1, -1, -1) in this
    ordering. The families satisfy {beta_i, beta_j} = 2 δ_ij, [beta_i, S_j] = 0,
    alpha_i = (2/hbar) beta1 S_i and {alpha_i, alpha_j} = 2 δ_ij.
    """

    hbar: float
    S1: np.ndarray
    S2: np.ndarray
    S3: np.ndarray
    beta1: np.ndarray
    beta2: np.ndarray
    beta3: np.ndarray
    alpha1: np.ndarray
    alpha2: np.ndarray
    alpha3: np.ndarray
    beta: np.ndarray

    @property
    def spins(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.S1, self.S2, self.S3)

    @property
    def betas(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.beta1, self.beta2, self.beta3)

    @property
    def alphas(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.alpha1, self.alpha2, self.alpha3)


def build_dirac_blocks(hbar: float = 1.0) -> DiracBlocks:
    sigmas = (SIGMA1, SIGMA2, SIGMA3)
    betas = tuple(kron(s, IDENTITY2) for s in sigmas)
    spins = tuple(0.5 * hbar * kron(IDENTITY2, s) for s in sigmas)
    alphas = tuple((2.0 / hbar) * betas[0] @ s for s in spins)
    return DiracBlocks(
        hbar=float(hbar),
        S1=spins[0], S2=spins[1], S3=spins[2],
        beta1=betas[0], beta2=betas[1], beta3=betas[2],
        alpha1=alphas[0], alpha2=alphas[1], alpha3=alphas[2],
        beta=betas[2],
    )
