"""Dense complex operator algebra.

Kronecker products, adjoints and a self-contained cyclic-Jacobi eigensolver for
Hermitian matrices. The eigensolver is the brute-force oracle every closed-form
spectrum in this package is checked against, so it deliberately does not call
into LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian

# Tolerances fixed by the artifact contracts.
HERMITICITY_TOL = 1e-12        # relative Frobenius tolerance for "Hermitian"
CONVERGENCE_FACTOR = 1e-13     # off-diagonal norm target, relative to ||A||_F
DEGENERACY_FACTOR = 1e-9       # eigenvalue gap that counts as degenerate
SWEEP_LIMIT = 100


def as_operator(a) -> np.ndarray:
    """Coerce to a square complex128 matrix with finite entries."""
    m = np.array(a, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def frobenius(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2)))


def kron(a, b) -> np.ndarray:
    """Tensor product; (a ⊗ b)[i*dim_b + k, j*dim_b + l] = a[i,j] b[k,l]."""
    return np.kron(as_operator(a), as_operator(b))


def hermiticity_residual(a) -> float:
    """||A - A†||_F / max(1, ||A||_F)."""
    m = as_operator(a)
    return frobenius(m - dagger(m)) / max(1.0, frobenius(m))


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


def _offdiag_norm(a: np.ndarray) -> float:
    return frobenius(a - np.diag(a.diagonal()))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] with a unitary plane rotation; update A and V in place."""
    apq = a[p, q]
    mag = abs(apq)
    phase = apq / mag
    rho = (a[p, p].real - a[q, q].real) / (2.0 * mag)
    t = (1.0 if rho >= 0.0 else -1.0) / (abs(rho) + math.hypot(1.0, rho))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    sp = s * phase
    spc = s * np.conj(phase)

    colp = a[:, p].copy()
    colq = a[:, q].copy()
    a[:, p] = c * colp + spc * colq
    a[:, q] = -sp * colp + c * colq
    rowp = a[p, :].copy()
    rowq = a[q, :].copy()
    a[p, :] = c * rowp + sp * rowq
    a[q, :] = -spc * rowp + c * rowq
    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp + spc * vq
    v[:, q] = -sp * vp + c * vq

    # Hermiticity is exact in structure: pin the rotated entries.
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def _regauge_degenerate(vals: np.ndarray, vecs: np.ndarray, gap: float) -> None:
    """Modified Gram-Schmidt, in input order, within each degenerate cluster."""
    n = len(vals)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and vals[stop] - vals[stop - 1] <= gap:
            stop += 1
        if stop - start > 1:
            for k in range(start, stop):
                col = vecs[:, k]
                for j in range(start, k):
                    col -= np.vdot(vecs[:, j], col) * vecs[:, j]
                col /= np.sqrt(np.real(np.vdot(col, col)))
        start = stop


def eig_hermitian(a) -> EigenDecomposition:
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm drops below
    CONVERGENCE_FACTOR * ||A||_F; hard cap of SWEEP_LIMIT sweeps. Eigenvalues
    come back ascending; within degenerate clusters the eigenvectors are
    re-orthonormalized by modified Gram-Schmidt in input order, which makes the
    output deterministic.
    """
    m = as_operator(a)
    if hermiticity_residual(m) > HERMITICITY_TOL:
        raise NotHermitian(
            f"hermiticity residual {hermiticity_residual(m):.3e} exceeds {HERMITICITY_TOL:.0e}"
        )
    n = m.shape[0]
    work = 0.5 * (m + dagger(m))
    vecs = np.eye(n, dtype=np.complex128)
    scale = frobenius(work)
    if n == 1 or scale == 0.0:
        vals = work.diagonal().real.copy()
        order = np.argsort(vals, kind="stable")
        return EigenDecomposition(vals[order], vecs[:, order])

    target = CONVERGENCE_FACTOR * scale
    skip = target / n
    converged = _offdiag_norm(work) <= target
    for _ in range(SWEEP_LIMIT):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(work[p, q]) > skip:
                    _rotate(work, vecs, p, q)
        converged = _offdiag_norm(work) <= target
    if not converged:
        raise NoConvergence(f"off-diagonal norm still above target after {SWEEP_LIMIT} sweeps")

    vals = work.diagonal().real.copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    _regauge_degenerate(vals, vecs, DEGENERACY_FACTOR * scale)
    return EigenDecomposition(vals, vecs)
