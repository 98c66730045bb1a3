"""Tests for orbital angular momentum matrices and the Dirac-space blocks."""

import numpy as np
import pytest

from gyrospec.angular import build_dirac_blocks, build_orbital, ladder
from gyrospec.operators import dagger, eig_hermitian, hermiticity_residual, kron

HBAR = 1.0


class TestBuildOrbital:
    def test_l0_all_zero(self):
        ops = build_orbital(0)
        for mat in (ops.L1, ops.L2, ops.L3, ops.Lsq):
            np.testing.assert_array_equal(mat, np.zeros((1, 1)))

    def test_l1_l3_diagonal(self):
        ops = build_orbital(1)
        np.testing.assert_allclose(ops.L3, np.diag([-1.0, 0.0, 1.0]), atol=1e-15)

    def test_l1_l1_spectrum(self):
        # diagonalizing L1 must give the same m ladder as L3
        dec = eig_hermitian(build_orbital(1).L1)
        np.testing.assert_allclose(dec.eigenvalues, [-1.0, 0.0, 1.0], atol=1e-14)

    def test_raising_matrix_elements(self):
        l = 3
        ops = build_orbital(l)
        lplus, _ = ladder(ops)
        for col, m in enumerate(range(-l, l)):
            expect = np.sqrt(l * (l + 1) - m * (m + 1))
            assert abs(lplus[col + 1, col] - expect) < 1e-14

    @pytest.mark.parametrize("l", range(0, 21))
    def test_algebra_invariants(self, l):
        """Commutators, Casimir and Hermiticity for every l <= 20."""
        ops = build_orbital(l, HBAR)
        triples = (
            (ops.L1, ops.L2, ops.L3),
            (ops.L2, ops.L3, ops.L1),
            (ops.L3, ops.L1, ops.L2),
        )
        for a, b, c in triples:
            assert np.max(np.abs(a @ b - b @ a - 1j * HBAR * c)) <= 1e-13 * HBAR**2
        casimir = HBAR**2 * l * (l + 1)
        np.testing.assert_allclose(
            ops.Lsq, casimir * np.eye(ops.dim), atol=1e-12 * max(casimir, 1.0)
        )
        for mat in (ops.L1, ops.L2, ops.L3):
            assert hermiticity_residual(mat) <= 1e-13

    def test_rejects_negative_l(self):
        with pytest.raises(ValueError):
            build_orbital(-1)

    def test_rejects_non_integer_l(self):
        with pytest.raises(ValueError):
            build_orbital(1.5)


class TestLadder:
    def test_plain_matrix_element(self):
        ops = build_orbital(1)
        lplus, _ = ladder(ops, "plain")
        # L+|1,0> has coefficient hbar sqrt(2)
        assert abs(lplus[2, 1] - np.sqrt(2.0)) < 1e-14

    def test_sqrt2_matrix_element(self):
        ops = build_orbital(1)
        lplus, _ = ladder(ops, "sqrt2")
        assert abs(lplus[2, 1] - 1.0) < 1e-14

    @pytest.mark.parametrize("l", (0, 1, 4, 9))
    def test_adjoint_symmetry(self, l):
        lplus, lminus = ladder(build_orbital(l))
        np.testing.assert_array_equal(dagger(lplus), lminus)

    @pytest.mark.parametrize("convention,factor", (("plain", 2.0), ("sqrt2", 1.0)))
    def test_commutator_identity(self, convention, factor):
        # [L+, L-] = 2 hbar L3 for plain ladders, hbar L3 after the sqrt2 rescale
        ops = build_orbital(3)
        lplus, lminus = ladder(ops, convention)
        comm = lplus @ lminus - lminus @ lplus
        np.testing.assert_allclose(comm, factor * HBAR * ops.L3, atol=1e-13)

    def test_unknown_convention(self):
        with pytest.raises(ValueError):
            ladder(build_orbital(1), "half")


class TestDiracBlocks:
    def test_beta3_diagonal(self):
        blocks = build_dirac_blocks()
        np.testing.assert_array_equal(blocks.beta3, np.diag([1.0, 1.0, -1.0, -1.0]))
        np.testing.assert_array_equal(blocks.beta, blocks.beta3)

    def test_beta1_beta3_anticommute(self):
        blocks = build_dirac_blocks()
        anti = blocks.beta1 @ blocks.beta3 + blocks.beta3 @ blocks.beta1
        np.testing.assert_array_equal(anti, np.zeros((4, 4)))

    def test_beta_anticommutator_is_two_delta(self):
        # {beta_i, beta_j} = 2 delta_ij, forced by beta_i being unit involutions
        blocks = build_dirac_blocks()
        for i, bi in enumerate(blocks.betas):
            for j, bj in enumerate(blocks.betas):
                expect = (2.0 if i == j else 0.0) * np.eye(4)
                np.testing.assert_allclose(bi @ bj + bj @ bi, expect, atol=1e-15)

    def test_beta_commutes_with_spin(self):
        blocks = build_dirac_blocks()
        for bi in blocks.betas:
            for sj in blocks.spins:
                np.testing.assert_allclose(bi @ sj - sj @ bi, np.zeros((4, 4)), atol=1e-15)

    def test_spin_commutators(self):
        blocks = build_dirac_blocks(HBAR)
        s1, s2, s3 = blocks.spins
        np.testing.assert_allclose(s1 @ s2 - s2 @ s1, 1j * HBAR * s3, atol=1e-15)

    def test_alpha_from_beta1_spin(self):
        blocks = build_dirac_blocks(HBAR)
        for alpha_i, s_i in zip(blocks.alphas, blocks.spins):
            np.testing.assert_allclose(alpha_i, (2.0 / HBAR) * blocks.beta1 @ s_i, atol=1e-15)

    def test_alpha_product_identity(self):
        # alpha_i alpha_j = delta_ij 1 + (2i/hbar) eps_ijk S_k, entrywise
        blocks = build_dirac_blocks(HBAR)
        eps = np.zeros((3, 3, 3))
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            eps[i, j, k], eps[j, i, k] = 1.0, -1.0
        for i in range(3):
            for j in range(3):
                expect = (1.0 if i == j else 0.0) * np.eye(4) + (2j / HBAR) * sum(
                    eps[i, j, k] * blocks.spins[k] for k in range(3)
                )
                np.testing.assert_allclose(
                    blocks.alphas[i] @ blocks.alphas[j], expect, atol=1e-14
                )

    def test_alpha_anticommutator(self):
        blocks = build_dirac_blocks()
        for i, ai in enumerate(blocks.alphas):
            for j, aj in enumerate(blocks.alphas):
                expect = (2.0 if i == j else 0.0) * np.eye(4)
                np.testing.assert_allclose(ai @ aj + aj @ ai, expect, atol=1e-14)

    def test_beta_commutes_with_orbital_extension(self):
        # every beta_i ⊗ 1 commutes with every 1 ⊗ L_j used downstream
        blocks = build_dirac_blocks()
        ops = build_orbital(2)
        eye_orb = np.eye(ops.dim)
        for bi in blocks.betas:
            ext = kron(bi, eye_orb)
            for lj in (ops.L1, ops.L2, ops.L3):
                full = kron(np.eye(4), lj)
                np.testing.assert_allclose(ext @ full - full @ ext, 0.0 * full, atol=1e-14)
