import numpy as np
import pytest
from hypothesis import given, strategies as st

from epower.qmath import (
    DensityMatrix,
    DomainError,
    ProbVector,
    StateVector,
    majorizes,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)
from epower.canonical import CanonicalParams, coefficients_from_xyz
from epower.epower2q import spectrum

from conftest import random_chamber, random_unitary

# exact: H(3/8, 3/8, 1/8, 1/8) = 3 - (3/4) log2 3
H_3344 = 3.0 - 0.75 * np.log2(3.0)


class TestShannonEntropy:
    def test_uniform_two(self):
        assert shannon_entropy([0.5, 0.5]) == pytest.approx(1.0, abs=1e-15)

    def test_pure(self):
        assert shannon_entropy([1.0, 0.0, 0.0, 0.0]) == 0.0

    def test_uniform_four(self):
        assert shannon_entropy([0.25] * 4) == pytest.approx(2.0, abs=1e-15)

    def test_skewed_four(self):
        assert shannon_entropy([0.375, 0.375, 0.125, 0.125]) == pytest.approx(
            H_3344, abs=1e-14)

    def test_rejects_negative_entry(self):
        with pytest.raises(DomainError):
            shannon_entropy([1.1e-9 * -1, 1.0])
        with pytest.raises(DomainError):
            shannon_entropy([-0.2, 1.2])

    def test_rejects_bad_sum(self):
        with pytest.raises(DomainError):
            shannon_entropy([0.5, 0.6])

    def test_renormalizes_small_drift(self):
        p = ProbVector(np.array([0.5 + 3e-7, 0.5]))
        assert p.entries.sum() == pytest.approx(1.0, abs=1e-15)


class TestVonNeumannEntropy:
    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(np.eye(2) / 2) == pytest.approx(1.0, abs=1e-14)

    def test_pure_projector(self):
        rho = np.zeros((2, 2), dtype=complex)
        rho[0, 0] = 1.0
        assert von_neumann_entropy(rho) == 0.0

    def test_diagonal_four(self):
        rho = np.diag([0.375, 0.375, 0.125, 0.125]).astype(complex)
        assert von_neumann_entropy(rho) == pytest.approx(H_3344, abs=1e-14)

    def test_rejects_non_hermitian(self):
        bad = np.array([[0.5, 0.3], [0.1, 0.5]], dtype=complex)
        with pytest.raises(DomainError):
            von_neumann_entropy(bad)

    def test_rejects_wrong_trace(self):
        with pytest.raises(DomainError):
            von_neumann_entropy(np.eye(2))

    def test_invariant_under_unitary_conjugation(self, rng):
        for _ in range(20):
            p = rng.dirichlet(np.ones(4))
            u = random_unitary(rng, 4)
            rho = (u * p) @ u.conj().T
            assert von_neumann_entropy(rho) == pytest.approx(
                shannon_entropy(p), abs=1e-9)


def bell_pair():
    return np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


class TestPartialTrace:
    def test_bell_state_keep_first(self):
        psi = StateVector(bell_pair(), (2, 2))
        rho = partial_trace(psi, {0})
        np.testing.assert_allclose(rho.entries, np.eye(2) / 2, atol=1e-15)

    def test_product_state_keep_second(self):
        amps = np.kron([1, 0], [0, 1]).astype(complex)
        rho = partial_trace(StateVector(amps, (2, 2)), {1})
        np.testing.assert_allclose(rho.entries, np.diag([0.0, 1.0]), atol=1e-15)

    def test_swap_on_two_bell_pairs_gives_maximally_mixed(self):
        # state ordered (A, R_A, B, R_B); swap acts on (A, B)
        state = np.kron(bell_pair(), bell_pair()).reshape(2, 2, 2, 2)
        swapped = state.transpose(2, 1, 0, 3)
        psi = StateVector(swapped.reshape(16), (2, 2, 2, 2))
        rho = partial_trace(psi, {2, 3})
        np.testing.assert_allclose(rho.entries, np.eye(4) / 4, atol=1e-12)
        assert von_neumann_entropy(rho) == pytest.approx(2.0, abs=1e-12)

    def test_invalid_subsystem_index(self):
        psi = StateVector(bell_pair(), (2, 2))
        with pytest.raises(DomainError):
            partial_trace(psi, {2})
        with pytest.raises(DomainError):
            partial_trace(psi, set())
        with pytest.raises(DomainError):
            partial_trace(psi, {0, 1})

    def test_complementary_cuts_share_spectrum(self, rng):
        for dims in [(2, 4), (2, 2, 2), (3, 2, 2)]:
            n = int(np.prod(dims))
            amps = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            amps /= np.linalg.norm(amps)
            psi = StateVector(amps, dims)
            keep = {0}
            rest = set(range(len(dims))) - keep
            ev_a = partial_trace(psi, keep).eigenvalues
            ev_b = partial_trace(psi, rest).eigenvalues
            ev_a = np.sort(ev_a[ev_a > 1e-12])
            ev_b = np.sort(ev_b[ev_b > 1e-12])
            np.testing.assert_allclose(ev_a, ev_b, atol=1e-9)


class TestMajorizes:
    def test_uniform_below_pure(self):
        assert majorizes([0.5, 0.5], [1.0, 0.0])

    def test_reverse_direction_false(self):
        assert not majorizes([1.0, 0.0], [0.5, 0.5])

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            majorizes([0.5, 0.5], [0.5, 0.25, 0.25])

    def test_gate_moduli_below_equal_angle_spectrum(self):
        c = coefficients_from_xyz(CanonicalParams(0.3, 0.3, 0.3))
        lam = spectrum(c, 0.2, 0.2).lam
        assert majorizes(c.moduli_squared(), lam)

    @given(st.integers(2, 6), st.integers(0, 10_000))
    def test_mixing_lowers_in_order_and_entropy(self, n, seed):
        # averaging permutations of q produces p majorized by q
        gen = np.random.default_rng(seed)
        q = gen.dirichlet(np.ones(n))
        weights = gen.dirichlet(np.ones(3))
        p = sum(w * gen.permutation(q) for w in weights)
        assert majorizes(p, q)
        assert shannon_entropy(p) >= shannon_entropy(q) - 1e-12


class TestStateVector:
    def test_rejects_unnormalized(self):
        with pytest.raises(DomainError):
            StateVector(np.array([1.0, 1.0]), (2,))

    def test_rejects_dim_mismatch(self):
        with pytest.raises(DomainError):
            StateVector(bell_pair(), (2, 3))


class TestDensityMatrix:
    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(DomainError):
            DensityMatrix(np.diag([1.2, -0.2]).astype(complex))

    def test_clamps_rounding_noise(self):
        rho = DensityMatrix(np.diag([1.0 + 5e-11, -5e-11]).astype(complex))
        assert rho.eigenvalues.min() == 0.0


def test_chamber_spectra_relate_entropy(rng):
    # majorization between distributions implies the entropy inequality
    for _ in range(50):
        x, y, z = random_chamber(rng)
        c = coefficients_from_xyz(CanonicalParams(x, y, y))
        alpha = rng.uniform(0.0, np.pi / 4)
        lam = spectrum(c, alpha, alpha).lam
        m2 = c.moduli_squared()
        if majorizes(m2, lam):
            assert shannon_entropy(lam) <= shannon_entropy(m2) + 1e-12
