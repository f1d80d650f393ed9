"""Entanglement measure, metric, spectrum: oracles and invariants."""
from __future__ import annotations

import numpy as np
import pytest

from entdist import (
    Direction,
    EntanglementMetric,
    LocalUnitary,
    StateVector,
    WVector,
    apply_local_unitary,
    brs_state,
    distance_density,
    entanglement_measure,
    entanglement_metric,
    ghzl_state,
    make_basis_state,
    metric_matrix,
    optimal_directions,
    spectrum,
    w_vectors,
)
from entdist.qstate import _haar_unitary

from oracles import (
    covariance_metric_dense,
    jacobi_eigenvalues,
    permute_qubits,
    random_product_state,
    random_state,
    w_triples_literal,
)

X = Direction(1.0, 0.0, 0.0)
Z = Direction(0.0, 0.0, 1.0)


def _random_direction(rng) -> Direction:
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return Direction(*v)


# ---------------------------------------------------------------------------
# w-vectors
# ---------------------------------------------------------------------------


class TestWVectors:
    def test_uniform_state(self):
        """Uniform superposition: every qubit has w_minus = w_plus = 1/2, w_3 = 0."""
        for m in [2, 3, 5]:
            for w in w_vectors(brs_state(m, 0.0)):
                assert abs(w.w_minus - 0.5) < 1e-14
                assert abs(w.w_plus - 0.5) < 1e-14
                assert abs(w.w_3) < 1e-14
                assert abs(w.effective_norm_sq - 1.0) < 1e-13

    def test_ghz_marginals_vanish(self):
        """One bit flip never connects |0...0> and |1...1>; w_3 cancels at theta=pi/4."""
        for m in [2, 4, 6]:
            for w in w_vectors(ghzl_state(m, np.pi / 4)):
                assert abs(w.w_minus) < 1e-15
                assert abs(w.w_3) < 1e-15

    def test_all_zeros_state(self):
        for w in w_vectors(make_basis_state(4, 0)):
            assert w.w_minus == 0.0
            assert w.w_3 == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_matches_literal_sums(self, m):
        """Vectorized bilinears equal the literal per-index definition."""
        rng = np.random.default_rng(100 + m)
        s = StateVector(m, random_state(m, rng))
        expected = w_triples_literal(s.amplitudes, m)
        for w, (wm, wp, w3) in zip(w_vectors(s), expected):
            assert abs(w.w_minus - wm) < 1e-13
            assert abs(w.w_plus - wp) < 1e-13
            assert abs(w.w_3 - w3) < 1e-13

    def test_conjugacy_invariant_enforced(self):
        with pytest.raises(ValueError, match="conj"):
            WVector(0.3 + 0.1j, 0.3 + 0.1j, 0.0)

    def test_effective_norm_bound_enforced(self):
        with pytest.raises(ValueError, match="norm"):
            WVector(0.5, 0.5, 1.0)


# ---------------------------------------------------------------------------
# optimal directions
# ---------------------------------------------------------------------------


class TestOptimalDirections:
    def test_transverse_bloch(self):
        (d,) = optimal_directions([WVector(0.5, 0.5, 0.0)])
        assert (d.v1, d.v2, d.v3) == pytest.approx((1.0, 0.0, 0.0))
        assert not d.degenerate

    def test_pure_z_bloch(self):
        (d,) = optimal_directions([WVector(0.0, 0.0, 1.0)])
        assert (d.v1, d.v2, d.v3) == (0.0, 0.0, 1.0)

    def test_degenerate_marginal(self):
        (d,) = optimal_directions([WVector(0.0, 0.0, 0.0)])
        assert (d.v1, d.v2, d.v3) == (0.0, 0.0, 1.0)
        assert d.degenerate

    def test_sign_canonicalized(self):
        (d,) = optimal_directions([WVector(0.0, 0.0, -0.8)])
        assert d.v3 == 1.0

    def test_beats_sphere_grid(self):
        """(v.b)^2 at the returned direction majorizes a dense sphere scan."""
        rng = np.random.default_rng(7)
        golden = np.pi * (3.0 - np.sqrt(5.0))
        n = 20_000
        i = np.arange(n)
        z = 1.0 - 2.0 * (i + 0.5) / n
        r = np.sqrt(1.0 - z**2)
        grid = np.stack([r * np.cos(golden * i), r * np.sin(golden * i), z], axis=1)
        for _ in range(5):
            wm = complex(rng.normal(scale=0.2), rng.normal(scale=0.2))
            w3 = rng.normal(scale=0.3)
            w = WVector(wm, np.conj(wm), w3)
            (d,) = optimal_directions([w])
            achieved = float(np.dot(d.as_array(), w.bloch)) ** 2
            best_on_grid = float(np.max((grid @ w.bloch) ** 2))
            assert achieved >= best_on_grid - 1e-12


# ---------------------------------------------------------------------------
# entanglement measure
# ---------------------------------------------------------------------------


class TestEntanglementMeasure:
    def test_basis_states_are_separable(self):
        for m, k in [(1, 0), (3, 5), (5, 17)]:
            assert entanglement_measure(make_basis_state(m, k)) < 1e-15

    @pytest.mark.parametrize("m", [2, 3, 5, 8])
    def test_ghz_maximum(self, m):
        assert entanglement_measure(ghzl_state(m, np.pi / 4)) == pytest.approx(m / 4, abs=1e-13)

    def test_two_qubit_chain_phase_maximum(self):
        assert entanglement_measure(brs_state(2, np.pi)) == pytest.approx(0.5, abs=1e-14)

    def test_random_product_states_give_zero(self):
        rng = np.random.default_rng(55)
        for m in [2, 3, 4, 5]:
            s = StateVector(m, random_product_state(m, rng))
            assert entanglement_measure(s) < 1e-12

    def test_range_bound(self):
        rng = np.random.default_rng(56)
        for m in [2, 3, 4, 5, 6]:
            s = StateVector(m, random_state(m, rng))
            e = entanglement_measure(s)
            assert 0.0 <= e <= m / 4 + 1e-12

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(57)
        for m in [2, 4]:
            s = StateVector(m, random_state(m, rng))
            base = entanglement_measure(s)
            for _ in range(10):
                dressed = s
                for qubit in range(m):
                    dressed = apply_local_unitary(dressed, qubit, LocalUnitary(_haar_unitary(rng)))
                assert abs(entanglement_measure(dressed) - base) < 1e-9

    def test_purity_identity(self):
        """E = (1/4) sum_nu (1 - |b_nu|^2) with b_nu from the partial-trace oracle."""
        from entdist import bloch_vector_oracle

        rng = np.random.default_rng(58)
        for m in [2, 3, 5]:
            s = StateVector(m, random_state(m, rng))
            total = sum(
                1.0 - float(np.dot(b, b))
                for b in (bloch_vector_oracle(s, nu) for nu in range(m))
            )
            assert abs(entanglement_measure(s) - 0.25 * total) < 1e-12

    def test_permutation_covariance(self):
        """Relabeling qubits permutes the metric and leaves E and eigenvalues alone."""
        rng = np.random.default_rng(59)
        m = 4
        s = StateVector(m, random_state(m, rng))
        perm = [2, 0, 3, 1]
        sp = StateVector(m, permute_qubits(s.amplitudes, m, perm))
        assert abs(entanglement_measure(sp) - entanglement_measure(s)) < 1e-12
        g = entanglement_metric(s).matrix
        gp = entanglement_metric(sp).matrix
        for mu in range(m):
            for nu in range(m):
                assert abs(gp[perm[mu], perm[nu]] - g[mu, nu]) < 1e-12
        np.testing.assert_allclose(
            spectrum(entanglement_metric(s)).eigenvalues,
            spectrum(entanglement_metric(sp)).eigenvalues,
            atol=1e-12,
        )


# ---------------------------------------------------------------------------
# metric matrix
# ---------------------------------------------------------------------------


class TestMetricMatrix:
    def test_product_state_has_no_correlations(self):
        rng = np.random.default_rng(61)
        s = make_basis_state(3, 0)
        dirs = [_random_direction(rng) for _ in range(3)]
        g = metric_matrix(s, dirs)
        for mu in range(3):
            assert g[mu, mu] == pytest.approx(0.25 * (1 - dirs[mu].v3**2), abs=1e-14)
            for nu in range(mu + 1, 3):
                assert abs(g[mu, nu]) < 1e-14
        g_opt = metric_matrix(s, optimal_directions(w_vectors(s)))
        np.testing.assert_allclose(g_opt, np.zeros((3, 3)), atol=1e-14)

    @pytest.mark.parametrize("theta", [0.3, np.pi / 4, 1.1])
    def test_ghz_all_z_gives_ones_matrix(self, theta):
        m = 4
        g = metric_matrix(ghzl_state(m, theta), [Z] * m)
        expected = 0.25 * np.sin(2 * theta) ** 2 * np.ones((m, m))
        np.testing.assert_allclose(g, expected, atol=1e-14)

    def test_two_qubit_chain_phase_all_ones_form(self):
        """At phi = pi the axes (0,-1,0)/(0,1,0) give the all-ones metric."""
        g = metric_matrix(
            brs_state(2, np.pi), [Direction(0.0, -1.0, 0.0), Direction(0.0, 1.0, 0.0)]
        )
        np.testing.assert_allclose(g, 0.25 * np.ones((2, 2)), atol=1e-14)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_matches_dense_covariance(self, m):
        rng = np.random.default_rng(62 + m)
        s = StateVector(m, random_state(m, rng))
        dirs = [_random_direction(rng) for _ in range(m)]
        np.testing.assert_allclose(
            metric_matrix(s, dirs),
            covariance_metric_dense(s.amplitudes, m, dirs),
            atol=1e-12,
        )

    def test_wrong_direction_count(self):
        with pytest.raises(ValueError):
            metric_matrix(make_basis_state(2, 0), [Z])


# ---------------------------------------------------------------------------
# entanglement metric (composition) and spectrum
# ---------------------------------------------------------------------------


class TestEntanglementMetric:
    def test_separable_state(self):
        em = entanglement_metric(make_basis_state(4, 0))
        np.testing.assert_allclose(em.matrix, np.zeros((4, 4)), atol=1e-14)
        assert em.measure == 0.0

    def test_ghz_seven_qubits(self):
        em = entanglement_metric(ghzl_state(7, np.pi / 4))
        np.testing.assert_allclose(em.matrix, 0.25 * np.ones((7, 7)), atol=1e-13)
        assert em.measure == pytest.approx(7 / 4, abs=1e-13)
        assert all(d.degenerate for d in em.directions)

    @pytest.mark.parametrize("phi", np.linspace(0.1, 2 * np.pi - 0.1, 9))
    def test_three_qubit_chain_phase_trace(self, phi):
        em = entanglement_metric(brs_state(3, phi))
        s2, c2 = np.sin(phi / 2) ** 2, np.cos(phi / 2) ** 2
        assert np.trace(em.matrix) == pytest.approx(s2 * (3 + c2) / 4, abs=1e-13)

    def test_measure_equals_trace(self):
        rng = np.random.default_rng(71)
        for m in [2, 3, 5]:
            em = entanglement_metric(StateVector(m, random_state(m, rng)))
            assert abs(em.measure - np.trace(em.matrix)) < 1e-12

    def test_serialization_schema(self):
        em = entanglement_metric(ghzl_state(3, 0.4))
        record = em.to_dict()
        assert set(record) == {"m", "matrix", "directions", "measure", "eigenvalues"}
        assert record["m"] == 3
        assert len(record["matrix"]) == 9
        assert len(record["directions"]) == 3
        assert record["eigenvalues"] == sorted(record["eigenvalues"], reverse=True)
        np.testing.assert_allclose(
            np.asarray(record["matrix"]).reshape(3, 3), em.matrix, atol=0
        )

    def test_invariants_enforced(self):
        bad = np.array([[0.1, 0.2], [0.3, 0.1]])  # asymmetric
        with pytest.raises(ValueError, match="symmetric"):
            EntanglementMetric(2, bad, (Z, Z), 0.2)


class TestSpectrum:
    def test_ghz_rank_one(self):
        sp = spectrum(entanglement_metric(ghzl_state(7, np.pi / 4)))
        assert sp.eigenvalues[0] == pytest.approx(7 / 4, abs=1e-12)
        assert np.all(np.abs(sp.eigenvalues[1:]) < 1e-12)
        assert sp.nonnull_count == 1

    def test_zero_matrix(self):
        sp = spectrum(entanglement_metric(make_basis_state(5, 0)))
        np.testing.assert_allclose(sp.eigenvalues, np.zeros(5), atol=1e-14)
        assert sp.nonnull_count == 0

    def test_chain_phase_full_rank_against_jacobi(self):
        """M=7, phi=pi/2: all eigenvalues positive; values match the Jacobi oracle."""
        em = entanglement_metric(brs_state(7, np.pi / 2))
        sp = spectrum(em)
        assert np.all(sp.eigenvalues > 1e-8)
        np.testing.assert_allclose(sp.eigenvalues, jacobi_eigenvalues(em.matrix), atol=1e-11)

    @pytest.mark.parametrize("m", [2, 4, 6])
    def test_random_states_against_jacobi(self, m):
        rng = np.random.default_rng(80 + m)
        em = entanglement_metric(StateVector(m, random_state(m, rng)))
        np.testing.assert_allclose(
            spectrum(em).eigenvalues, jacobi_eigenvalues(em.matrix), atol=1e-11
        )

    def test_eigenvalue_sum_equals_measure(self):
        rng = np.random.default_rng(81)
        for m in [2, 3, 5]:
            em = entanglement_metric(StateVector(m, random_state(m, rng)))
            assert abs(np.sum(spectrum(em).eigenvalues) - em.measure) < 1e-10


# ---------------------------------------------------------------------------
# distance density
# ---------------------------------------------------------------------------


class TestDistanceDensity:
    def test_optimal_directions_attain_measure(self):
        rng = np.random.default_rng(90)
        for m in [2, 3, 4]:
            s = StateVector(m, random_state(m, rng))
            dirs = optimal_directions(w_vectors(s))
            assert abs(distance_density(s, dirs) - entanglement_measure(s)) < 1e-12

    def test_all_x_on_zero_state(self):
        m = 5
        assert distance_density(make_basis_state(m, 0), [X] * m) == pytest.approx(m / 4)

    def test_ghz_trace_is_constant_maximum(self):
        rng = np.random.default_rng(91)
        m = 4
        s = ghzl_state(m, np.pi / 4)
        for _ in range(20):
            dirs = [_random_direction(rng) for _ in range(m)]
            assert distance_density(s, dirs) >= m / 4 - 1e-12

    def test_bounded_below_by_measure(self):
        rng = np.random.default_rng(92)
        for m in [2, 3, 5]:
            s = StateVector(m, random_state(m, rng))
            e = entanglement_measure(s)
            for _ in range(200):
                dirs = [_random_direction(rng) for _ in range(m)]
                assert distance_density(s, dirs) >= e - 1e-12

    def test_trace_of_metric_matrix(self):
        rng = np.random.default_rng(93)
        s = StateVector(3, random_state(3, rng))
        dirs = [_random_direction(rng) for _ in range(3)]
        assert distance_density(s, dirs) == pytest.approx(
            float(np.trace(metric_matrix(s, dirs))), abs=1e-13
        )
