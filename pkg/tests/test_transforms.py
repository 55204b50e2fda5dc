import math

import numpy as np
import pytest

from freeinterp.conditions import sigma_alpha
from freeinterp.disk_core import DomainError
from freeinterp.quadrature import QuadratureSpec
from freeinterp.transforms import (
    DiscreteMeasure,
    FractionalTransform,
    RationalFamily,
    default_kernel_samples,
    differentiate,
    estimate_kernel_constant,
    f_alpha_bound_via_derivative,
    forward_trace,
    kernel_integral_ratio,
    norm_upper_bound,
    omega,
    trace_bound,
)

from oracles import midpoint_disk_integral, random_admissible_nodes

ALPHAS = [0.25, 0.5, 0.75, 1.0]


def random_measure(rng, n_atoms):
    t = np.sort(rng.random(n_atoms)) * 2 * np.pi
    c = rng.normal(size=n_atoms) + 1j * rng.normal(size=n_atoms)
    return DiscreteMeasure(np.exp(1j * t), c)


class TestMeasure:
    def test_norm_and_atoms(self):
        m = DiscreteMeasure.from_atoms([(1.0, 3.0), (1j, -4.0)])
        assert m.norm == 7.0
        assert len(m) == 2

    def test_sum_merges_equal_positions(self):
        m = DiscreteMeasure.from_atoms([(1.0, 1.0)]) + DiscreteMeasure.from_atoms([(1.0, 2.0), (-1.0, 1.0)])
        assert len(m) == 2
        assert m.norm == 4.0

    def test_scaling(self):
        m = 2 * DiscreteMeasure.from_atoms([(1.0, 1.0 + 1j)])
        assert m.c[0] == 2 + 2j

    def test_duplicate_atoms_rejected(self):
        with pytest.raises(DomainError):
            DiscreteMeasure([1.0, 1.0], [1.0, 2.0])

    def test_atom_off_circle_rejected(self):
        with pytest.raises(DomainError):
            DiscreteMeasure([0.5], [1.0])

    def test_empty(self):
        assert DiscreteMeasure.empty().norm == 0.0


class TestTransform:
    def test_single_atom_value(self):
        g = FractionalTransform(0.5, DiscreteMeasure.from_atoms([(1.0, 1.0)]))
        assert g(0.0) == pytest.approx(1.0)
        assert g(0.75) == pytest.approx(2.0)  # (1/4)^(-1/2)

    def test_linear(self):
        rng = np.random.default_rng(1)
        m1, m2 = random_measure(rng, 3), random_measure(rng, 4)
        z = np.array([0.1, 0.5j, -0.7 + 0.1j])
        g = FractionalTransform(0.7, m1) + FractionalTransform(0.7, m2)
        assert g(z) == pytest.approx(FractionalTransform(0.7, m1)(z) + FractionalTransform(0.7, m2)(z))

    def test_exact_derivative(self):
        rng = np.random.default_rng(2)
        g = FractionalTransform(0.6, random_measure(rng, 5))
        d = differentiate(g)
        assert d.alpha == pytest.approx(1.6)
        z, h = 0.2 + 0.3j, 1e-6
        assert d(z) == pytest.approx((g(z + h) - g(z - h)) / (2 * h), rel=1e-7)

    def test_norm_upper_bound(self):
        g = FractionalTransform(0.5, DiscreteMeasure.from_atoms([(1.0, 3.0), (-1.0, -4j)]))
        assert norm_upper_bound(g) == 7.0

    def test_rejects_boundary_evaluation(self):
        g = FractionalTransform(0.5, DiscreteMeasure.from_atoms([(1.0, 1.0)]))
        with pytest.raises(DomainError):
            g(1.0)

    def test_rational_family_bases_in_closed_disk(self):
        with pytest.raises(DomainError):
            RationalFamily(1.0, [1.5], [1.0])

    def test_exponent_mismatch(self):
        with pytest.raises(DomainError):
            RationalFamily(1.0, [0.5], [1.0]) + RationalFamily(2.0, [0.5], [1.0])


class TestOmega:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_constant(self, alpha):
        res = omega(lambda z: np.ones_like(z), alpha)
        assert res.converged
        assert res.value == pytest.approx(2 * math.pi / alpha, rel=1e-12)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_identity(self, alpha):
        res = omega(lambda z: z, alpha)
        assert res.value == pytest.approx(2 * math.pi / (alpha * (alpha + 1)), rel=1e-12)

    def test_against_midpoint_oracle(self):
        f = lambda z: 1.0 / (1.0 - 0.5 * z)
        ref = midpoint_disk_integral(f, 1.0)
        assert omega(f, 1.0).value == pytest.approx(ref, rel=1e-5)

    def test_against_midpoint_oracle_fractional(self):
        f = lambda z: (1.0 - 0.3j * z) ** 2
        ref = midpoint_disk_integral(f, 0.5, nr=3000)
        assert omega(f, 0.5).value == pytest.approx(ref, rel=1e-4)

    def test_divergence_is_flagged(self):
        # |f'| ~ |1 - z|^-(alpha+1) against weight (1 - r)^(alpha-1) diverges logarithmically
        g = FractionalTransform(0.5, DiscreteMeasure.from_atoms([(1.0, 1.0)]))
        res = omega(g.derivative(), 0.5, peaks=[1.0])
        assert not res.converged

    def test_rejects_bad_alpha(self):
        with pytest.raises(DomainError):
            omega(lambda z: z, 0.0)


class TestBoundViaDerivative:
    def test_identity_function(self):
        b = f_alpha_bound_via_derivative(lambda z: z, lambda z: np.ones_like(z), 1.0)
        assert b.total == pytest.approx(2.0, rel=1e-12)
        assert b.f0_term == 0.0

    @pytest.mark.parametrize("alpha", [0.5, 1.0])
    @pytest.mark.parametrize("w", [0.0, 0.5, 0.9j, -0.6 + 0.3j])
    def test_kernels_at_least_one(self, alpha, w):
        k = RationalFamily(alpha, [w], [1.0])
        b = f_alpha_bound_via_derivative(k, k.derivative(), alpha, peaks=[w])
        assert b.converged
        assert b.total >= 1 - 1e-9

    def test_inconsistent_derivative_rejected(self):
        with pytest.raises(DomainError, match="finite differences"):
            f_alpha_bound_via_derivative(lambda z: z**2, lambda z: z, 1.0)


class TestTrace:
    def test_single_atom(self):
        # (1 - 0.25)^(1/2) / (1 - 0.5)^(1/2) = sqrt(1.5)
        g = FractionalTransform(0.5, DiscreteMeasure.from_atoms([(1.0, 1.0)]))
        tr = forward_trace(g, [0.5])
        assert tr.l1_sum == pytest.approx(math.sqrt(1.5))

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0])
    def test_bounded_by_sigma(self, alpha):
        rng = np.random.default_rng(4)
        for _ in range(20):
            g = FractionalTransform(alpha, random_measure(rng, int(rng.integers(1, 9))))
            a = random_admissible_nodes(rng, int(rng.integers(1, 13)))
            tr = forward_trace(g, a)
            atomwise = trace_bound(g, a)
            assert tr.l1_sum <= atomwise + 1e-9
            assert atomwise <= g.measure.norm * sigma_alpha(a, alpha).upper + 1e-9


class TestKernelIntegral:
    def test_origin_half(self):
        # 2 pi int_0^1 (1 - r)^(-1/2) 2F1(1/4, 1/4; 1; r^2) dr, evaluated with mpmath
        res = kernel_integral_ratio(0.0, 1.0, 0.5)
        assert res.converged
        assert res.rhs == 1.0
        assert res.lhs == pytest.approx(13.330173593261946, rel=1e-10)

    def test_origin_one(self):
        assert kernel_integral_ratio(0.0, 1.0, 1.0).lhs == pytest.approx(7.327724753417, rel=1e-10)

    def test_interior_point(self):
        z = 0.9 * np.exp(0.3j)
        res = kernel_integral_ratio(z, 1.0, 0.5)
        assert res.lhs == pytest.approx(50.897948718715789, rel=1e-9)
        assert res.rhs == pytest.approx(0.1 ** -0.5 * abs(1 - z) ** -0.5)

    def test_joint_rotation_invariance(self):
        z, xi, lam = 0.7 + 0.2j, np.exp(2.0j), np.exp(0.9j)
        r1 = kernel_integral_ratio(z, xi, 0.75).ratio
        r2 = kernel_integral_ratio(lam * z, lam * xi, 0.75).ratio
        assert r1 == pytest.approx(r2, rel=1e-8)

    def test_rejects_alpha_above_one(self):
        with pytest.raises(DomainError):
            kernel_integral_ratio(0.0, 1.0, 1.5)

    def test_default_samples(self):
        s = default_kernel_samples()
        assert len(s) == 4 * 16 * 8

    def test_estimate_collapses_symmetric_pairs(self):
        est = estimate_kernel_constant(default_kernel_samples(radii=(0.0, 0.5)), 0.5)
        assert est.n_samples == 256
        assert est.n_quadratures < 30
        assert est.value == pytest.approx(13.330173593261946, rel=1e-9)
        assert est.converged

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha, expected", [(0.5, 13.3302), (1.0, 22.4809)])
    def test_default_estimate(self, alpha, expected):
        est = estimate_kernel_constant(default_kernel_samples(), alpha)
        assert est.value == pytest.approx(expected, abs=1e-4)

    def test_log_growth_at_one(self):
        r = [kernel_integral_ratio(1 - 10.0**-k, -1.0, 1.0).ratio for k in (1, 2, 3)]
        assert r[1] - r[0] > 5 and r[2] - r[1] > 5

    def test_quadrature_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=0.1)


def test_interface_aliases():
    from freeinterp.transforms import estimate_lemma13_constant, lemma13_ratio

    assert lemma13_ratio is kernel_integral_ratio
    assert estimate_lemma13_constant is estimate_kernel_constant
