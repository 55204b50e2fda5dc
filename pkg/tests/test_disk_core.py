import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freeinterp.disk_core import (
    BoundaryPoint,
    DiskPoint,
    DomainError,
    NodeSequence,
    blaschke_factor,
    blaschke_product_excluding,
    principal_power,
    pseudo_hyperbolic,
)


def disk_points(max_modulus=0.99):
    return st.tuples(
        st.floats(0.0, max_modulus), st.floats(-math.pi, math.pi)
    ).map(lambda p: cmath.rect(*p))


def nonzero_disk_points(max_modulus=0.99):
    return st.tuples(
        st.floats(0.01, max_modulus), st.floats(-math.pi, math.pi)
    ).map(lambda p: cmath.rect(*p))


def right_half_plane():
    return st.tuples(st.floats(1e-3, 10.0), st.floats(-10.0, 10.0)).map(lambda p: complex(*p))


class TestBlaschkeFactor:
    def test_zero_at_node(self):
        assert blaschke_factor(0.5, 0.5) == 0

    def test_value_at_origin(self):
        assert blaschke_factor(0.0, 0.5) == pytest.approx(-0.5, abs=1e-15)

    def test_hand_value(self):
        # (0.5 + 0.5)/(1 + 0.25) * (0.5 / -0.5)
        assert blaschke_factor(0.5, -0.5) == pytest.approx(-0.8, abs=1e-15)

    def test_zero_node_rejected(self):
        with pytest.raises(DomainError):
            blaschke_factor(0.3, 0.0)

    def test_pole_rejected(self):
        with pytest.raises(DomainError):
            blaschke_factor(2.0, 0.5)

    @given(nonzero_disk_points(), disk_points())
    def test_modulus_inside(self, a, z):
        assert abs(blaschke_factor(z, a)) < 1.0 + 1e-15

    @given(nonzero_disk_points(), st.floats(-math.pi, math.pi))
    def test_unimodular_on_circle(self, a, t):
        assert abs(blaschke_factor(cmath.exp(1j * t), a)) == pytest.approx(1.0, abs=1e-12)

    @given(nonzero_disk_points())
    def test_origin_is_minus_modulus(self, a):
        assert blaschke_factor(0.0, a) == pytest.approx(-abs(a), abs=1e-15)

    def test_vectorized(self):
        z = np.array([0.0, 0.5, -0.5j])
        out = blaschke_factor(z, 0.5)
        assert out.shape == (3,)
        assert out[1] == 0


class TestPseudoHyperbolic:
    @pytest.mark.parametrize(
        "z, w, expected",
        [(0.5, 0.5, 0.0), (0.5, 0.0, 0.5), (0.5, -0.5, 0.8)],
    )
    def test_examples(self, z, w, expected):
        assert pseudo_hyperbolic(z, w) == pytest.approx(expected, abs=1e-15)

    @given(disk_points(), disk_points())
    def test_symmetric(self, z, w):
        assert pseudo_hyperbolic(z, w) == pytest.approx(pseudo_hyperbolic(w, z), abs=1e-14)

    @given(disk_points(0.9), disk_points(0.9), nonzero_disk_points(0.9), st.floats(-math.pi, math.pi))
    def test_mobius_invariant(self, z, w, b, t):
        lam = cmath.exp(1j * t)

        def phi(v):
            return lam * (v - b) / (1 - b.conjugate() * v)

        assert pseudo_hyperbolic(phi(z), phi(w)) == pytest.approx(pseudo_hyperbolic(z, w), abs=1e-12)

    def test_rejects_exterior(self):
        with pytest.raises(DomainError):
            pseudo_hyperbolic(1.0, 0.0)


class TestPrincipalPower:
    def test_one(self):
        assert principal_power(1.0, 0.7) == pytest.approx(1.0)

    def test_sqrt(self):
        assert principal_power(0.5, 0.5) == pytest.approx(math.sqrt(0.5), rel=1e-15)

    def test_polar_hand_value(self):
        expected = 2 ** 0.25 * complex(math.cos(math.pi / 8), math.sin(math.pi / 8))
        assert principal_power(1 + 1j, 0.5) == pytest.approx(expected, rel=1e-15)
        assert principal_power(1 + 1j, 0.5) == pytest.approx(1.0987 + 0.4551j, abs=1e-4)

    def test_left_half_plane_rejected(self):
        with pytest.raises(DomainError):
            principal_power(-1.0 + 0.1j, 0.5)
        with pytest.raises(DomainError):
            principal_power(0.0, 0.5)

    @given(right_half_plane(), st.floats(0.01, 3.0), st.floats(0.01, 3.0))
    def test_exponent_law(self, w, p, q):
        lhs = principal_power(w, p) * principal_power(w, q)
        assert abs(lhs - principal_power(w, p + q)) <= 1e-12 * max(1.0, abs(lhs))

    @given(right_half_plane(), st.floats(0.01, 3.0))
    def test_modulus(self, w, p):
        assert abs(principal_power(w, p)) == pytest.approx(abs(w) ** p, rel=1e-12)


class TestProductExcluding:
    def test_empty_product(self):
        assert blaschke_product_excluding([0.5], 0, 0.3) == 1

    def test_two_nodes(self):
        assert blaschke_product_excluding([0.5, -0.5], 0, 0.5) == pytest.approx(-0.8, abs=1e-15)
        assert blaschke_product_excluding([0.5, -0.5], 1, -0.5) == pytest.approx(-0.8, abs=1e-15)

    def test_zero_node_rejected(self):
        with pytest.raises(DomainError):
            blaschke_product_excluding([0.5, 0.0], 0, 0.1)

    def test_duplicate_rejected(self):
        with pytest.raises(DomainError):
            blaschke_product_excluding([0.5, 0.5], 0, 0.1)

    def test_vanishes_at_other_nodes(self):
        rng = np.random.default_rng(3)
        a = 0.9 * np.sqrt(rng.random(8)) * np.exp(2j * np.pi * rng.random(8))
        for n in range(8):
            for m in range(8):
                if m != n:
                    assert abs(blaschke_product_excluding(a, n, a[m])) <= 1e-12


class TestTypes:
    def test_boundary_point_normalized(self):
        xi = BoundaryPoint(complex(0.6, 0.8) * (1 + 1e-9))
        assert abs(abs(xi.value) - 1.0) <= 1e-15

    def test_boundary_point_far_off_circle(self):
        with pytest.raises(DomainError):
            BoundaryPoint(0.5)

    def test_disk_point(self):
        assert complex(DiskPoint(0.3j)) == 0.3j
        with pytest.raises(DomainError):
            DiskPoint(1.0)

    def test_node_sequence(self):
        a = NodeSequence([0.1, 0.2j])
        assert len(a) == 2
        with pytest.raises(DomainError):
            NodeSequence([0.1, 0.1])
        with pytest.raises(DomainError):
            NodeSequence([])
        with pytest.raises(DomainError):
            NodeSequence([0.0, 0.5], require_nonzero=True)
        assert NodeSequence([0.0, 0.5]).has_zero
