"""Grids, fields, and (mixed) quadrature norms."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dispersia.fields import (
    EUCLIDEAN,
    HYPERBOLIC,
    Field,
    MixedNormSpec,
    gaussian_field,
    lp_norm,
    make_grid,
    mixed_norm,
    tensor_product,
)

RNG = np.random.default_rng(20240817)


def random_field(grid, seed=0):
    rng = np.random.default_rng(seed)
    vals = rng.standard_normal(grid.n_points) + 1j * rng.standard_normal(grid.n_points)
    return Field((grid,), vals)


class TestMakeGrid:
    def test_euclidean_spacing(self):
        grid = make_grid(256, 100.0)
        assert grid.spacing == pytest.approx(0.390625, abs=0)

    def test_hyperbolic_first_node_cell_centered(self):
        grid = make_grid(128, 20.0, HYPERBOLIC)
        assert grid.nodes[0] == pytest.approx(0.078125, abs=0)

    def test_too_few_points_rejected(self):
        with pytest.raises(ValueError):
            make_grid(7, 10.0)

    def test_nonpositive_length_rejected(self):
        with pytest.raises(ValueError):
            make_grid(64, 0.0)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            make_grid(64, 10.0, "strange")

    def test_euclidean_weights_are_spacing(self):
        grid = make_grid(16, 8.0)
        assert np.allclose(grid.weights, 0.5)

    def test_hyperbolic_weights_are_sphere_areas(self):
        grid = make_grid(32, 4.0, HYPERBOLIC)
        expected = 4.0 * np.pi * np.sinh(grid.nodes) ** 2 * grid.spacing
        assert np.allclose(grid.weights, expected)


class TestField:
    def test_shape_mismatch_rejected(self):
        grid = make_grid(16, 4.0)
        with pytest.raises(ValueError):
            Field((grid,), np.zeros(15))

    def test_nonfinite_rejected(self):
        grid = make_grid(16, 4.0)
        vals = np.zeros(16)
        vals[3] = np.nan
        with pytest.raises(ValueError):
            Field((grid,), vals)

    def test_default_axis_labels(self):
        grid = make_grid(16, 4.0)
        f = Field((grid, grid), np.zeros((16, 16)))
        assert f.axes == ("x0", "x1")


class TestTensorProduct:
    def test_single_nonzero_entry(self):
        grid = make_grid(8, 4.0)
        e0 = np.zeros(8)
        e0[0] = 1.0
        f = Field((grid,), e0)
        prod = tensor_product(f, f)
        expected = np.zeros((8, 8))
        expected[0, 0] = 1.0
        assert np.array_equal(prod.values, expected)

    def test_l2_norm_factorizes(self):
        grid = make_grid(32, 7.0)
        f, g = random_field(grid, 1), random_field(grid, 2)
        prod = tensor_product(f, g)
        assert lp_norm(prod, 2) == pytest.approx(lp_norm(f, 2) * lp_norm(g, 2), rel=1e-12)

    def test_sup_norm_against_constant_one(self):
        grid = make_grid(32, 7.0)
        f = random_field(grid, 3)
        ones = Field((grid,), np.ones(32))
        prod = tensor_product(f, ones)
        assert lp_norm(prod, math.inf) == pytest.approx(lp_norm(f, math.inf), rel=1e-14)

    @pytest.mark.parametrize("r", [1, 2, math.inf])
    def test_norm_factorization_every_r(self, r):
        grid = make_grid(16, 3.0)
        f, g = random_field(grid, 4), random_field(grid, 5)
        prod = tensor_product(f, g)
        assert lp_norm(prod, r) == pytest.approx(lp_norm(f, r) * lp_norm(g, r), rel=1e-11)

    def test_rank2_input_rejected(self):
        grid = make_grid(8, 2.0)
        f = random_field(grid)
        prod = tensor_product(f, f)
        with pytest.raises(ValueError):
            tensor_product(prod, f)


class TestLpNorm:
    def test_constant_one_l1_is_total_measure(self):
        grid = make_grid(64, 10.0)
        f = Field((grid,), np.ones(64))
        assert lp_norm(f, 1) == pytest.approx(10.0, abs=1e-12)

    def test_l2_matches_brute_force_sum(self):
        grid = make_grid(128, 30.0)
        f = gaussian_field(grid, 1.3)
        brute = math.sqrt(sum(abs(v) ** 2 * grid.spacing for v in f.values))
        assert lp_norm(f, 2) == pytest.approx(brute, rel=1e-13)

    def test_sup_norm_picks_max_modulus(self):
        grid = make_grid(8, 1.0)
        vals = np.zeros(8, dtype=complex)
        vals[1] = -3j
        vals[2] = 2
        f = Field((grid,), vals)
        assert lp_norm(f, math.inf) == pytest.approx(3.0, abs=0)

    def test_r_below_one_rejected(self):
        grid = make_grid(8, 1.0)
        f = random_field(grid)
        with pytest.raises(ValueError):
            lp_norm(f, 0.5)

    def test_hyperbolic_l2_matches_brute_force(self):
        grid = make_grid(64, 8.0, HYPERBOLIC)
        f = gaussian_field(grid, 0.5, center=1.0)
        brute = math.sqrt(float(np.sum(grid.weights * np.abs(f.values) ** 2)))
        assert lp_norm(f, 2) == pytest.approx(brute, rel=1e-13)

    @given(c=st.complex_numbers(max_magnitude=1e6, min_magnitude=0), r=st.sampled_from([1, 1.5, 2, 3, math.inf]))
    @settings(max_examples=40, deadline=None)
    def test_absolute_homogeneity(self, c, r):
        grid = make_grid(16, 4.0)
        f = random_field(grid, 7)
        scaled = f.with_values(c * f.values)
        assert lp_norm(scaled, r) == pytest.approx(abs(c) * lp_norm(f, r), rel=1e-10, abs=1e-12)


class TestMixedNorm:
    def test_indicator_row_sup_of_integral(self):
        grid = make_grid(16, 8.0)
        vals = np.zeros((16, 16))
        vals[:, 5] = 1.0  # one y-column switched on for every x
        u = Field((grid, grid), vals, axes=("x", "y"))
        spec = MixedNormSpec((("x", 1), ("y", math.inf)))
        # sup over y of the x-integral: the column integrates to length 8
        assert mixed_norm(u, spec) == pytest.approx(8.0, rel=1e-12)

    def test_equal_exponents_collapse_to_lp(self):
        grid = make_grid(16, 3.0)
        rng = np.random.default_rng(11)
        u = Field(
            (grid, grid),
            rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16)),
            axes=("x", "y"),
        )
        for r in (1, 2, 3):
            spec = MixedNormSpec((("x", r), ("y", r)))
            assert mixed_norm(u, spec) == pytest.approx(lp_norm(u, r), rel=1e-12)

    def test_one_inf_ordering_inequality(self):
        grid = make_grid(16, 3.0)
        rng = np.random.default_rng(13)
        u = Field(
            (grid, grid),
            rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16)),
            axes=("x", "y"),
        )
        inner_first = mixed_norm(u, MixedNormSpec((("x", 1), ("y", math.inf))))
        outer_first = mixed_norm(u, MixedNormSpec((("y", math.inf), ("x", 1))))
        assert inner_first <= outer_first + 1e-10

    def test_axis_mismatch_rejected(self):
        grid = make_grid(16, 3.0)
        u = Field((grid, grid), np.zeros((16, 16)), axes=("x", "y"))
        with pytest.raises(ValueError):
            mixed_norm(u, MixedNormSpec((("x", 1), ("z", 2))))

    @given(
        seed=st.integers(0, 2**32 - 1),
        r_pair=st.sampled_from(
            [(rt, r) for rt in (1, 4 / 3, 2, 3, 4, math.inf) for r in (1, 4 / 3, 2, 3, 4, math.inf) if rt <= r]
        ),
    )
    @settings(max_examples=60, deadline=None)
    def test_minkowski_integral_inequality(self, seed, r_pair):
        r_tilde, r = r_pair
        grid = make_grid(12, 2.5)
        rng = np.random.default_rng(seed)
        u = Field(
            (grid, grid),
            rng.standard_normal((12, 12)) + 1j * rng.standard_normal((12, 12)),
            axes=("x", "y"),
        )
        lhs = mixed_norm(u, MixedNormSpec((("x", r_tilde), ("y", r))))
        rhs = mixed_norm(u, MixedNormSpec((("y", r), ("x", r_tilde))))
        assert lhs <= rhs + 1e-10


class TestGaussianField:
    def test_peaks_at_torus_center_by_default(self):
        grid = make_grid(64, 20.0)
        f = gaussian_field(grid, 1.0)
        peak = grid.nodes[int(np.argmax(np.abs(f.values)))]
        assert peak == pytest.approx(10.0, abs=grid.spacing)

    def test_periodic_wrap_of_distance(self):
        grid = make_grid(64, 20.0)
        f = gaussian_field(grid, 1.0, center=0.0)
        # the bump must be symmetric across the periodic boundary
        assert f.values[1] == pytest.approx(f.values[-1], rel=1e-12)
