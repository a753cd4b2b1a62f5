"""Grids, complex fields on products of grids, and (mixed) Lebesgue norms.

A Grid1D is one factor of the product domain: either a periodic torus
segment of the real line, or the truncated radial half-line of the
3-dimensional hyperbolic space carried with its sinh^2 surface measure.
Fields are plain immutable (grids, values) pairs; norms are quadrature
weighted so that a sampled function's norm approximates the continuum one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

EUCLIDEAN = "euclidean-torus"
HYPERBOLIC = "hyperbolic-radial"

_MIN_POINTS = 8


def _exponent_value(r) -> float:
    """Coerce a norm exponent (number, Fraction, or the INF sentinel) to float."""
    x = float(r)
    if math.isnan(x):
        raise ValueError("norm exponent must not be NaN")
    return x


@dataclass(frozen=True)
class Grid1D:
    n_points: int
    length: float
    kind: str = EUCLIDEAN

    def __post_init__(self):
        if self.kind not in (EUCLIDEAN, HYPERBOLIC):
            raise ValueError(f"unknown grid kind {self.kind!r}")
        if self.n_points < _MIN_POINTS:
            raise ValueError(f"n_points must be >= {_MIN_POINTS}, got {self.n_points}")
        if not self.length > 0:
            raise ValueError(f"length must be positive, got {self.length}")

    @property
    def spacing(self) -> float:
        return self.length / self.n_points

    @property
    def r_max(self) -> float:
        if self.kind != HYPERBOLIC:
            raise ValueError("r_max only defined for hyperbolic-radial grids")
        return self.length

    @property
    def nodes(self) -> np.ndarray:
        dx = self.spacing
        if self.kind == EUCLIDEAN:
            return dx * np.arange(self.n_points)
        # cell-centered to keep sinh(r) > 0 at every node
        return dx * (np.arange(self.n_points) + 0.5)

    @property
    def weights(self) -> np.ndarray:
        """Quadrature weight at each node (measure of its cell)."""
        dx = self.spacing
        if self.kind == EUCLIDEAN:
            return np.full(self.n_points, dx)
        # geodesic-sphere area 4*pi*sinh(r)^2 in H^3
        return 4.0 * np.pi * np.sinh(self.nodes) ** 2 * dx


def make_grid(n_points: int, length: float, kind: str = EUCLIDEAN) -> Grid1D:
    return Grid1D(n_points=int(n_points), length=float(length), kind=kind)


@dataclass(frozen=True)
class Field:
    grids: tuple[Grid1D, ...]
    values: np.ndarray
    axes: tuple[str, ...] = ()

    def __post_init__(self):
        grids = tuple(self.grids)
        object.__setattr__(self, "grids", grids)
        if not 1 <= len(grids) <= 3:
            raise ValueError("Field supports rank 1 to 3")
        vals = np.asarray(self.values, dtype=complex)
        expected = tuple(g.n_points for g in grids)
        if vals.shape != expected:
            raise ValueError(f"values shape {vals.shape} does not match grids {expected}")
        if not np.all(np.isfinite(vals)):
            raise ValueError("field values must be finite")
        object.__setattr__(self, "values", vals)
        axes = tuple(self.axes) if self.axes else tuple(f"x{i}" for i in range(len(grids)))
        if len(axes) != len(grids):
            raise ValueError("one axis label per grid required")
        object.__setattr__(self, "axes", axes)

    @property
    def rank(self) -> int:
        return len(self.grids)

    def with_values(self, values: np.ndarray) -> "Field":
        return Field(self.grids, values, self.axes)

    def axis_index(self, name: str) -> int:
        try:
            return self.axes.index(name)
        except ValueError:
            raise ValueError(f"field has no axis {name!r} (axes: {self.axes})") from None


@dataclass(frozen=True)
class MixedNormSpec:
    """Ordered (axis, exponent) pairs, innermost norm first.

    The first listed axis norm is evaluated first; e.g. [(x, 1), (y, inf)]
    is sup over y of the integral over x.
    """

    entries: tuple = field(default_factory=tuple)

    def __post_init__(self):
        entries = tuple((axis, r) for axis, r in self.entries)
        for _, r in entries:
            if _exponent_value(r) < 1:
                raise ValueError("mixed-norm exponents must be >= 1")
        object.__setattr__(self, "entries", entries)


def tensor_product(f: Field, g: Field) -> Field:
    if f.rank != 1 or g.rank != 1:
        raise ValueError("tensor_product expects two rank-1 fields")
    values = np.multiply.outer(f.values, g.values)
    axes = f.axes + g.axes
    if len(set(axes)) != 2:
        axes = ("x", "y")
    return Field(f.grids + g.grids, values, axes)


def _weighted_axis_norm(values: np.ndarray, weights: np.ndarray, r: float, axis: int) -> np.ndarray:
    mag = np.abs(values)
    if math.isinf(r):
        return mag.max(axis=axis)
    shape = [1] * values.ndim
    shape[axis] = len(weights)
    w = weights.reshape(shape)
    return np.sum(w * mag**r, axis=axis) ** (1.0 / r)


def lp_norm(u: Field, r) -> float:
    """Quadrature-weighted L^r norm over the whole product domain."""
    rv = _exponent_value(r)
    if rv < 1:
        raise ValueError(f"L^r norm needs r >= 1, got {r}")
    if math.isinf(rv):
        return float(np.abs(u.values).max())
    acc = u.values
    for axis in reversed(range(u.rank)):
        acc = _weighted_axis_norm(acc, u.grids[axis].weights, rv, axis)
    return float(acc)


def mixed_norm(u: Field, spec: MixedNormSpec) -> float:
    """Iterated axis norms, innermost-first in the order given."""
    names = [axis for axis, _ in spec.entries]
    if sorted(names) != sorted(u.axes):
        raise ValueError(f"mixed-norm axes {names} must cover field axes {list(u.axes)} exactly")
    acc = u.values
    # remaining[i] = original axis position of acc's i-th dimension
    remaining = list(range(u.rank))
    for axis_name, r in spec.entries:
        pos = remaining.index(u.axis_index(axis_name))
        acc = _weighted_axis_norm(acc, u.grids[remaining[pos]].weights, _exponent_value(r), pos)
        del remaining[pos]
    return float(acc)


def gaussian_field(grid: Grid1D, width: float = 1.0, center: float | None = None) -> Field:
    """Gaussian bump exp(-(x-center)^2 / (2 width^2)), torus-centered by default."""
    if center is None:
        center = grid.length / 2 if grid.kind == EUCLIDEAN else grid.length / 8
    x = grid.nodes
    if grid.kind == EUCLIDEAN:
        d = np.mod(x - center + grid.length / 2, grid.length) - grid.length / 2
    else:
        d = x - center
    return Field((grid,), np.exp(-(d**2) / (2.0 * width**2)))
