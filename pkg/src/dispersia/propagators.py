"""Schrodinger propagators on Euclidean tori and their tensor composition.

Sign convention, fixed once for the whole package: the free factor flow is
the Fourier multiplier exp(-i t c xi^2) on the discrete torus frequencies
xi = 2 pi k / L, i.e. exp(i t c Laplacian). Potential and nonlinear substeps
then carry phase exp(-i V dt), so every substep is a modulus-1 multiplier
and the schemes are exactly unitary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.fft as sfft

from .fields import EUCLIDEAN, HYPERBOLIC, Field, Grid1D, lp_norm


@dataclass(frozen=True)
class PotentialSpec:
    """Built-in real potential families; amplitude >= 0 keeps the sign
    condition of the 1-D weighted class."""

    family: str  # gaussian-bump | sech-squared | custom-samples
    amplitude: float = 1.0
    width: float = 1.0
    center: float = 0.0
    samples: tuple | None = None

    def __post_init__(self):
        if self.family not in ("gaussian-bump", "sech-squared", "custom-samples"):
            raise ValueError(f"unknown potential family {self.family!r}")
        if self.amplitude < 0:
            raise ValueError("amplitude must be >= 0 (sign condition V >= 0)")
        if not self.width > 0:
            raise ValueError("width must be positive")
        if self.family == "custom-samples" and self.samples is None:
            raise ValueError("custom-samples potential needs samples")

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Analytic profile at signed distances x from the center."""
        d = (np.asarray(x, dtype=float) - self.center) / self.width
        if self.family == "gaussian-bump":
            return self.amplitude * np.exp(-(d**2))
        if self.family == "sech-squared":
            return self.amplitude / np.cosh(d) ** 2
        raise ValueError("custom-samples potential has no analytic profile")

    def sample(self, grid: Grid1D) -> np.ndarray:
        """Sample on torus nodes, using the minimum-image distance to the
        center so the bump sits periodically on the torus."""
        if self.family == "custom-samples":
            v = np.asarray(self.samples, dtype=float)
            if v.shape != (grid.n_points,):
                raise ValueError("custom samples must match the grid")
            return v
        x = grid.nodes
        d = np.mod(x - self.center + grid.length / 2, grid.length) - grid.length / 2
        return self.evaluate(d + self.center)


@dataclass(frozen=True)
class PropagatorSpec:
    kind: str  # free | free-plus-potential | hyperbolic-radial
    grid: Grid1D
    potential: tuple | None = None  # sampled V on the grid nodes
    laplacian_coefficient: float = 1.0
    claimed_decay_exponent: float = 0.5
    split_steps_per_unit_time: int = 64

    def __post_init__(self):
        if self.kind not in ("free", "free-plus-potential", "hyperbolic-radial"):
            raise ValueError(f"unknown propagator kind {self.kind!r}")
        if (self.potential is not None) != (self.kind == "free-plus-potential"):
            raise ValueError("potential present iff kind is free-plus-potential")
        if self.potential is not None:
            v = np.asarray(self.potential, dtype=float)
            if v.shape != (self.grid.n_points,):
                raise ValueError("potential samples must match the grid")
            object.__setattr__(self, "potential", tuple(v))
        if not self.laplacian_coefficient > 0:
            raise ValueError("laplacian coefficient must be positive")
        if self.split_steps_per_unit_time < 1:
            raise ValueError("split_steps_per_unit_time must be >= 1")

    @property
    def potential_array(self) -> np.ndarray:
        return np.asarray(self.potential, dtype=float)


def torus_frequencies(grid: Grid1D) -> np.ndarray:
    return 2.0 * np.pi * np.fft.fftfreq(grid.n_points, d=grid.spacing)


def _axis_shape(values: np.ndarray, axis: int, arr: np.ndarray) -> np.ndarray:
    shape = [1] * values.ndim
    shape[axis] = arr.shape[0]
    return arr.reshape(shape)


def _free_axis(values: np.ndarray, grid: Grid1D, t: float, c: float, axis: int) -> np.ndarray:
    xi = torus_frequencies(grid)
    mult = np.exp(-1j * t * c * xi**2)
    spec = sfft.fft(values, axis=axis)
    spec *= _axis_shape(values, axis, mult)
    return sfft.ifft(spec, axis=axis)


def _splitstep_axis(
    values: np.ndarray,
    grid: Grid1D,
    potential: np.ndarray,
    t: float,
    c: float,
    steps_per_unit: int,
    axis: int,
    n_steps: int | None = None,
) -> np.ndarray:
    """Strang splitting along one axis, potential half-phases outermost."""
    if t == 0:
        return values.copy()
    n = n_steps if n_steps is not None else max(1, math.ceil(abs(t) * steps_per_unit))
    dt = t / n
    half = np.exp(-0.5j * dt * potential)
    half = _axis_shape(values, axis, half)
    full = half * half
    out = values * half
    for k in range(n):
        out = _free_axis(out, grid, dt, c, axis)
        out *= full if k < n - 1 else half
    return out


def _check_grid(spec: PropagatorSpec, u: Field, axis: int = 0):
    if u.grids[axis] != spec.grid:
        raise ValueError("field grid does not match propagator grid")


def free_propagate(spec: PropagatorSpec, u: Field, t: float) -> Field:
    if spec.kind != "free":
        raise ValueError("free_propagate requires a free propagator spec")
    if u.rank != 1:
        raise ValueError("free_propagate acts on rank-1 fields")
    _check_grid(spec, u)
    return u.with_values(_free_axis(u.values, spec.grid, t, spec.laplacian_coefficient, 0))


def splitstep_propagate(spec: PropagatorSpec, u: Field, t: float) -> Field:
    if spec.kind != "free-plus-potential":
        raise ValueError("splitstep_propagate requires a potential propagator spec")
    if u.rank != 1:
        raise ValueError("splitstep_propagate acts on rank-1 fields")
    if t < 0:
        raise ValueError("split-step time must be nonnegative")
    _check_grid(spec, u)
    out = _splitstep_axis(
        u.values,
        spec.grid,
        spec.potential_array,
        t,
        spec.laplacian_coefficient,
        spec.split_steps_per_unit_time,
        0,
    )
    return u.with_values(out)


def propagate_axis(spec: PropagatorSpec, values: np.ndarray, t: float, axis: int) -> np.ndarray:
    """Apply one factor propagator along a single axis of a values array."""
    if spec.kind == "free":
        return _free_axis(values, spec.grid, t, spec.laplacian_coefficient, axis)
    if spec.kind == "free-plus-potential":
        return _splitstep_axis(
            values,
            spec.grid,
            spec.potential_array,
            t,
            spec.laplacian_coefficient,
            spec.split_steps_per_unit_time,
            axis,
        )
    from .hyperbolic import h3_axis_propagate

    return h3_axis_propagate(values, spec.grid, t, axis, c=spec.laplacian_coefficient)


def product_propagate(specs, u: Field, t: float) -> Field:
    """Compose the factor flows axis by axis; the factor operators act on
    disjoint axes so the sweep order is immaterial up to rounding."""
    specs = list(specs)
    if len(specs) != u.rank:
        raise ValueError(f"need {u.rank} propagator specs, got {len(specs)}")
    for axis, spec in enumerate(specs):
        if u.grids[axis] != spec.grid:
            raise ValueError(f"axis {axis}: field grid does not match spec grid")
    values = u.values
    for axis, spec in enumerate(specs):
        values = propagate_axis(spec, values, t, axis)
    return u.with_values(values)


def _require_two_particle_grid(u: Field) -> int:
    if u.rank != 2:
        raise ValueError("two-particle fields are rank 2")
    g0, g1 = u.grids
    if g0 != g1:
        raise ValueError("two-particle grids must be square (same grid on both axes)")
    if g0.kind != EUCLIDEAN:
        raise ValueError("two-particle grids must be euclidean tori")
    n = g0.n_points
    if n % 2 == 0:
        raise ValueError("two-particle grids must have odd point count")
    return n


def two_particle_rotate(u: Field, direction: str = "forward") -> Field:
    """Exact lattice change of variables (j,k) -> (j+k, j-k) mod N.

    A bijection on the (Z_N)^2 lattice exactly when N is odd (the map has
    determinant 2)."""
    n = _require_two_particle_grid(u)
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    if direction == "forward":
        inv2 = (n + 1) // 2  # inverse of 2 mod odd N
        out = u.values[(inv2 * (j + k)) % n, (inv2 * (j - k)) % n]
    elif direction == "inverse":
        out = u.values[(j + k) % n, (j - k) % n]
    else:
        raise ValueError("direction must be 'forward' or 'inverse'")
    return u.with_values(out)


def two_particle_propagate(
    grid: Grid1D, potential: np.ndarray, u0: Field, t: float, steps: int
) -> Field:
    """Two-particle flow with interaction potential of the difference
    variable: rotate to sum/difference coordinates, split-step there with
    Laplacian coefficient 2 (the unnormalized rotation doubles the
    Laplacian) and the one-variable potential acting along the difference
    axis, rotate back."""
    n = _require_two_particle_grid(u0)
    if u0.grids[0] != grid:
        raise ValueError("field grid does not match the given grid")
    v = np.asarray(potential, dtype=float)
    if v.shape != (n,):
        raise ValueError("potential samples must match the grid")
    if t < 0:
        raise ValueError("time must be nonnegative")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    w = two_particle_rotate(u0, "forward").values
    if t > 0:
        dt = t / steps
        half = np.exp(-0.5j * dt * v)[np.newaxis, :]
        full = half * half
        xi = torus_frequencies(grid)
        # Kinetic symbol transported through the lattice map: the sum and
        # difference indices of a rotated mode carry the original
        # frequencies, and xi_s^2 + xi_d^2 = 2(xi_m^2 + xi_n^2) on
        # unwrapped modes -- the doubled Laplacian of the rotation,
        # realized without the index-halving aliasing of the raw symbol.
        idx = np.arange(n)
        s = (idx[:, None] + idx[None, :]) % n
        d = (idx[:, None] - idx[None, :]) % n
        mult2d = np.exp(-1j * dt * (xi[s] ** 2 + xi[d] ** 2))
        w = w * half
        for step in range(steps):
            w = sfft.ifft2(sfft.fft2(w) * mult2d)
            w *= full if step < steps - 1 else half
    return two_particle_rotate(u0.with_values(w), "inverse")


def peak_centers(u: Field) -> tuple[float, ...]:
    """Physical coordinates of the modulus peak, one per axis."""
    idx = np.unravel_index(np.argmax(np.abs(u.values)), u.values.shape)
    return tuple(float(g.nodes[i]) for g, i in zip(u.grids, idx))


def boundary_mass_fraction(u: Field, centers) -> float:
    """Fraction of L^2 mass within 5% of the domain boundary, boundary
    meaning the antipode of the given center on a torus axis and the
    truncation radius on a hyperbolic axis."""
    masks = []
    for axis, grid in enumerate(u.grids):
        x = grid.nodes
        if grid.kind == EUCLIDEAN:
            d = np.abs(np.mod(x - centers[axis] + grid.length / 2, grid.length) - grid.length / 2)
            masks.append(d > 0.45 * grid.length)
        else:
            masks.append(x > 0.95 * grid.length)
    mask = np.zeros(u.values.shape, dtype=bool)
    for axis, m in enumerate(masks):
        mask |= _axis_shape(u.values, axis, m).astype(bool)
    # fold the weights into the density one axis at a time: a standalone
    # product of sinh^2 weights overflows on large radial grids, while the
    # weighted density stays bounded for fields with finite weighted mass
    weighted = np.abs(u.values) ** 2
    for axis, grid in enumerate(u.grids):
        weighted = weighted * _axis_shape(u.values, axis, grid.weights)
    total = float(np.sum(weighted))
    if total == 0:
        return 0.0
    return float(np.sum(weighted * mask)) / total


def spectral_radius(u: Field, axis: int = 0, mass_fraction: float = 0.9999) -> float:
    """Smallest frequency radius containing the given fraction of the
    spectral L^2 mass along one (euclidean) axis."""
    grid = u.grids[axis]
    if grid.kind != EUCLIDEAN:
        raise ValueError("spectral radius is defined for euclidean axes")
    spec = sfft.fft(u.values, axis=axis)
    power = np.abs(spec) ** 2
    other = tuple(i for i in range(u.rank) if i != axis)
    if other:
        power = power.sum(axis=other)
    xi = np.abs(torus_frequencies(grid))
    order = np.argsort(xi, kind="stable")
    cum = np.cumsum(power[order])
    target = mass_fraction * cum[-1]
    i = int(np.searchsorted(cum, target))
    return float(xi[order[min(i, len(xi) - 1)]])


def required_torus_length(u: Field, t_max: float, axis: int = 0, c: float = 1.0) -> float:
    """Minimum torus length keeping the run free of wrap-around up to
    t_max: spectral mass travels at group speed <= 2 c xi_eff."""
    return 4.0 * c * spectral_radius(u, axis=axis) * t_max


def dispersive_ratio_series(propagate, u0: Field, times, r, r_tilde):
    """Measure ||u(t)||_r / ||u0||_rt at each time, with a wrap-around
    flag when boundary mass exceeds 1%.

    `propagate` is a closure (u0, t) -> Field. Requires r >= r_tilde and
    strictly positive increasing times.
    """
    from .decay import SeriesSample

    times = [float(t) for t in times]
    if any(t <= 0 for t in times) or any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError("times must be strictly positive and increasing")
    if float(r) < float(r_tilde):
        raise ValueError("dispersive estimates need r >= r_tilde")
    base = lp_norm(u0, r_tilde)
    centers = peak_centers(u0)
    out = []
    for t in times:
        u = propagate(u0, t)
        flagged = boundary_mass_fraction(u, centers) > 0.01
        out.append(SeriesSample(t=t, value=lp_norm(u, r) / base, flagged=flagged))
    return out
