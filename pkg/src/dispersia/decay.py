"""Norm time series, log-log power-law fits, and space-time norms.

The decay claims under test are pure power laws, so the fit is ordinary
least squares of log(value) against log(t); the slope is the measured
decay exponent and the OLS standard error quantifies the fit quality.
Wrap-flagged samples are systematically contaminated and are excluded
outright rather than down-weighted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .fields import Field, lp_norm


@dataclass(frozen=True)
class SeriesSample:
    t: float
    value: float
    flagged: bool = False


@dataclass(frozen=True)
class DecayFit:
    slope: float
    intercept: float
    stderr: float
    window: tuple[float, float]
    n_samples: int
    predicted: Fraction | None = None
    verdict: bool | None = None


def norm_series(evolve, u0: Field, times, r, sequential: bool = False):
    """||u(t)||_r at each time, with wrap-around flags.

    `evolve` is a closure (u, t) -> Field. With sequential=True each sample
    continues from the previous one via time additivity (useful for
    split-step flows); otherwise each time is reached directly from u0.
    """
    from .propagators import boundary_mass_fraction, peak_centers

    times = [float(t) for t in times]
    if any(t <= 0 for t in times) or any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError("times must be strictly positive and increasing")
    centers = peak_centers(u0)
    out = []
    current, t_current = u0, 0.0
    for t in times:
        if sequential:
            current = evolve(current, t - t_current)
            t_current = t
        else:
            current = evolve(u0, t)
        flagged = boundary_mass_fraction(current, centers) > 0.01
        out.append(SeriesSample(t=t, value=lp_norm(current, r), flagged=flagged))
    return out


def fit_decay_exponent(series, window: tuple[float, float]) -> DecayFit:
    """OLS power-law fit log(value) ~ intercept + slope * log(t) over the
    unflagged samples inside the window."""
    t_min, t_max = window
    if not t_min < t_max:
        raise ValueError("window must satisfy t_min < t_max")
    pts = [s for s in series if not s.flagged and t_min <= s.t <= t_max]
    if len(pts) < 5:
        raise ValueError(f"need at least 5 unflagged samples in window, got {len(pts)}")
    if any(s.value <= 0 for s in pts):
        raise ValueError("all values must be positive for a log-log fit")
    x = np.log([s.t for s in pts])
    y = np.log([s.value for s in pts])
    n = len(x)
    xbar = x.mean()
    sxx = float(np.sum((x - xbar) ** 2))
    slope = float(np.sum((x - xbar) * (y - y.mean())) / sxx)
    intercept = float(y.mean() - slope * xbar)
    resid = y - (intercept + slope * x)
    sigma2 = float(np.sum(resid**2)) / max(n - 2, 1)
    stderr = math.sqrt(sigma2 / sxx)
    return DecayFit(
        slope=slope,
        intercept=intercept,
        stderr=stderr,
        window=(float(t_min), float(t_max)),
        n_samples=n,
    )


def regime_decay_fit(series, split_time: float = 1.0) -> tuple[DecayFit, DecayFit]:
    """Separate power-law fits below and above the split time (the decay
    rate of these flows changes at unit time)."""
    eps = 1e-12
    small = fit_decay_exponent(series, (eps, split_time))
    t_max = max(s.t for s in series)
    large = fit_decay_exponent(series, (split_time, t_max + eps))
    return small, large


def compare_prediction(fit: DecayFit, predicted, tol: float) -> dict:
    """Verdict report: pass iff the measured slope is within tol of the
    predicted decay -predicted."""
    predicted = Fraction(predicted)
    ok = abs(fit.slope - (-float(predicted))) <= tol
    return {
        "slope": fit.slope,
        "stderr": fit.stderr,
        "predicted": float(predicted),
        "tol": float(tol),
        "verdict": "pass" if ok else "fail",
        "window": list(fit.window),
        "n_samples": fit.n_samples,
    }


def verdict_fit(fit: DecayFit, predicted, tol: float) -> DecayFit:
    """A DecayFit annotated with the prediction and pass/fail verdict."""
    report = compare_prediction(fit, predicted, tol)
    return replace(fit, predicted=Fraction(predicted), verdict=report["verdict"] == "pass")


def strichartz_norm(trajectory, p, q) -> float:
    """Space-time norm of a recorded trajectory [(t, Field), ...]:
    trapezoid in time of ||u(t)||_q^p, then the p-th root; p = infinity
    takes the max over samples."""
    if not trajectory:
        raise ValueError("empty trajectory")
    qv = float(q)
    pv = float(p)
    if pv < 1 or qv < 1:
        raise ValueError("exponents must be >= 1")
    norms = np.array([lp_norm(u, qv) for _, u in trajectory])
    if math.isinf(pv):
        return float(norms.max())
    times = np.array([t for t, _ in trajectory], dtype=float)
    if len(times) == 1:
        return 0.0
    return float(np.trapezoid(norms**pv, times) ** (1.0 / pv))
