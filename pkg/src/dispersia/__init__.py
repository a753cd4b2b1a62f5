"""Numerical laboratory for dispersive decay on product domains.

Building blocks: 1-D spectral Schrodinger propagators (free, split-step
with potential, hyperbolic-radial), tensor composition across factors,
exact rational Strichartz exponent algebra, a log-log decay-rate
measurement harness, and a small-data NLS fixed-point solver with
scattering diagnostics.
"""

__version__ = "0.1.0"

from .fields import (
    Grid1D,
    Field,
    MixedNormSpec,
    make_grid,
    tensor_product,
    lp_norm,
    mixed_norm,
)
from .propagators import (
    PropagatorSpec,
    PotentialSpec,
    free_propagate,
    splitstep_propagate,
    product_propagate,
    two_particle_rotate,
    two_particle_propagate,
    dispersive_ratio_series,
)
from .hyperbolic import (
    SphericalProfile,
    spherical_transform,
    inverse_spherical_transform,
    h3_propagate,
    h3_product_propagate,
)
from .exponents import (
    INF,
    ExponentPair,
    DispersionIndex,
    NLSExponentSelection,
    HypothesisViolation,
    is_admissible,
    in_triangle_T,
    interpolation_exponent,
    select_nls_exponents,
    check_weight_integral,
    check_yajima_parameters,
    dual_exponent,
)
from .decay import (
    DecayFit,
    norm_series,
    fit_decay_exponent,
    regime_decay_fit,
    compare_prediction,
    strichartz_norm,
)
from .nls import (
    Nonlinearity,
    PicardState,
    apply_nonlinearity,
    splitstep_nls,
    picard_iterate,
    scattering_diagnostic,
)
