"""Population G(v), its closed-form derivative and the boundary mass balance."""

import math

from scipy import optimize

from depthkit.errors import DegenerateBoundaryError, InputError
from depthkit.univariate.density import DensityModel
from depthkit.univariate.sample import Subdifferential

ROOT_TOLERANCE = 1e-12
_VANISHING_DENSITY = 1e-300
_MAX_BRACKET_DOUBLINGS = 200


def _half_mass_gap(g: float, v: float, dm: DensityModel) -> float:
    return float(dm.cdf(v + g) - dm.cdf(v - g)) - 0.5


def g_scale_population(v: float, dm: DensityModel) -> float:
    """Root G >= 0 of ``F(v + G) − F(v − G) = 1/2``.

    The bracket ``[0, r]`` starts at the model's standard deviation and
    doubles until it changes sign; the root is then polished with Brent's
    method to ``1e-12`` absolute tolerance.

    Examples:
        >>> round(g_scale_population(0.5, DensityModel.uniform()), 12)
        0.25

    """
    if not math.isfinite(v):
        msg = f"v must be finite, got {v}"
        raise InputError(msg)
    upper = dm.spread
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        gap = _half_mass_gap(upper, v, dm)
        if gap == 0.0:
            return upper
        if gap > 0.0:
            break
        upper *= 2.0
    else:  # pragma: no cover - every supported model has unbounded mass growth
        msg = f"could not bracket G({v}) for {dm.describe()}"
        raise InputError(msg)
    root = optimize.brentq(
        _half_mass_gap,
        0.0,
        upper,
        args=(v, dm),
        xtol=ROOT_TOLERANCE,
    )
    return float(root)


def _boundary_densities(v: float, dm: DensityModel) -> tuple[float, float]:
    g = g_scale_population(v, dm)
    f_left = float(dm.pdf(v - g))
    f_right = float(dm.pdf(v + g))
    if f_left < _VANISHING_DENSITY and f_right < _VANISHING_DENSITY:
        msg = (
            f"degenerate boundary at v={v}: density vanishes at both v - G and v + G "
            f"(G={g}) for {dm.describe()}"
        )
        raise DegenerateBoundaryError(msg)
    return f_left, f_right


def g_derivative(v: float, dm: DensityModel) -> float:
    """Closed-form G′(v) = (f(v−G) − f(v+G)) / (f(v−G) + f(v+G)).

    Raises:
        DegenerateBoundaryError: If both boundary densities are below 1e-300.

    """
    f_left, f_right = _boundary_densities(v, dm)
    return (f_left - f_right) / (f_left + f_right)


def boundary_mass_balance(v: float, dm: DensityModel) -> float:
    """P(X <= v | |X − v| = G(v)) = f(v−G) / (f(v−G) + f(v+G)).

    Equal to ``(1 + g_derivative(v)) / 2``.
    """
    f_left, f_right = _boundary_densities(v, dm)
    return f_left / (f_left + f_right)


def g_subdifferential_population(v: float, dm: DensityModel) -> Subdifferential:
    """The tail-fraction slopes of :func:`g_subdifferential` under the model CDF.

    For the continuous supported models both sides equal
    ``1 − F(v + G) − F(v − G)``; this is the large-sample target of the
    empirical version.
    """
    g = g_scale_population(v, dm)
    f_left = float(dm.cdf(v - g))
    f_right = float(dm.cdf(v + g))
    lower = (1.0 - f_right) - f_left
    upper = (1.0 - f_left) - f_right
    return Subdifferential(lower=lower, upper=upper)
