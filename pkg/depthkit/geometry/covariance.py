"""Sample covariance and the SPD check shared with the Mahalanobis metric."""

import numpy as np
import numpy.typing as npt

from depthkit.errors import DegenerateCovarianceError, InputError
from depthkit.geometry.dataset import Dataset, FloatArray

SPD_RELATIVE_TOLERANCE = 1e-10
_SYMMETRY_TOLERANCE = 1e-12


def validate_spd(matrix: npt.ArrayLike, what: str = "shape matrix") -> FloatArray:
    """Return ``matrix`` as a float array after checking it is symmetric positive definite.

    The smallest eigenvalue must exceed ``1e-10`` times the largest; nothing
    is regularized silently.

    Raises:
        InputError: If the matrix is not square or contains non-finite values.
        DegenerateCovarianceError: If it is asymmetric or not (numerically) SPD.

    """
    arr = np.array(matrix, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:  # noqa: PLR2004
        msg = f"{what} must be a non-empty square matrix, got shape {arr.shape}"
        raise InputError(msg)
    if not np.isfinite(arr).all():
        msg = f"{what} contains non-finite entries"
        raise InputError(msg)
    scale = float(np.max(np.abs(arr))) or 1.0
    if not np.allclose(arr, arr.T, rtol=0.0, atol=_SYMMETRY_TOLERANCE * scale):
        detail = f"{what} is not symmetric"
        raise DegenerateCovarianceError(detail)
    eigenvalues = np.linalg.eigvalsh(arr)
    lam_min, lam_max = float(eigenvalues[0]), float(eigenvalues[-1])
    if lam_max <= 0.0 or lam_min <= SPD_RELATIVE_TOLERANCE * lam_max:
        detail = (
            f"{what} is not positive definite "
            f"(smallest eigenvalue {lam_min:.3g}, largest {lam_max:.3g})"
        )
        raise DegenerateCovarianceError(detail)
    return arr


def sample_covariance(data: Dataset) -> FloatArray:
    """Unbiased sample covariance (divisor n−1) of a dataset.

    Args:
        data: Sample with ``n >= d + 1``.

    Returns:
        d×d symmetric positive definite matrix.

    Raises:
        DegenerateCovarianceError: If ``n < d + 1`` or the columns are collinear.

    """
    if data.n < data.d + 1:
        detail = f"n={data.n} observations cannot support a {data.d}-dimensional covariance (need n >= d + 1)"
        raise DegenerateCovarianceError(detail)
    cov = np.atleast_2d(np.cov(data.values, rowvar=False, ddof=1))
    # np.cov is symmetric up to rounding; make it exact before the check.
    cov = 0.5 * (cov + cov.T)
    return validate_spd(cov, what="sample covariance")
