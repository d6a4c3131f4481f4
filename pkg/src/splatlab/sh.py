"""Real spherical harmonics: basis evaluation, view-dependent color, and the
squared-norm inconsistency indicator with its Monte Carlo sphere oracle.

The basis uses the real orthonormal convention common to splatting renderers,
so every basis function integrates to 1 against itself over the unit sphere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolationError, UnsupportedDegreeError

MAX_DEGREE = 3

# Orthonormal real-SH constants (integral of Y_i^2 over S^2 equals 1).
SH_C0 = 0.28209479177387814
SH_C1 = 0.4886025119029199
SH_C2 = (
    1.0925484305920792,
    -1.0925484305920792,
    0.31539156525252005,
    -1.0925484305920792,
    0.5462742152960396,
)
SH_C3 = (
    -0.5900435899266435,
    2.890611442640554,
    -0.4570457994644658,
    0.3731763325901154,
    -0.4570457994644658,
    1.4453057213202769,
    -0.5900435899266435,
)

_UNIT_NORM_ATOL = 1e-9
_ORACLE_SEED = 20240611
_MIN_ORACLE_SAMPLES = 10_000


def num_basis(degree: int) -> int:
    return (degree + 1) ** 2


def _check_degree(degree: int) -> None:
    if not 0 <= degree <= MAX_DEGREE:
        raise UnsupportedDegreeError(f"degree must be in [0, {MAX_DEGREE}], got {degree}")


def _check_unit(d: np.ndarray) -> np.ndarray:
    d = np.asarray(d, dtype=np.float64)
    if d.shape != (3,):
        raise ContractViolationError(f"direction must be a 3-vector, got shape {d.shape}")
    if abs(np.linalg.norm(d) - 1.0) > _UNIT_NORM_ATOL:
        raise ContractViolationError(f"direction must be unit-norm, |d|={np.linalg.norm(d)!r}")
    return d


def basis_matrix(dirs: np.ndarray, degree: int) -> np.ndarray:
    """Evaluate all basis functions at unit directions.

    Args:
        dirs: (N, 3) unit vectors (not re-validated; callers normalize).
        degree: maximum band, 0..3.

    Returns:
        (N, (degree+1)^2) basis values.
    """
    _check_degree(degree)
    dirs = np.asarray(dirs, dtype=np.float64)
    n = dirs.shape[0]
    out = np.empty((n, num_basis(degree)), dtype=np.float64)
    out[:, 0] = SH_C0
    if degree < 1:
        return out
    x, y, z = dirs[:, 0], dirs[:, 1], dirs[:, 2]
    out[:, 1] = -SH_C1 * y
    out[:, 2] = SH_C1 * z
    out[:, 3] = -SH_C1 * x
    if degree < 2:
        return out
    xx, yy, zz = x * x, y * y, z * z
    xy, yz, xz = x * y, y * z, x * z
    out[:, 4] = SH_C2[0] * xy
    out[:, 5] = SH_C2[1] * yz
    out[:, 6] = SH_C2[2] * (2.0 * zz - xx - yy)
    out[:, 7] = SH_C2[3] * xz
    out[:, 8] = SH_C2[4] * (xx - yy)
    if degree < 3:
        return out
    out[:, 9] = SH_C3[0] * y * (3.0 * xx - yy)
    out[:, 10] = SH_C3[1] * xy * z
    out[:, 11] = SH_C3[2] * y * (4.0 * zz - xx - yy)
    out[:, 12] = SH_C3[3] * z * (2.0 * zz - 3.0 * xx - 3.0 * yy)
    out[:, 13] = SH_C3[4] * x * (4.0 * zz - xx - yy)
    out[:, 14] = SH_C3[5] * z * (xx - yy)
    out[:, 15] = SH_C3[6] * x * (xx - 3.0 * yy)
    return out


def basis_gradients(dirs: np.ndarray, degree: int) -> np.ndarray:
    """Gradients of each basis polynomial with respect to the direction.

    Returned for the polynomial extension off the sphere; compose with the
    normalization Jacobian when the direction itself is a derived quantity.

    Returns:
        (N, (degree+1)^2, 3) array.
    """
    _check_degree(degree)
    dirs = np.asarray(dirs, dtype=np.float64)
    n = dirs.shape[0]
    g = np.zeros((n, num_basis(degree), 3), dtype=np.float64)
    if degree < 1:
        return g
    x, y, z = dirs[:, 0], dirs[:, 1], dirs[:, 2]
    g[:, 1, 1] = -SH_C1
    g[:, 2, 2] = SH_C1
    g[:, 3, 0] = -SH_C1
    if degree < 2:
        return g
    g[:, 4, 0] = SH_C2[0] * y
    g[:, 4, 1] = SH_C2[0] * x
    g[:, 5, 1] = SH_C2[1] * z
    g[:, 5, 2] = SH_C2[1] * y
    g[:, 6, 0] = SH_C2[2] * (-2.0 * x)
    g[:, 6, 1] = SH_C2[2] * (-2.0 * y)
    g[:, 6, 2] = SH_C2[2] * (4.0 * z)
    g[:, 7, 0] = SH_C2[3] * z
    g[:, 7, 2] = SH_C2[3] * x
    g[:, 8, 0] = SH_C2[4] * (2.0 * x)
    g[:, 8, 1] = SH_C2[4] * (-2.0 * y)
    if degree < 3:
        return g
    xx, yy, zz = x * x, y * y, z * z
    g[:, 9, 0] = SH_C3[0] * 6.0 * x * y
    g[:, 9, 1] = SH_C3[0] * (3.0 * xx - 3.0 * yy)
    g[:, 10, 0] = SH_C3[1] * y * z
    g[:, 10, 1] = SH_C3[1] * x * z
    g[:, 10, 2] = SH_C3[1] * x * y
    g[:, 11, 0] = SH_C3[2] * (-2.0 * x * y)
    g[:, 11, 1] = SH_C3[2] * (4.0 * zz - xx - 3.0 * yy)
    g[:, 11, 2] = SH_C3[2] * (8.0 * y * z)
    g[:, 12, 0] = SH_C3[3] * (-6.0 * x * z)
    g[:, 12, 1] = SH_C3[3] * (-6.0 * y * z)
    g[:, 12, 2] = SH_C3[3] * (6.0 * zz - 3.0 * xx - 3.0 * yy)
    g[:, 13, 0] = SH_C3[4] * (4.0 * zz - 3.0 * xx - yy)
    g[:, 13, 1] = SH_C3[4] * (-2.0 * x * y)
    g[:, 13, 2] = SH_C3[4] * (8.0 * x * z)
    g[:, 14, 0] = SH_C3[5] * (2.0 * x * z)
    g[:, 14, 1] = SH_C3[5] * (-2.0 * y * z)
    g[:, 14, 2] = SH_C3[5] * (xx - yy)
    g[:, 15, 0] = SH_C3[6] * (3.0 * xx - 3.0 * yy)
    g[:, 15, 1] = SH_C3[6] * (-6.0 * x * y)
    return g


@dataclass
class ShCoefficients:
    """View-dependent color: dc holds the view-independent color directly,
    rest holds one coefficient row per band>=1 basis function and channel."""

    dc: np.ndarray
    rest: np.ndarray
    degree: int

    def __post_init__(self):
        self.dc = np.asarray(self.dc, dtype=np.float64)
        self.rest = np.asarray(self.rest, dtype=np.float64)
        _check_degree(self.degree)
        if self.dc.shape != (3,):
            raise ContractViolationError(f"dc must have shape (3,), got {self.dc.shape}")
        want = (num_basis(self.degree) - 1, 3)
        if self.rest.shape != want:
            raise ContractViolationError(
                f"rest must have shape {want} for degree {self.degree}, got {self.rest.shape}"
            )

    @classmethod
    def zeros(cls, degree: int = MAX_DEGREE) -> "ShCoefficients":
        return cls(np.zeros(3), np.zeros((num_basis(degree) - 1, 3)), degree)


def eval_basis(d: np.ndarray, degree: int) -> np.ndarray:
    """Basis values at a single validated unit direction."""
    d = _check_unit(d)
    return basis_matrix(d[None, :], degree)[0]


def eval_color(c: ShCoefficients, d: np.ndarray, run_degree: int | None = None) -> np.ndarray:
    """Color dc + sum_i rest_i * Y_i(d), pre-clamp linear RGB."""
    if run_degree is not None and run_degree != c.degree:
        raise ContractViolationError(
            f"coefficient degree {c.degree} does not match run degree {run_degree}"
        )
    d = _check_unit(d)
    y = basis_matrix(d[None, :], c.degree)[0, 1:]
    return c.dc + y @ c.rest


def indicator(c: ShCoefficients) -> float:
    """Sum of squared band>=1 coefficients over all channels."""
    return float(np.sum(c.rest * c.rest))


def indicator_values(rest: np.ndarray) -> np.ndarray:
    """Vectorized indicator for (N, num_basis-1, 3) coefficient stacks."""
    return np.einsum("nbc,nbc->n", rest, rest)


def sample_sphere(n: int, seed: int = _ORACLE_SEED) -> np.ndarray:
    """Uniform unit vectors via normalized Gaussians, deterministic per seed."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((n, 3))
    norms = np.linalg.norm(v, axis=1)
    # Zero-norm draws are astronomically unlikely; guard anyway.
    bad = norms < 1e-12
    if np.any(bad):
        v[bad] = np.array([0.0, 0.0, 1.0])
        norms[bad] = 1.0
    return v / norms[:, None]


# The sampler is deterministic per (n, seed), so the basis matrix of the most
# recent draw can be reused across oracle calls (the Parseval suite evaluates
# hundreds of coefficient sets against one fixed sample).
_basis_cache: dict = {}


def _cached_rest_basis(n_samples: int, seed: int, degree: int) -> np.ndarray:
    key = (n_samples, seed, degree)
    if _basis_cache.get("key") != key:
        dirs = sample_sphere(n_samples, seed)
        _basis_cache["key"] = key
        _basis_cache["value"] = basis_matrix(dirs, degree)[:, 1:]
    return _basis_cache["value"]


def sphere_inconsistency_oracle(
    c: ShCoefficients, n_samples: int, seed: int = _ORACLE_SEED
) -> float:
    """Monte Carlo estimate of the sphere integral of |C(d) - dc|^2.

    With the orthonormal basis the exact value equals indicator(c).
    """
    if n_samples < _MIN_ORACLE_SAMPLES:
        raise ContractViolationError(
            f"oracle needs at least {_MIN_ORACLE_SAMPLES} samples, got {n_samples}"
        )
    y_rest = _cached_rest_basis(n_samples, seed, c.degree)
    dev = y_rest @ c.rest  # (n, 3)
    return float(4.0 * np.pi * np.mean(np.sum(dev * dev, axis=1)))
