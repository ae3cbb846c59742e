"""Dense row-major linear algebra over a parametric real scalar.

Matrices are 2-D numpy arrays in C (row-major) order; vectors are 1-D.
Two scalar widths are supported, selected by name:

    "f64" -> numpy.float64 (default everywhere)
    "f32" -> numpy.float32

All kernels in this package funnel their arithmetic through the handful of
primitives below so that shape validation and finiteness checks happen in
one place. No max-subtraction or other exponent shifting is performed:
attention caches elsewhere in the package store raw exponential sums, so
exp() here must see inputs already scaled into a safe range (|x| <= ~700
for f64, |x| <= ~88 for f32; the attention contract assumes |score| <= 60).
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, RangeError, ShapeError

Matrix = np.ndarray  # 2-D, C-order
Vector = np.ndarray  # 1-D

DTYPES = {"f32": np.float32, "f64": np.float64}

# Default relative tolerances for equivalence checks, by scalar width.
DEFAULT_TOL = {"f32": 1e-4, "f64": 1e-10}
DEFAULT_MODEL_TOL = {"f32": 1e-4, "f64": 1e-8}


def dtype_of(precision: str) -> np.dtype:
    try:
        return np.dtype(DTYPES[precision])
    except KeyError:
        raise DomainError(f"unknown precision {precision!r}; expected 'f32' or 'f64'")


def precision_of(a: np.ndarray) -> str:
    if a.dtype == np.float32:
        return "f32"
    if a.dtype == np.float64:
        return "f64"
    raise DomainError(f"unsupported dtype {a.dtype}")


def as_matrix(a, dtype=np.float64) -> Matrix:
    """Coerce to a C-contiguous 2-D array of the requested dtype."""
    m = np.ascontiguousarray(a, dtype=dtype)
    if m.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={m.ndim}")
    return m


def as_vector(a, dtype=np.float64) -> Vector:
    v = np.ascontiguousarray(a, dtype=dtype)
    if v.ndim != 1:
        raise ShapeError(f"expected a 1-D vector, got ndim={v.ndim}")
    return v


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product a @ b with explicit shape validation.

    Raises ShapeError naming both operand shapes on inner-dimension mismatch.
    """
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul needs 2-D operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul inner dimensions differ: {a.shape} @ {b.shape}")
    return a @ b


def elementwise_exp(a: np.ndarray) -> np.ndarray:
    """exp applied elementwise, with overflow promoted to a hard error.

    Overflow to +inf raises RangeError carrying the flat index of the first
    offending element; silent saturation would corrupt the running
    exponential sums kept by the streaming attention caches.
    """
    with np.errstate(over="ignore"):
        out = np.exp(a)
    if not np.all(np.isfinite(out)):
        bad = int(np.flatnonzero(~np.isfinite(out.ravel()))[0])
        raise RangeError(
            f"exp overflow at flat index {bad} (input {a.ravel()[bad]!r}); "
            "inputs must be pre-scaled so scores stay within the finite range",
            index=bad,
        )
    return out


def row_normalize(m: Matrix, denoms: Vector) -> Matrix:
    """Divide row i of m by denoms[i].

    Denominators are attention normalizers (sums of exponentials) and must
    be strictly positive and finite; anything else raises DomainError.
    """
    if m.ndim != 2 or denoms.ndim != 1 or m.shape[0] != denoms.shape[0]:
        raise ShapeError(f"row_normalize shapes incompatible: {m.shape} vs {denoms.shape}")
    if not np.all(np.isfinite(denoms)) or np.any(denoms <= 0):
        bad = int(np.flatnonzero(~(np.isfinite(denoms) & (denoms > 0)))[0])
        raise DomainError(f"non-positive or non-finite row denominator at row {bad}: {denoms[bad]!r}")
    return m / denoms[:, None]


def rel_error(actual: np.ndarray, reference: np.ndarray) -> float:
    """Max absolute deviation normalized by the reference's max magnitude.

    This matrix-level metric is the one all equivalence tolerances in this
    package refer to; per-element relative error is meaningless near zeros
    of the output, which convex combinations routinely produce.
    """
    a = np.asarray(actual, dtype=np.float64)
    r = np.asarray(reference, dtype=np.float64)
    if a.shape != r.shape:
        raise ShapeError(f"rel_error shapes differ: {a.shape} vs {r.shape}")
    scale = float(np.max(np.abs(r))) if r.size else 0.0
    if scale == 0.0:
        scale = 1.0
    return float(np.max(np.abs(a - r))) / scale if a.size else 0.0
