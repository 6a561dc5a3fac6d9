"""Dense real linear algebra for the small symmetric matrices used everywhere else.

Everything here is specialized to 2x2 and 4x4 real matrices.  The eigensolver
is a cyclic Jacobi iteration, chosen for determinism and unconditional
robustness on symmetric input of this size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Relative asymmetry above which an allegedly symmetric matrix is rejected.
SYM_TOL = 1e-12

# Jacobi sweep parameters (off-diagonal threshold is relative to ||M||_F).
_JACOBI_THRESHOLD = 1e-14
_JACOBI_MAX_SWEEPS = 100


class NotPSDError(ValueError):
    """Raised when a matrix required to be PSD has a genuinely negative eigenvalue."""


@dataclass(frozen=True)
class SpectralDecomposition:
    """Full real spectral decomposition M = V diag(w) V^T.

    Eigenvalues ascend; eigenvectors are the matching orthonormal columns of V,
    each signed so its largest-magnitude component is positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _check_finite(m: np.ndarray) -> None:
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")


def symmetrize(m: np.ndarray, tol: float = SYM_TOL) -> np.ndarray:
    """Return the exactly symmetric part of m, rejecting genuine asymmetry."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    _check_finite(m)
    scale = 1.0 + np.linalg.norm(m)
    if np.max(np.abs(m - m.T)) > tol * scale:
        raise ValueError("matrix is not symmetric within tolerance")
    return 0.5 * (m + m.T)


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square real matrices."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    for m in (a, b):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("tensor_product expects square matrices")
        _check_finite(m)
    return np.kron(a, b)


def sym_eig(m: np.ndarray) -> SpectralDecomposition:
    """Spectral decomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Deterministic for identical input: fixed sweep order, ascending eigenvalue
    sort, and eigenvector signs fixed by the largest-magnitude component.
    """
    a = symmetrize(m).copy()
    n = a.shape[0]
    v = np.eye(n)
    thresh = _JACOBI_THRESHOLD * np.linalg.norm(a)

    for _ in range(_JACOBI_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                rotated = True
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- G^T A G and V <- V G with G the (p,q) plane rotation.
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        if not rotated:
            break
    else:
        raise RuntimeError("Jacobi iteration failed to converge on symmetric input")

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = v[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(vectors[:, j])))
        if vectors[k, j] < 0.0:
            vectors[:, j] = -vectors[:, j]
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=vectors)


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Symmetric PSD square root via the spectral decomposition.

    Eigenvalues below -1e-10*trace raise NotPSDError; small negative rounding
    noise is clamped to zero.
    """
    dec = sym_eig(m)
    tol_psd = 1e-10 * float(np.trace(np.asarray(m, dtype=float)))
    if np.min(dec.eigenvalues) < -tol_psd:
        raise NotPSDError(
            f"matrix is not positive semidefinite (min eigenvalue {np.min(dec.eigenvalues):.3e})"
        )
    w = np.sqrt(np.clip(dec.eigenvalues, 0.0, None))
    root = (dec.eigenvectors * w) @ dec.eigenvectors.T
    return 0.5 * (root + root.T)


def givens_mix(v: np.ndarray, w: np.ndarray, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Plane rotation of two equal-length vectors by angle theta.

    Preserves ||v||^2 + ||w||^2 and the outer-product sum v v^T + w w^T.
    """
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != w.shape:
        raise ValueError("givens_mix expects equal-length vectors")
    c, s = math.cos(theta), math.sin(theta)
    return c * v + s * w, -s * v + c * w
