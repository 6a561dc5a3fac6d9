"""Two-rebit state representations.

Density operators are 4x4 real symmetric unit-trace PSD matrices; pure states
are real unit 4-vectors in the fixed basis order |00>, |01>, |10>, |11> with
subsystem A the left tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import NotPSDError, sym_eig, symmetrize, tensor_product

TOL_TRACE = 1e-12
TOL_PSD = 1e-10
TOL_RANK = 1e-12

# Real 2x2 generators: the symmetric sector {I, sx, sz} and the antisymmetric
# generator i*sy (the only real matrix the y Pauli contributes).
I2 = np.eye(2)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
I_SIGMA_Y = np.array([[0.0, -1.0], [1.0, 0.0]])

# sigma_y (x) sigma_y as a real 4x4 matrix: -(i sy)(x)(i sy).
SIGMA_YY = -tensor_product(I_SIGMA_Y, I_SIGMA_Y)

I4 = np.eye(4)

# The 9 symmetric-sector two-letter labels, row-major over {I, X, Z}.
SYM_LABELS = ("II", "IX", "IZ", "XI", "XX", "XZ", "ZI", "ZX", "ZZ")

_SINGLE = {"I": I2, "X": SIGMA_X, "Z": SIGMA_Z}
PAULI_BASIS = {a + b: tensor_product(_SINGLE[a], _SINGLE[b]) for a in "IXZ" for b in "IXZ"}
PAULI_BASIS["YY"] = SIGMA_YY


class StateValidationError(ValueError):
    """A state failed one of its defining invariants; the message names it."""


@dataclass(frozen=True)
class DensityOperator:
    """A two-rebit mixed state: 4x4 real symmetric, unit trace, PSD."""

    mat: np.ndarray

    def __post_init__(self):
        try:
            m = symmetrize(self.mat)
        except ValueError as exc:
            raise StateValidationError(f"symmetry invariant violated: {exc}") from exc
        if m.shape != (4, 4):
            raise StateValidationError("shape invariant violated: expected a 4x4 matrix")
        tr = float(np.trace(m))
        if abs(tr - 1.0) > TOL_TRACE:
            raise StateValidationError(f"unit-trace invariant violated: trace = {tr!r}")
        w = sym_eig(m).eigenvalues
        if float(np.min(w)) < -TOL_PSD * tr:
            raise NotPSDError(
                f"positive-semidefiniteness invariant violated: min eigenvalue {np.min(w):.3e}"
            )
        object.__setattr__(self, "mat", m)

    @classmethod
    def from_pure(cls, psi: "PureState") -> "DensityOperator":
        return cls(np.outer(psi.vec, psi.vec))


@dataclass(frozen=True)
class PureState:
    """A joint pure state: real unit 4-vector."""

    vec: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vec, dtype=float)
        if v.shape != (4,) or not np.all(np.isfinite(v)):
            raise StateValidationError("shape invariant violated: expected a finite 4-vector")
        if abs(np.linalg.norm(v) - 1.0) > TOL_TRACE:
            raise StateValidationError(f"unit-norm invariant violated: norm = {np.linalg.norm(v)!r}")
        object.__setattr__(self, "vec", v)


@dataclass(frozen=True)
class PauliCoordinates:
    """Coordinates of a state in the 10-element real-symmetric Pauli basis.

    sym holds the 9 symmetric-sector coefficients keyed by SYM_LABELS; yy is
    the lone antisymmetric-sector coefficient tr(rho sy(x)sy).
    """

    sym: dict
    yy: float


@dataclass(frozen=True)
class SchmidtForm:
    """Schmidt decomposition a1 |e1>|f1> + a2 |e2>|f2| with a1 >= a2 >= 0."""

    a1: float
    a2: float
    e1: np.ndarray
    e2: np.ndarray
    f1: np.ndarray
    f2: np.ndarray


def pauli_expand(rho: DensityOperator) -> PauliCoordinates:
    """Coefficients t_label = tr(rho * basis[label]) for all 10 basis elements."""
    sym = {label: float(np.trace(rho.mat @ PAULI_BASIS[label])) for label in SYM_LABELS}
    yy = float(np.trace(rho.mat @ SIGMA_YY))
    return PauliCoordinates(sym=sym, yy=yy)


def from_pauli(coords: PauliCoordinates) -> DensityOperator:
    """Reconstruct rho = (1/4) sum_t t * basis; validates the result."""
    m = np.zeros((4, 4))
    for label in SYM_LABELS:
        m += coords.sym.get(label, 0.0) * PAULI_BASIS[label]
    m += coords.yy * SIGMA_YY
    return DensityOperator(m / 4.0)


def schmidt(psi: PureState) -> SchmidtForm:
    """Schmidt form of a pure state, from the 2x2 amplitude-matrix marginals."""
    amp = psi.vec.reshape(2, 2)
    dec = sym_eig(amp @ amp.T)
    # Descending marginal eigenvalues give a1 >= a2.
    e1 = dec.eigenvectors[:, 1]
    e2 = dec.eigenvectors[:, 0]
    a1 = float(np.linalg.norm(amp.T @ e1))
    a2 = float(np.linalg.norm(amp.T @ e2))
    f1 = amp.T @ e1 / a1 if a1 > TOL_RANK else np.array([1.0, 0.0])
    if a2 > TOL_RANK:
        f2 = amp.T @ e2 / a2
    else:
        f2 = np.array([-f1[1], f1[0]])  # any unit vector orthogonal to f1
    return SchmidtForm(a1=a1, a2=a2, e1=e1, e2=e2, f1=f1, f2=f2)


def marginal(rho: DensityOperator, subsystem: str) -> np.ndarray:
    """Partial trace over the other subsystem; subsystem is 'A' or 'B'."""
    r = rho.mat.reshape(2, 2, 2, 2)
    if subsystem == "A":
        return np.einsum("abcb->ac", r)
    if subsystem == "B":
        return np.einsum("abac->bc", r)
    raise ValueError("subsystem must be 'A' or 'B'")


def random_state(seed: int, rank: int) -> DensityOperator:
    """Seeded random state rho = G G^T / tr(G G^T) with G a 4 x rank Gaussian."""
    if not 1 <= rank <= 4:
        raise ValueError("rank must be in 1..4")
    g = np.random.default_rng(seed).standard_normal((4, rank))
    m = g @ g.T
    return DensityOperator(m / np.trace(m))


def alpha_state(alpha: float) -> DensityOperator:
    """The family (I(x)I + alpha * sy(x)sy) / 4 for alpha in [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must be in [0, 1]")
    return DensityOperator((I4 + alpha * SIGMA_YY) / 4.0)
