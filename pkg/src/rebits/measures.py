"""Scalar entanglement quantities of a two-rebit state.

Real concurrence and entanglement of formation, the tau operator whose
spectrum feeds the Wootters concurrence, the partial-transpose minimum
eigenvalue, and the joint classification across the real and complex fields.
All entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import psd_sqrt, sym_eig, symmetrize
from .states import SIGMA_YY, DensityOperator, PureState

TOL_C = 1e-9

REAL_SEPARABLE = "REAL_SEPARABLE"
REAL_BOUND_ENTANGLED = "REAL_BOUND_ENTANGLED"
BOTH_ENTANGLED = "BOTH_ENTANGLED"

# Slack accepted on the [0, 1] domain checks before raising.
_DOMAIN_FUZZ = 1e-12


@dataclass(frozen=True)
class MeasureReport:
    """All measures of one state, plus its separability classification."""

    concurrence_real: float
    wootters_concurrence: float
    eof_real: float
    eof_complex: float
    tau_spectrum: tuple
    pt_min_eig: float
    classification: str


def _unit_interval(x: float, name: str) -> float:
    if not -_DOMAIN_FUZZ <= x <= 1.0 + _DOMAIN_FUZZ:
        raise ValueError(f"{name} must lie in [0, 1], got {x!r}")
    return min(max(float(x), 0.0), 1.0)


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0."""
    x = _unit_interval(x, "x")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def eof_curve(c: float) -> float:
    """Entanglement of formation as a function of concurrence: H((1+sqrt(1-c^2))/2)."""
    c = _unit_interval(c, "c")
    return binary_entropy((1.0 + math.sqrt(max(1.0 - c * c, 0.0))) / 2.0)


def preconcurrence(psi: PureState) -> float:
    """Signed overlap <psi| sy(x)sy |psi>; in [-1, 1]."""
    return float(psi.vec @ SIGMA_YY @ psi.vec)


def concurrence_pure(psi: PureState) -> float:
    """|preconcurrence|, equal to twice the product of the Schmidt coefficients."""
    return abs(preconcurrence(psi))


def tau(rho: DensityOperator) -> np.ndarray:
    """The symmetric operator rho^(1/2) (sy(x)sy) rho^(1/2)."""
    s = psd_sqrt(rho.mat)
    return symmetrize(s @ SIGMA_YY @ s)


def tau_spectrum(rho: DensityOperator) -> tuple:
    """Eigenvalues nu_j of tau, sorted by descending absolute value."""
    w = sym_eig(tau(rho)).eigenvalues
    order = np.argsort(-np.abs(w), kind="stable")
    return tuple(float(w[k]) for k in order)


def concurrence_real(rho: DensityOperator) -> float:
    """Real concurrence |tr(rho sy(x)sy)|; zero iff the state is real-separable."""
    return min(abs(float(np.trace(rho.mat @ SIGMA_YY))), 1.0)


def eof_real(rho: DensityOperator) -> float:
    """Closed-form real entanglement of formation, in bits."""
    return eof_curve(concurrence_real(rho))


def wootters_concurrence(rho: DensityOperator) -> float:
    """Wootters concurrence max(0, |nu1| - |nu2| - |nu3| - |nu4|).

    Computed from the tau spectrum; cross-checked against the eigenvalues of
    tau^2, which must equal nu_j^2.
    """
    nu = np.array(tau_spectrum(rho))
    t = tau(rho)
    lam = sym_eig(symmetrize(t @ t)).eigenvalues[::-1]
    if np.max(np.abs(lam - nu**2)) > 1e-10:
        raise RuntimeError("tau^2 spectrum disagrees with squared tau spectrum")
    a = np.abs(nu)
    return min(max(0.0, float(a[0] - a[1] - a[2] - a[3])), 1.0)


def partial_transpose(rho: DensityOperator, subsystem: str = "B") -> np.ndarray:
    """Transpose applied to one tensor factor in the computational basis."""
    r = rho.mat.reshape(2, 2, 2, 2)
    if subsystem == "A":
        out = r.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        out = r.transpose(0, 3, 2, 1)
    else:
        raise ValueError("subsystem must be 'A' or 'B'")
    return out.reshape(4, 4).copy()


def peres_min_eig(rho: DensityOperator) -> float:
    """Minimum eigenvalue of the partial transpose; negative iff complex-entangled."""
    return float(sym_eig(partial_transpose(rho, "B")).eigenvalues[0])


def classify(c: float, cw: float, tol: float = TOL_C) -> str:
    if c <= tol:
        return REAL_SEPARABLE
    if cw <= tol:
        return REAL_BOUND_ENTANGLED
    return BOTH_ENTANGLED


def measure_report(rho: DensityOperator) -> MeasureReport:
    """Bundle every measure of one state into a report."""
    c = concurrence_real(rho)
    cw = wootters_concurrence(rho)
    return MeasureReport(
        concurrence_real=c,
        wootters_concurrence=cw,
        eof_real=eof_curve(c),
        eof_complex=eof_curve(cw),
        tau_spectrum=tau_spectrum(rho),
        pt_min_eig=peres_min_eig(rho),
        classification=classify(c, cw),
    )
