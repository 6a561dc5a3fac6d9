"""Pure-state ensemble machinery for two-rebit density operators.

An ensemble is stored as subnormalized vectors: squared norms are the mixing
probabilities and the outer products sum back to rho.  This module provides
the eigendecomposition ensemble, orthogonal-mixer transformations between
decompositions, the preconcurrence-flattening construction of an optimal
ensemble, and a brute-force ensemble minimizer that serves as an independent
numerical oracle for the closed-form entanglement of formation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import givens_mix, sym_eig
from .measures import eof_curve
from .states import SIGMA_YY, TOL_RANK, DensityOperator

# Members with squared norm at or below this are treated as zero probability.
TOL_PROB = 1e-14

_MIXER_TOL = 1e-12


@dataclass(frozen=True)
class SubnormalizedEnsemble:
    """Rows of `members` are the subnormalized vectors w_j."""

    members: np.ndarray

    @property
    def probabilities(self) -> np.ndarray:
        return np.sum(self.members**2, axis=1)

    def reconstruct(self) -> np.ndarray:
        """Sum of outer products w_j w_j^T, the density matrix of the ensemble."""
        return self.members.T @ self.members


@dataclass(frozen=True)
class FlattenResult:
    """Outcome of the flattening construction."""

    ensemble: SubnormalizedEnsemble
    target: float
    iterations: int
    max_deviation: float


def eigen_ensemble(rho: DensityOperator) -> SubnormalizedEnsemble:
    """Subnormalized eigenvectors sqrt(mu_j) |e_j> for eigenvalues above rank tolerance."""
    dec = sym_eig(rho.mat)
    keep = dec.eigenvalues > TOL_RANK
    members = (dec.eigenvectors[:, keep] * np.sqrt(dec.eigenvalues[keep])).T
    return SubnormalizedEnsemble(members=members)


def apply_mixer(base: SubnormalizedEnsemble, mixer: np.ndarray) -> SubnormalizedEnsemble:
    """New decomposition w'_j = sum_k O_kj e_k from an n x m matrix with orthonormal rows."""
    o = np.asarray(mixer, dtype=float)
    n = base.members.shape[0]
    if o.ndim != 2 or o.shape[0] != n or o.shape[1] < n:
        raise ValueError(f"mixer must be {n} x m with m >= {n}, got shape {o.shape}")
    if np.max(np.abs(o @ o.T - np.eye(n))) > _MIXER_TOL:
        raise ValueError("mixer rows are not orthonormal")
    return SubnormalizedEnsemble(members=o.T @ base.members)


def average_preconcurrence(e: SubnormalizedEnsemble) -> float:
    """Sum_j <w_j| sy(x)sy |w_j>; decomposition-independent, equals tr(tau)."""
    w = e.members
    return float(np.sum((w @ SIGMA_YY) * w))


def average_concurrence(e: SubnormalizedEnsemble) -> float:
    """Sum_j p_j C(w_j / |w_j|) = sum_j |<w_j| sy(x)sy |w_j>|."""
    w = e.members
    return float(np.sum(np.abs(np.sum((w @ SIGMA_YY) * w, axis=1))))


def _pair_excess_root(v: np.ndarray, w: np.ndarray, target: float) -> float:
    """Angle in (0, pi/2] where the rotated first member's preconcurrence excess
    e(theta) = <v'|YY|v'> - target * ||v'||^2 crosses zero.

    Requires e(0) >= 0 >= e(pi/2); bisection to machine precision.
    """
    yy_v = SIGMA_YY @ v
    yy_w = SIGMA_YY @ w
    a = float(v @ yy_v) - target * float(v @ v)
    b = float(v @ yy_w) - target * float(v @ w)
    c = float(w @ yy_w) - target * float(w @ w)

    def excess(theta: float) -> float:
        co, si = math.cos(theta), math.sin(theta)
        return a * co * co + 2.0 * b * co * si + c * si * si

    if a <= 0.0:
        return 0.0  # already at the target up to rounding
    lo, hi = 0.0, math.pi / 2.0
    for _ in range(200):
        if hi - lo <= 1e-16 and abs(excess(0.5 * (lo + hi))) <= 1e-13:
            break
        mid = 0.5 * (lo + hi)
        if excess(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def flatten(rho: DensityOperator) -> FlattenResult:
    """Optimal ensemble: every member's preconcurrence equals tr(tau).

    Starting from the eigendecomposition ensemble, repeatedly rotate the pair
    of members with the largest and smallest normalized preconcurrence by the
    angle that brings the first onto the common target, fix it, and recurse on
    the rest.  At most n-1 rotations are needed.
    """
    target = float(np.trace(rho.mat @ SIGMA_YY))
    work = [row.copy() for row in eigen_ensemble(rho).members]
    active = [j for j, w in enumerate(work) if float(w @ w) > TOL_PROB]
    iterations = 0

    while len(active) > 1:
        cs = [float(work[j] @ SIGMA_YY @ work[j]) / float(work[j] @ work[j]) for j in active]
        if max(cs) - min(cs) <= 1e-12:
            break
        i_max = active[int(np.argmax(cs))]
        i_min = active[int(np.argmin(cs))]
        theta = _pair_excess_root(work[i_max], work[i_min], target)
        work[i_max], work[i_min] = givens_mix(work[i_max], work[i_min], theta)
        active.remove(i_max)
        iterations += 1

    members = np.array(work)
    probs = np.sum(members**2, axis=1)
    pre = np.sum((members @ SIGMA_YY) * members, axis=1)
    live = probs > TOL_PROB
    max_deviation = float(np.max(np.abs(pre[live] / probs[live] - target))) if np.any(live) else 0.0
    return FlattenResult(
        ensemble=SubnormalizedEnsemble(members=members),
        target=target,
        iterations=iterations,
        max_deviation=max_deviation,
    )


def orthonormal_completion(rows: np.ndarray, m: int) -> np.ndarray:
    """Extend orthonormal rows to a full m x m orthogonal matrix (Gram-Schmidt
    against the standard basis)."""
    rows = [np.asarray(r, dtype=float) for r in rows]
    for k in range(m):
        if len(rows) == m:
            break
        cand = np.zeros(m)
        cand[k] = 1.0
        for r in rows:
            cand -= (r @ cand) * r
        nrm = np.linalg.norm(cand)
        if nrm > 1e-10:
            rows.append(cand / nrm)
    if len(rows) != m:
        raise ValueError("failed to complete orthonormal set")
    return np.array(rows)


def random_mixer(n: int, m: int, rng: np.random.Generator) -> np.ndarray:
    """Random n x m matrix with orthonormal rows."""
    if m < n:
        raise ValueError("mixer needs m >= n")
    g = rng.standard_normal((m, m))
    rows: list[np.ndarray] = []
    for k in range(m):
        cand = g[k]
        for r in rows:
            cand = cand - (r @ cand) * r
        rows.append(cand / np.linalg.norm(cand))
    return np.array(rows[:n])


def _eof_of_members(w: np.ndarray) -> float:
    """Objective sum_j p_j E(C(w_j/|w_j|)) over subnormalized rows, skipping
    zero-probability members."""
    probs = np.sum(w**2, axis=1)
    pre = np.sum((w @ SIGMA_YY) * w, axis=1)
    total = 0.0
    for p, s in zip(probs, pre):
        if p > TOL_PROB:
            total += p * eof_curve(min(abs(s) / p, 1.0))
    return total


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GRID = 25
_LOG2 = math.log(2.0)


def _weighted_eof(pre: float, p: float) -> float:
    """p * E(|pre/p|) for one subnormalized member (0 for zero probability)."""
    if p <= TOL_PROB:
        return 0.0
    conc = abs(pre) / p
    if conc >= 1.0:
        return p
    x = 0.5 * (1.0 + math.sqrt(1.0 - conc * conc))
    if x >= 1.0:
        return 0.0
    return -p * (x * math.log(x) + (1.0 - x) * math.log(1.0 - x)) / _LOG2


def _best_pair_angle(v: np.ndarray, w: np.ndarray) -> tuple[float, float]:
    """Angle minimizing the two-member objective: coarse grid over one period
    followed by a golden-section refinement.  Returns (theta, gain)."""
    yy_v = SIGMA_YY @ v
    a, b, c = float(v @ yy_v), float(w @ yy_v), float(w @ SIGMA_YY @ w)
    pv, g, pw = float(v @ v), float(v @ w), float(w @ w)

    def f(theta: float) -> float:
        co, si = math.cos(theta), math.sin(theta)
        cc, cs, ss = co * co, co * si, si * si
        return _weighted_eof(
            a * cc + 2.0 * b * cs + c * ss, pv * cc + 2.0 * g * cs + pw * ss
        ) + _weighted_eof(
            a * ss - 2.0 * b * cs + c * cc, pv * ss - 2.0 * g * cs + pw * cc
        )

    # The objective is pi-periodic; coarse grid, then refine around the best.
    step = math.pi / _GRID
    base = f(0.0)
    best_k, best_val = 0, base
    for k in range(1, _GRID):
        val = f(k * step)
        if val < best_val:
            best_k, best_val = k, val
    lo, hi = best_k * step - step, best_k * step + step

    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(40):
        if hi - lo < 1e-10:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    theta = 0.5 * (lo + hi)
    return theta, base - f(theta)


def brute_force_min_eof(
    rho: DensityOperator, m: int, restarts: int, seed: int
) -> tuple[float, SubnormalizedEnsemble]:
    """Direct ensemble minimization of the average pure-state entanglement.

    Searches m-member decompositions reachable from the eigendecomposition by
    orthogonal mixing, via multi-restart coordinate descent over the
    m(m-1)/2 pairwise rotation angles with a golden-section line search on
    each.  Deterministic for a fixed seed; each restart derives its own
    sub-seed from its index.  The returned value is an upper bound on the
    entanglement of formation by construction.
    """
    base = eigen_ensemble(rho)
    n = base.members.shape[0]
    if not n <= m <= 8:
        raise ValueError(f"m must satisfy rank <= m <= 8, got m={m} with rank {n}")
    start = np.zeros((m, 4))
    start[:n] = base.members
    pairs = [(i, j) for i in range(m - 1) for j in range(i + 1, m)]

    best_val = math.inf
    best_members = start
    for r in range(restarts):
        rng = np.random.default_rng([seed, r])
        work = start.copy()
        for i, j in pairs:
            work[i], work[j] = givens_mix(work[i], work[j], rng.uniform(0.0, 2.0 * math.pi))
        for _ in range(300):
            total_gain = 0.0
            for i, j in pairs:
                theta, gain = _best_pair_angle(work[i], work[j])
                if gain > 0.0:
                    work[i], work[j] = givens_mix(work[i], work[j], theta)
                    total_gain += gain
            if total_gain < 1e-12:
                break
        val = _eof_of_members(work)
        if val < best_val:
            best_val = val
            best_members = work.copy()
    return best_val, SubnormalizedEnsemble(members=best_members)
