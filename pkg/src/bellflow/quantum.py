"""Two-level quantum mechanics of paired linear-polarizer measurements.

A polarizer at angle mu is the self-adjoint, trace-zero observable

    A(mu) = [[cos mu, sin mu], [sin mu, -cos mu]]

with spectrum {+1, -1}.  Two polarizers, one per leg of a bipartite system,
act as the commuting observables A(mu) (x) I and I (x) A(nu) on the tensor
product space, so their measurements are simultaneous and the four joint
outcomes have probabilities |<u_i (x) u_j | psi>|^2 for a pure state psi.
For the singlet state the joint distribution collapses to the closed form
(t, 1/2-t, 1/2-t, t) with t = sin^2((mu-nu)/2) / 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.random import Generator, Philox

ATOL_ALGEBRA = 1e-12
ATOL_STATE_NORM = 1e-9


def check_angle(value, name: str = "angle") -> float:
    """Validate a polarizer angle in radians; the domain is [0, pi], closed.

    Out-of-range values are rejected rather than reduced mod pi.
    """
    v = float(value)
    if not 0.0 <= v <= math.pi:
        raise ValueError(f"{name} must lie in [0, pi], got {value!r}")
    return v


@dataclass(frozen=True)
class Eigensystem:
    """Spectral decomposition of a polarizer observable.

    ``eigenvectors`` holds the orthonormal eigenvectors as rows, in
    eigenvalue order, with coordinates in the fixed measurement frame.
    """

    eigenvalues: tuple[float, float]
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class JointDistribution:
    """Probabilities of the four joint outcomes of a paired measurement.

    Index order is (first-leg eigenvalue index, second-leg eigenvalue
    index): (1,1), (1,2), (2,1), (2,2).
    """

    p11: float
    p12: float
    p21: float
    p22: float

    def __post_init__(self):
        probs = self.as_tuple()
        for label, p in zip(("p11", "p12", "p21", "p22"), probs):
            if not -ATOL_ALGEBRA <= p <= 1.0 + ATOL_ALGEBRA:
                raise ValueError(f"{label}={p!r} is not a probability")
        total = sum(probs)
        if abs(total - 1.0) > ATOL_ALGEBRA:
            raise ValueError(f"outcome probabilities sum to {total!r}, not 1")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p11, self.p12, self.p21, self.p22)


def polarizer_operator(mu) -> np.ndarray:
    """2x2 matrix of the polarizer observable at angle ``mu``."""
    mu = check_angle(mu, "mu")
    c, s = math.cos(mu), math.sin(mu)
    return np.array([[c, s], [s, -c]])


def eigensystem(mu) -> Eigensystem:
    """Eigenvalues (+1, -1) and eigenvectors of the polarizer at ``mu``.

    The +1 eigenvector is (cos mu/2, sin mu/2), the -1 eigenvector is
    (-sin mu/2, cos mu/2); no numerical diagonalization is involved.
    """
    mu = check_angle(mu, "mu")
    c, s = math.cos(0.5 * mu), math.sin(0.5 * mu)
    return Eigensystem(
        eigenvalues=(1.0, -1.0),
        eigenvectors=np.array([[c, s], [-s, c]]),
    )


def singlet_state() -> np.ndarray:
    """Coordinates of the two-photon singlet in the product frame.

    Frame order is (h1(x)h1, h1(x)h2, h2(x)h1, h2(x)h2), so the singlet
    (h1(x)h2 - h2(x)h1)/sqrt(2) reads (0, 1/sqrt2, -1/sqrt2, 0).
    """
    r = 1.0 / math.sqrt(2.0)
    return np.array([0.0, r, -r, 0.0], dtype=complex)


def joint_distribution(psi, mu, nu) -> JointDistribution:
    """Joint outcome probabilities |<u_i (x) u_j | psi>|^2.

    ``psi`` is a unit vector of 4 complex coordinates in the product frame;
    deviations of more than 1e-9 from unit norm are rejected.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (4,):
        raise ValueError(f"state must have 4 coordinates, got shape {psi.shape}")
    norm_sq = float(np.sum(np.abs(psi) ** 2))
    if abs(norm_sq - 1.0) > ATOL_STATE_NORM:
        raise ValueError(f"state is not normalized: |psi|^2 = {norm_sq!r}")

    ua = eigensystem(mu).eigenvectors
    ub = eigensystem(nu).eigenvectors
    probs = [
        abs(np.vdot(np.kron(ua[i], ub[j]), psi)) ** 2
        for i in (0, 1)
        for j in (0, 1)
    ]
    return JointDistribution(*probs)


def singlet_joint_closed_form(mu, nu) -> JointDistribution:
    """Closed form of the singlet joint distribution: (t, 1/2-t, 1/2-t, t)."""
    mu = check_angle(mu, "mu")
    nu = check_angle(nu, "nu")
    half = 0.5 * (mu - nu)
    t = min(0.5 * math.sin(half) ** 2, 0.5)
    q = 0.5 * math.cos(half) ** 2
    return JointDistribution(t, q, q, t)


def marginals(d: JointDistribution):
    """Per-leg outcome probabilities ((a1, a2), (b1, b2)) of a joint distribution."""
    prob_a = (d.p11 + d.p12, d.p21 + d.p22)
    prob_b = (d.p11 + d.p21, d.p12 + d.p22)
    return prob_a, prob_b


def product_expectation(d: JointDistribution) -> float:
    """Expected value of the product of the two +/-1 outcomes.

    For the singlet this equals -cos(mu - nu).
    """
    return d.p11 - d.p12 - d.p21 + d.p22


def sample_joint_outcomes(d: JointDistribution, n: int, seed: int):
    """Draw ``n`` joint outcomes and return their counts (n11, n12, n21, n22).

    Sampling is categorical by inverse CDF over the fixed outcome order,
    driven by a Philox counter-based generator, so the counts are a pure
    function of (seed, n).
    """
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    cum = np.cumsum(d.as_tuple())
    cum[-1] = 1.0  # uniforms lie in [0, 1); protect against rounding in the sum
    u = Generator(Philox(key=seed)).random(n)
    counts = np.bincount(np.searchsorted(cum, u, side="right"), minlength=4)
    return tuple(int(c) for c in counts)
