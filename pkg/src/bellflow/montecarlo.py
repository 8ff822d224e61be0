"""Seeded Monte Carlo over the angle cube [0, pi]^4.

Configurations are drawn from the normalized product measure (four
independent uniforms) and classified against three events:

    U  : |b| <= 2              (Bell inequality holds)
    V  : total_flow <= 2 ln 2  (lower half of the flow range)
    VS : total_signed_flow >= 0

Sample i is a pure function of (seed, i): one Philox 4x64 counter block
per sample supplies its four uniforms, so any chunking or thread count
reproduces the sequential stream bit for bit.  Reductions are counts and
min/max, merged in chunk order.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.random import Generator, Philox

from . import kernels
from .bell import AngleConfig, bell_report
from .dependence import LN2

RNG_FAMILY = "philox4x64 (numpy.random.Philox; counter block i = sample i)"
CHUNK_SIZE = 65536


@dataclass(frozen=True)
class EventMembership:
    """Membership of one configuration in the three events.

    ``in_u``: Bell inequality holds (|b| <= 2, boundary inclusive);
    ``in_v``: total flow <= 2 ln 2; ``in_vs``: total signed flow >= 0.
    """

    in_u: bool
    in_v: bool
    in_vs: bool


@dataclass(frozen=True)
class MonteCarloReport:
    """Estimates from n uniform samples of the angle cube.

    ``alpha_hat``, ``beta_hat`` and ``beta_s_hat`` are the sample
    proportions of U, V and VS; ``tau_hat`` and ``tau_s_hat`` those of
    U&V and U&VS.  Conditional probabilities with a zero denominator are
    None and listed in ``undefined_conditionals``.  Flow ranges are the
    observed min/max over samples in U (None when no sample lands in U);
    the Frechet intervals bound tau_hat and tau_s_hat given the marginals.
    """

    n: int
    seed: int
    alpha_hat: float
    beta_hat: float
    beta_s_hat: float
    tau_hat: float
    tau_s_hat: float
    cond_vc_given_u: float | None
    cond_v_given_uc: float | None
    cond_vsc_given_u: float | None
    cond_vs_given_uc: float | None
    undefined_conditionals: tuple[str, ...]
    flow_range_in_u: tuple[float, float] | None
    signed_flow_range_in_u: tuple[float, float] | None
    frechet_v: tuple[float, float]
    frechet_vs: tuple[float, float]
    rng: str


@dataclass(frozen=True)
class PairDiagnostic:
    """Uncertainty readout for one event pair (U against V or VS).

    When ``tau_hat`` sits at the Frechet upper endpoint min(alpha, beta)
    there is an inclusion between the events up to a null set; at the lower
    endpoint max(0, alpha+beta-1) an anti-inclusion.  Away from both, the
    two conditionals cannot be made simultaneously small.
    """

    event: str
    cond_not_event_given_u: float | None
    cond_event_given_not_u: float | None
    max_conditional: float | None
    at_upper_endpoint: bool
    at_lower_endpoint: bool


@dataclass(frozen=True)
class UncertaintyDiagnostic:
    """Per-pair diagnostics with the endpoint tolerance 2/sqrt(n)."""

    v: PairDiagnostic
    vs: PairDiagnostic
    tolerance: float


def sample_config(seed: int, index: int) -> AngleConfig:
    """The configuration of sample ``index`` in the stream of ``seed``."""
    row = Generator(Philox(key=seed).advance(index)).random(4)
    row *= math.pi
    return AngleConfig(*row)


def sample_chunk(seed: int, start: int, count: int) -> np.ndarray:
    """Samples start..start+count-1 as a (count, 4) array of angles.

    Column order is (mu1, mu2, nu1, nu2); concatenating chunks reproduces
    the sequential stream exactly.
    """
    u = Generator(Philox(key=seed).advance(start)).random((count, 4))
    u *= math.pi
    return u


def classify(config: AngleConfig) -> EventMembership:
    """Event membership of one configuration (boundaries inclusive)."""
    report = bell_report(config)
    return EventMembership(
        in_u=abs(report.bell_value) <= 2.0,
        in_v=report.total_flow <= 2.0 * LN2,
        in_vs=report.total_signed_flow >= 0.0,
    )


def frechet_interval(alpha, beta) -> tuple[float, float]:
    """Feasible range [max(0, alpha+beta-1), min(alpha, beta)] of a joint probability."""
    a, b = float(alpha), float(beta)
    for name, p in (("alpha", a), ("beta", b)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must be a probability, got {p!r}")
    return (max(0.0, a + b - 1.0), min(a, b))


@dataclass(frozen=True)
class _ChunkStats:
    n: int
    count_u: int
    count_v: int
    count_vs: int
    count_uv: int
    count_uvs: int
    flow_min: float | None
    flow_max: float | None
    sflow_min: float | None
    sflow_max: float | None


def _chunk_stats(seed: int, start: int, count: int) -> _ChunkStats:
    angles = sample_chunk(seed, start, count)
    b, abs_sum, sig_sum = kernels.bell_stats(
        angles[:, 0], angles[:, 1], angles[:, 2], angles[:, 3]
    )
    flow = LN2 * abs_sum
    sflow = LN2 * sig_sum
    in_u = np.abs(b) <= 2.0
    in_v = flow <= 2.0 * LN2
    in_vs = sflow >= 0.0
    count_u = int(np.count_nonzero(in_u))
    if count_u:
        flow_u = flow[in_u]
        sflow_u = sflow[in_u]
        ranges = (float(flow_u.min()), float(flow_u.max()),
                  float(sflow_u.min()), float(sflow_u.max()))
    else:
        ranges = (None, None, None, None)
    return _ChunkStats(
        n=count,
        count_u=count_u,
        count_v=int(np.count_nonzero(in_v)),
        count_vs=int(np.count_nonzero(in_vs)),
        count_uv=int(np.count_nonzero(in_u & in_v)),
        count_uvs=int(np.count_nonzero(in_u & in_vs)),
        flow_min=ranges[0],
        flow_max=ranges[1],
        sflow_min=ranges[2],
        sflow_max=ranges[3],
    )


def _merge_range(lo, hi, new_lo, new_hi):
    if new_lo is None:
        return lo, hi
    if lo is None:
        return new_lo, new_hi
    return min(lo, new_lo), max(hi, new_hi)


def run_monte_carlo(n: int, seed: int, workers: int = 1,
                    chunk_size: int = CHUNK_SIZE) -> MonteCarloReport:
    """Classify ``n`` seeded samples and assemble the estimator report.

    The result is independent of ``workers`` and ``chunk_size``: chunks are
    pure functions of (seed, chunk) and are merged in sample order.
    """
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    if chunk_size < 1:
        raise ValueError(f"chunk size must be >= 1, got {chunk_size}")
    starts = range(0, n, chunk_size)
    jobs = [(seed, s, min(chunk_size, n - s)) for s in starts]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda j: _chunk_stats(*j), jobs))
    else:
        chunks = [_chunk_stats(*j) for j in jobs]

    cu = cv = cvs = cuv = cuvs = 0
    fmin = fmax = smin = smax = None
    for ch in chunks:
        cu += ch.count_u
        cv += ch.count_v
        cvs += ch.count_vs
        cuv += ch.count_uv
        cuvs += ch.count_uvs
        fmin, fmax = _merge_range(fmin, fmax, ch.flow_min, ch.flow_max)
        smin, smax = _merge_range(smin, smax, ch.sflow_min, ch.sflow_max)

    alpha = cu / n
    beta = cv / n
    beta_s = cvs / n
    tau = cuv / n
    tau_s = cuvs / n

    undefined = []
    if cu == 0:
        cond_vc_u = cond_vsc_u = None
        undefined += ["cond_vc_given_u", "cond_vsc_given_u"]
    else:
        cond_vc_u = (alpha - tau) / alpha
        cond_vsc_u = (alpha - tau_s) / alpha
    if cu == n:
        cond_v_uc = cond_vs_uc = None
        undefined += ["cond_v_given_uc", "cond_vs_given_uc"]
    else:
        cond_v_uc = (beta - tau) / (1.0 - alpha)
        cond_vs_uc = (beta_s - tau_s) / (1.0 - alpha)

    # Frechet endpoints from the integer counts so containment of tau_hat
    # holds exactly, not merely to rounding.
    frechet_v = (max(0, cu + cv - n) / n, min(cu, cv) / n)
    frechet_vs = (max(0, cu + cvs - n) / n, min(cu, cvs) / n)

    return MonteCarloReport(
        n=n,
        seed=seed,
        alpha_hat=alpha,
        beta_hat=beta,
        beta_s_hat=beta_s,
        tau_hat=tau,
        tau_s_hat=tau_s,
        cond_vc_given_u=cond_vc_u,
        cond_v_given_uc=cond_v_uc,
        cond_vsc_given_u=cond_vsc_u,
        cond_vs_given_uc=cond_vs_uc,
        undefined_conditionals=tuple(undefined),
        flow_range_in_u=None if fmin is None else (fmin, fmax),
        signed_flow_range_in_u=None if smin is None else (smin, smax),
        frechet_v=frechet_v,
        frechet_vs=frechet_vs,
        rng=RNG_FAMILY,
    )


def _pair_diagnostic(event, alpha, beta, tau, cond_out, cond_in, tol):
    lower, upper = frechet_interval(alpha, beta)
    if cond_out is None or cond_in is None:
        max_cond = None
    else:
        max_cond = max(cond_out, cond_in)
    return PairDiagnostic(
        event=event,
        cond_not_event_given_u=cond_out,
        cond_event_given_not_u=cond_in,
        max_conditional=max_cond,
        at_upper_endpoint=abs(tau - upper) <= tol,
        at_lower_endpoint=abs(tau - lower) <= tol,
    )


def uncertainty_diagnostic(report: MonteCarloReport) -> UncertaintyDiagnostic:
    """Endpoint and conditional-probability readout of a Monte Carlo report.

    Endpoint matches are decided within 2/sqrt(n); undefined conditionals
    propagate as None.
    """
    tol = 2.0 / math.sqrt(report.n)
    return UncertaintyDiagnostic(
        v=_pair_diagnostic(
            "V", report.alpha_hat, report.beta_hat, report.tau_hat,
            report.cond_vc_given_u, report.cond_v_given_uc, tol,
        ),
        vs=_pair_diagnostic(
            "VS", report.alpha_hat, report.beta_s_hat, report.tau_s_hat,
            report.cond_vsc_given_u, report.cond_vs_given_uc, tol,
        ),
        tolerance=tol,
    )
