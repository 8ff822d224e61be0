"""Four-angle aggregates: the Bell functional and total information flows.

A measurement configuration fixes two polarizer angles per leg.  The Bell
(CHSH) functional

    b = cos(mu1-nu1) + cos(mu1-nu2) + cos(mu2-nu1) - cos(mu2-nu2)

satisfies |b| <= 2 under local hidden-variable assumptions and reaches
2*sqrt(2) quantum mechanically.  Summing the per-pair information flows
over the four pairs gives the total flow (in [0, 4 ln 2]) and total signed
flow (in [-4 ln 2, 4 ln 2]); a violated Bell inequality forces the total
flow to be strictly positive.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .dependence import LN2, degree_of_dependence, theta_of_angles
from .quantum import check_angle


@dataclass(frozen=True)
class AngleConfig:
    """Four polarizer angles (mu1, mu2) and (nu1, nu2), each in [0, pi]."""

    mu1: float
    mu2: float
    nu1: float
    nu2: float

    def __post_init__(self):
        for name in ("mu1", "mu2", "nu1", "nu2"):
            object.__setattr__(self, name, check_angle(getattr(self, name), name))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.mu1, self.mu2, self.nu1, self.nu2)


@dataclass(frozen=True)
class BellReport:
    """Per-pair and aggregate dependence statistics of one configuration.

    ``thetas`` and ``degrees`` are 2x2 tuples indexed (i, j) for the pair
    (mu_i, nu_j).  ``total_flow`` = ln2 * ``abs_degree_sum`` and
    ``total_signed_flow`` = ln2 * ``degree_sum`` hold by construction; the
    dimensionless sums are carried alongside the nat-valued flows.
    """

    config: AngleConfig
    thetas: tuple[tuple[float, float], tuple[float, float]]
    degrees: tuple[tuple[float, float], tuple[float, float]]
    bell_value: float
    degree_sum: float
    abs_degree_sum: float
    total_flow: float
    total_signed_flow: float
    violates_bell: bool


def bell_functional(config: AngleConfig) -> float:
    """The Bell functional b of a configuration."""
    m1, m2, n1, n2 = config.as_tuple()
    return (math.cos(m1 - n1) + math.cos(m1 - n2)
            + math.cos(m2 - n1) - math.cos(m2 - n2))


def bell_report(config: AngleConfig) -> BellReport:
    """Full report: per-pair thetas and degrees, flows, Bell value, flag.

    The violation flag compares |b| > 2 exactly; a configuration on the
    boundary (|b| = 2) counts as non-violating.
    """
    m1, m2, n1, n2 = config.as_tuple()
    thetas = tuple(
        tuple(theta_of_angles(m, n) for n in (n1, n2)) for m in (m1, m2)
    )
    degrees = tuple(
        tuple(degree_of_dependence(t) for t in row) for row in thetas
    )
    flat = [e for row in degrees for e in row]
    degree_sum = math.fsum(flat)
    abs_degree_sum = math.fsum(abs(e) for e in flat)
    b = bell_functional(config)
    return BellReport(
        config=config,
        thetas=thetas,
        degrees=degrees,
        bell_value=b,
        degree_sum=degree_sum,
        abs_degree_sum=abs_degree_sum,
        total_flow=LN2 * abs_degree_sum,
        total_signed_flow=LN2 * degree_sum,
        violates_bell=abs(b) > 2.0,
    )


def tsirelson_config() -> AngleConfig:
    """A configuration attaining the quantum maximum |b| = 2*sqrt(2)."""
    return AngleConfig(math.pi / 2, 0.0, math.pi / 4, 3 * math.pi / 4)


def violation_implies_flow_check(config: AngleConfig) -> bool:
    """True iff the configuration respects 'violation implies positive flow'.

    Property-test oracle: returns (|b| <= 2) or (total_flow > 0), which must
    hold for every configuration.
    """
    report = bell_report(config)
    return (not report.violates_bell) or report.total_flow > 0.0
