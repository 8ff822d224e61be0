"""Bell functional, dependence degree, and information flow for paired
polarizer measurements on the two-photon singlet state, plus a seeded
Monte Carlo harness over the angle cube."""

__version__ = "0.1.0"

from .bell import (
    AngleConfig,
    BellReport,
    bell_functional,
    bell_report,
    tsirelson_config,
    violation_implies_flow_check,
)
from .dependence import (
    LN2,
    DependenceProfile,
    degree_of_dependence,
    dependence_profile,
    distribution_from_signed_flow,
    entropy,
    info_flow,
    inverse_degree,
    mutual_information,
    signed_info_flow,
    theta_of_angles,
)
from .montecarlo import (
    RNG_FAMILY,
    EventMembership,
    MonteCarloReport,
    UncertaintyDiagnostic,
    classify,
    frechet_interval,
    run_monte_carlo,
    sample_config,
    uncertainty_diagnostic,
)
from .quantum import (
    Eigensystem,
    JointDistribution,
    eigensystem,
    joint_distribution,
    marginals,
    polarizer_operator,
    product_expectation,
    sample_joint_outcomes,
    singlet_joint_closed_form,
    singlet_state,
)

__all__ = [
    "AngleConfig",
    "BellReport",
    "DependenceProfile",
    "Eigensystem",
    "EventMembership",
    "JointDistribution",
    "LN2",
    "MonteCarloReport",
    "RNG_FAMILY",
    "UncertaintyDiagnostic",
    "bell_functional",
    "bell_report",
    "classify",
    "degree_of_dependence",
    "dependence_profile",
    "distribution_from_signed_flow",
    "eigensystem",
    "entropy",
    "frechet_interval",
    "info_flow",
    "inverse_degree",
    "joint_distribution",
    "marginals",
    "mutual_information",
    "polarizer_operator",
    "product_expectation",
    "run_monte_carlo",
    "sample_config",
    "sample_joint_outcomes",
    "signed_info_flow",
    "singlet_joint_closed_form",
    "singlet_state",
    "theta_of_angles",
    "tsirelson_config",
    "uncertainty_diagnostic",
    "violation_implies_flow_check",
]
