"""Pure-numpy batch kernel for the four-angle dependence statistics.

Fallback used when the compiled extension is not available; same contract
as bellflow._corekern.bell_stats.
"""
import numpy as np

LN2 = 0.6931471805599453


def _xlogx(x):
    # x*log(x) extended by continuity: 0*log(0) = 0
    positive = x > 0.0
    return np.where(positive, x * np.log(np.where(positive, x, 1.0)), 0.0)


def _entropy(theta):
    return -2.0 * _xlogx(theta) - 2.0 * _xlogx(0.5 - theta)


def _degree(theta):
    ent = _entropy(theta)
    return np.where(theta <= 0.25, ent / LN2 - 2.0, 2.0 - ent / LN2)


def _theta(delta):
    s = np.sin(0.5 * delta)
    return np.minimum(0.5 * s * s, 0.5)


def bell_stats(mu1, mu2, nu1, nu2):
    """Per-config Bell value, sum of |degree|, and sum of degree.

    Inputs are equal-length 1-d float64 arrays of polarizer angles; returns
    three new float64 arrays (bell_value, abs_degree_sum, degree_sum).
    """
    mu1 = np.ascontiguousarray(mu1, dtype=np.float64)
    mu2 = np.ascontiguousarray(mu2, dtype=np.float64)
    nu1 = np.ascontiguousarray(nu1, dtype=np.float64)
    nu2 = np.ascontiguousarray(nu2, dtype=np.float64)
    if not (mu1.shape == mu2.shape == nu1.shape == nu2.shape):
        raise ValueError("angle arrays must have equal length")

    e11 = _degree(_theta(mu1 - nu1))
    e12 = _degree(_theta(mu1 - nu2))
    e21 = _degree(_theta(mu2 - nu1))
    e22 = _degree(_theta(mu2 - nu2))
    bell = (np.cos(mu1 - nu1) + np.cos(mu1 - nu2)
            + np.cos(mu2 - nu1) - np.cos(mu2 - nu2))
    abs_sum = np.abs(e11) + np.abs(e12) + np.abs(e21) + np.abs(e22)
    return bell, abs_sum, e11 + e12 + e21 + e22
