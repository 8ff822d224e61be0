"""Backend selection for the batch kernel.

The Monte Carlo harness and grid scans evaluate the Bell value and the
degree-of-dependence sums over millions of angle configurations; that inner
loop lives in a compiled Cython kernel when available and in a vectorized
numpy kernel otherwise.  Both expose the same ``bell_stats`` contract and
are cross-checked against the scalar reference path in the test suite.
"""
from . import _numkern

try:
    from . import _corekern

    _DEFAULT = _corekern
    BACKEND = "compiled"
except ImportError:
    _corekern = None
    _DEFAULT = _numkern
    BACKEND = "numpy"

bell_stats = _DEFAULT.bell_stats


def available_backends():
    """Names of the kernel backends importable in this environment."""
    names = ["numpy"]
    if _corekern is not None:
        names.insert(0, "compiled")
    return tuple(names)


def get_kernel(name):
    """Return the ``bell_stats`` callable of a specific backend by name."""
    if name == "numpy":
        return _numkern.bell_stats
    if name == "compiled":
        if _corekern is None:
            raise ValueError("compiled kernel is not available in this build")
        return _corekern.bell_stats
    raise ValueError(f"unknown kernel backend {name!r}")
