"""Exact pmf, cdf and moments of the two-row Schur-Weyl distribution."""

from fractions import Fraction

from . import _core
from ._core import RacahError, entropy, h_spectral, limit_profile, type1_pmf, verify

__all__ = [
    "RacahError", "pmf", "cdf", "moments", "q_pmf", "entropy", "h_spectral",
    "limit_profile", "type1_pmf", "verify",
]


def _frac(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def pmf(n, m, k, l, method="racah"):
    return [_frac(v) for v in _core.pmf(n, m, k, l, method)]


def cdf(n, m, k, l):
    return [_frac(v) for v in _core.cdf(n, m, k, l)]


def moments(n, m, k, l):
    return {key: _frac(v) for key, v in _core.moments(n, m, k, l).items()}


def q_pmf(n, m, k, l, q, route="racah"):
    return [_frac(v) for v in _core.q_pmf(n, m, k, l, str(q), route)]
