"""Closed-form search parameters and density gates.

For an n-vertex, m-edge graph the target half-size is
``q = floor(ln(n/2) / ln(2e n^2 / m))`` and the candidate pool size is
``r = floor(q n^2 / m)``; equivalently q is the largest integer with
``n/2 >= (2e n^2 / m)^q``. The bipartite analogue replaces n^2 by a*b and
n/2 by a/2, draws the pool from side B, and clamps into that side.

Floors are evaluated from a double-precision guess and settled by
escalating-precision comparison of the defining inequality, because the
log-ratio can sit on an integer boundary for engineered inputs. Exact ties
are impossible (the base 2e * integer-ratio is transcendental), so the
comparison always terminates.
"""

import math
from dataclasses import dataclass
from enum import Enum

from mpmath import mp

from bicliques.errors import InvalidCounts

__all__ = [
    "Regime",
    "ParamSet",
    "density_precondition",
    "bipartite_density_precondition",
    "general_params",
    "bipartite_params",
    "pool_size",
    "bipartite_pool_size",
    "exceeds_decomposition_threshold",
    "exceeds_bipartite_threshold",
]


class Regime(Enum):
    GUARANTEED_Q2_PLUS = "GuaranteedQ2Plus"
    GUARANTEED_Q1 = "GuaranteedQ1"
    BELOW_THRESHOLD = "BelowThreshold"


@dataclass(frozen=True)
class ParamSet:
    q: int
    r: int
    regime: Regime


def _check_general(n, m):
    if not isinstance(n, int) or n < 2:
        raise InvalidCounts(f"need at least 2 vertices, got {n!r}")
    if not isinstance(m, int) or not 1 <= m <= n * (n - 1) // 2:
        raise InvalidCounts(f"edge count {m!r} outside [1, {n * (n - 1) // 2}]")


def _check_bipartite(a, b, m):
    if not isinstance(a, int) or not isinstance(b, int) or a < b or b < 1:
        raise InvalidCounts(f"side sizes ({a!r}, {b!r}) must satisfy a >= b >= 1")
    if not isinstance(m, int) or not 1 <= m <= a * b:
        raise InvalidCounts(f"edge count {m!r} outside [1, {a * b}]")


def density_precondition(n, m):
    """Regime from exact integer comparisons of m^2 against 9n^3 and 64n^3."""
    _check_general(n, m)
    m2, n3 = m * m, n * n * n
    if m2 < 9 * n3:
        return Regime.BELOW_THRESHOLD
    if m2 > 64 * n3:
        return Regime.GUARANTEED_Q2_PLUS
    return Regime.GUARANTEED_Q1


def bipartite_density_precondition(a, b, m):
    """Mirror gate: m against 3a*sqrt(b) and 8a*sqrt(b), compared as m^2
    against 9a^2 b and 64a^2 b."""
    _check_bipartite(a, b, m)
    m2, a2b = m * m, a * a * b
    if m2 < 9 * a2b:
        return Regime.BELOW_THRESHOLD
    if m2 > 64 * a2b:
        return Regime.GUARANTEED_Q2_PLUS
    return Regime.GUARANTEED_Q1


def _holds_at(half_of, prod, m, q):
    """Exact decision of half_of/2 >= (2e*prod/m)^q."""
    if q <= 0:
        return half_of >= 2
    delta = None
    for dps in (30, 60, 120, 240):
        with mp.workdps(dps):
            lhs = mp.mpf(half_of) / 2
            rhs = (2 * mp.e * prod / mp.mpf(m)) ** q
            delta = lhs - rhs
            if abs(delta) > rhs * mp.mpf(10) ** (10 - dps):
                return delta > 0
    return delta > 0


def largest_exponent(half_of, prod, m):
    """Largest q >= 0 with half_of/2 >= (2e*prod/m)^q."""
    if half_of <= 2:
        return 0
    x = 2.0 * math.e * prod / m
    qf = math.log(half_of / 2.0) / math.log(x)
    if qf < 0.0:
        return 0
    nearest = round(qf)
    if abs(qf - nearest) > 1e-9:
        return math.floor(qf)
    # boundary case: settle exactly
    q = int(nearest)
    if _holds_at(half_of, prod, m, q):
        while _holds_at(half_of, prod, m, q + 1):
            q += 1
        return q
    while q > 0 and not _holds_at(half_of, prod, m, q):
        q -= 1
    return q


def pool_size(q, n, m):
    """floor(q n^2 / m) clamped into [q, n - q]."""
    return min(max(q * n * n // m, q), n - q)


def bipartite_pool_size(q, a, b, m):
    """floor(q a b / m) clamped into [q, b]."""
    return min(max(q * a * b // m, q), b)


def general_params(n, m):
    regime = density_precondition(n, m)
    q = max(1, largest_exponent(n, n * n, m))
    return ParamSet(q, pool_size(q, n, m), regime)


def bipartite_params(a, b, m):
    regime = bipartite_density_precondition(a, b, m)
    q = max(1, largest_exponent(a, a * b, m))
    q = min(q, b)  # a q-subset of side B must exist
    return ParamSet(q, bipartite_pool_size(q, a, b, m), regime)


def _exceeds(m_cur, log_arg, rhs):
    """m_cur * ln(log_arg) > rhs, float compare with exact fallback."""
    if m_cur <= 0:
        return False
    lhs = m_cur * math.log(log_arg)
    if abs(lhs - rhs) > 1e-9 * rhs:
        return lhs > rhs
    with mp.workdps(60):
        return mp.mpf(m_cur) * mp.log(log_arg) > mp.mpf(rhs)


def exceeds_decomposition_threshold(m_cur, n):
    """Whether m_cur > n^2 / ln n (the loop condition for extraction)."""
    if n < 2:
        return False
    return _exceeds(m_cur, n, n * n)


def exceeds_bipartite_threshold(m_cur, a, b):
    """Whether m_cur > a*b / ln(a+b)."""
    if a + b < 2:
        return False
    return _exceeds(m_cur, a + b, a * b)
