"""Exact integer arithmetic around triangular numbers and the minimum block
count of a hypercompletely separating system.

Every function here is pure integer math (math.isqrt plus a ceiling
correction); no floating point enters any code path, so results are exact
for arbitrarily large arguments.
"""

from __future__ import annotations

from math import isqrt


def alpha(k: int) -> int:
    """k-th triangular number k(k+1)/2."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return k * (k + 1) // 2


def tau(k: int) -> int:
    """ceil((1 + sqrt(8k+1)) / 2): the least r whose triangular number
    alpha(r-1) is at least k, and the minimum block count of any
    hypercompletely separating system on k >= 3 points."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    x = 8 * k + 1
    r = isqrt(x)
    # x is odd, so when x is a perfect square r is odd and (1+r)/2 is exact;
    # otherwise ceil lands one above (1+r)//2 for either parity of r.
    if r * r == x:
        return (1 + r) // 2
    return (1 + r) // 2 + 1


def min_size(s: int) -> int:
    """Exact block count of every size-minimal HCSP system on s points.

    Equals tau(s) for s >= 3; the ground sets of size 1 and 2 are the two
    exceptions (their minima are 1 and 2, both below tau).
    """
    if s < 1:
        raise ValueError(f"ground size must be positive, got {s}")
    if s <= 2:
        return s
    return tau(s)


def is_triangular(s: int) -> int | None:
    """Return k with alpha(k) == s if s is triangular, else None.

    s is triangular exactly when 8s+1 is a perfect square.
    """
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    x = 8 * s + 1
    r = isqrt(x)
    if r * r != x:
        return None
    return (r - 1) // 2


def _ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def tight_tau_sequence(limit: int) -> list[int]:
    """All k in 1..limit with tau(k) == ceil(sqrt(2k)), in increasing order.

    tau(k) always equals ceil(sqrt(2k)) or ceil(sqrt(2k)) + 1; this lists
    the k where the lower value is attained.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    return [k for k in range(1, limit + 1) if tau(k) == _ceil_sqrt(2 * k)]
