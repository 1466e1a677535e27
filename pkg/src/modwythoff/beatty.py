"""Exact golden-ratio integer arithmetic.

Everything here is computed with integers only.  The golden ratio
phi = (1 + sqrt(5)) / 2 never appears as a float; floor(k * phi) is
realized as (k + isqrt(5 * k * k)) // 2, which is exact because
5 * k^2 is never a perfect square for k >= 1.  Irrationality of phi
also means floor comparisons against k * phi or k / phi never sit on
a boundary, so every threshold in this package is an honest integer
comparison.

All functions are pure and safe to call from any number of threads.
"""

from __future__ import annotations

import math

# Documented input cap for sequence indices / pile sizes.  Results are
# exact far beyond this in Python, but the cap keeps the contract
# portable to fixed-width (128-bit) implementations of the same formulas.
INDEX_CAP = 1 << 40


def _check_index(k: int, name: str = "k") -> None:
    if k < 0:
        raise ValueError(f"{name} must be nonnegative, got {k}")
    if k > INDEX_CAP:
        raise ValueError(f"{name}={k} exceeds the supported cap 2**40")


def isqrt(n: int) -> int:
    """Exact integer square root: the unique s with s*s <= n < (s+1)*(s+1)."""
    if n < 0:
        raise ValueError(f"isqrt is undefined for negative n, got {n}")
    return math.isqrt(n)


def lower_wythoff(k: int) -> int:
    """floor(k * phi), the k-th lower Wythoff number (k >= 0).

    lower_wythoff(k) == 0 iff k == 0; for k >= 1 the values
    1, 3, 4, 6, 8, 9, 11, ... enumerate the lower Beatty sequence of phi.
    """
    _check_index(k)
    return (k + isqrt(5 * k * k)) // 2


def upper_wythoff(k: int) -> int:
    """floor(k * phi^2) = floor(k * phi) + k, the k-th upper Wythoff number."""
    _check_index(k)
    return lower_wythoff(k) + k


def floor_div_phi(m: int) -> int:
    """floor(m / phi) for m >= 1, computed as floor(m * phi) - m.

    The identity holds because 1/phi = phi - 1.  Equivalently this is
    the number of positive lower Wythoff numbers strictly below m, i.e.
    the unique a with lower_wythoff(a) < m <= lower_wythoff(a + 1).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    _check_index(m, "m")
    return lower_wythoff(m) - m


def lower_wythoff_inverse(n: int) -> int | None:
    """Index k with lower_wythoff(k) == n, or None if n is not a lower value.

    The candidate index is floor_div_phi(n + 1) (the count of positive
    lower Wythoff numbers <= n); it is then confirmed by forward
    evaluation, so there is no off-by-one risk at Beatty boundaries.
    """
    _check_index(n, "n")
    k = floor_div_phi(n + 1)
    return k if lower_wythoff(k) == n else None


def upper_wythoff_inverse(n: int) -> int | None:
    """Index k with upper_wythoff(k) == n, or None if n is not an upper value.

    Candidate n - floor_div_phi(n + 1) (n minus the count of lower
    Wythoff numbers <= n), confirmed by forward evaluation.
    """
    _check_index(n, "n")
    k = n - floor_div_phi(n + 1)
    return k if k >= 0 and upper_wythoff(k) == n else None
