"""Closed-form bounds for the UTSW model.

``ZETA3`` is the printed upper bound on zeta(3); using an upper bound keeps
every expression below a valid upper bound.
"""

import math
from typing import Tuple

from utsw.torus import normalizing_factor

ZETA3 = 1.20206


def z_bounds(n: int) -> Tuple[float, float]:
    """Strict ``(lower, upper)`` bounds on the normalizing factor."""
    if n < 3:
        raise ValueError(f"torus size must be >= 3, got {n}")
    return 1.0 / (4.0 * (math.log(n) + 1.0)), 1.0 / (4.0 * math.log(n / 2.0))


def _terms(n: int):
    l1 = 1.0 / math.log(n / 2.0)
    h = math.log(n) + 1.0
    return l1, h


def theoretical_eu_bound(n: int) -> float:
    """Union bound on the chance that a root has a four-cycle using a long-range edge."""
    if n < 3:
        raise ValueError(f"torus size must be >= 3, got {n}")
    l1, h = _terms(n)
    return (
        70.0 / 9.0 * l1
        + (65.0 / 2.0 * ZETA3 + 403.0 / 128.0) * l1**2
        + (24.0 * ZETA3 + 8.0) * h * l1**3
        + (3.0 / 4.0 * ZETA3 + 1.0 / 4.0) * h**2 * l1**4
    )


def cycle_set_size_bound(n: int) -> float:
    """Upper bound on the expected number of four-cycles found at a root."""
    if n < 3:
        raise ValueError(f"torus size must be >= 3, got {n}")
    l1, h = _terms(n)
    return (
        4.0
        + 146.0 / 9.0 * l1
        + (89.0 / 2.0 * ZETA3 + 583.0 / 128.0) * l1**2
        + (24.0 * ZETA3 + 8.0) * h * l1**3
        + (3.0 / 4.0 * ZETA3 + 1.0 / 4.0) * h**2 * l1**4
    )


def detection_lower_bound(n: int) -> float:
    """Lower bound on the detection probability of a vertex (may be negative)."""
    return 1.0 - 4.0 * theoretical_eu_bound(n)


def verify_z_bounds(n_list):
    rows = []
    for n in n_list:
        z = normalizing_factor(n)
        lo, hi = z_bounds(n)
        rows.append({
            "n": n,
            "z": z,
            "lower": lo,
            "upper": hi,
            "lower_ok": lo < z,
            "upper_ok": z < hi,
            "ratio": hi / lo,
        })
    return rows
