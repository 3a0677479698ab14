"""Profiles, profile ratios and Kendall tau-b between decompositions."""

from __future__ import annotations

import bisect
import math
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Sequence, Union

from .graph import Chain, DomainError

__all__ = [
    "profile",
    "profile_value",
    "profile_ratio",
    "kendall_tau_b",
    "chain_tau_b",
    "round_half_up",
]


def profile_value(chain: Chain, i: int) -> Fraction:
    """Step density of the smallest chain set holding at least ``i`` vertices."""
    n = len(chain.sets[-1])
    if not 1 <= i <= n:
        raise DomainError(f"profile index {i} outside 1..{n}")
    j = bisect.bisect_left(chain.sizes, i)
    return chain.step_densities[j - 1]


def profile(chain: Chain, n: int) -> list[Fraction]:
    """``[prof(1), ..., prof(n)]`` for a chain over ``n`` vertices."""
    if len(chain.sets[-1]) != n:
        raise DomainError(f"chain covers {len(chain.sets[-1])} vertices, not {n}")
    out: list[Fraction] = []
    for j in range(1, len(chain.sets)):
        out.extend([chain.step_densities[j - 1]] * (len(chain.sets[j]) - len(chain.sets[j - 1])))
    return out


def profile_ratio(approx: Chain, exact: Chain) -> Union[Fraction, float]:
    """``min_i prof(i; approx) / prof(i; exact)``.

    Indices where both profiles are 0 are skipped; a positive value over 0
    counts as infinity. If every index is skipped the profiles agree and
    the ratio is 1. Returns ``math.inf`` only when every compared index
    divides by zero.
    """
    n = len(exact.sets[-1])
    if len(approx.sets[-1]) != n:
        raise DomainError("chains are over graphs of different sizes")
    best: Union[Fraction, float, None] = None
    for a, b in zip(profile(approx, n), profile(exact, n)):
        if b == 0:
            if a == 0:
                continue
            r: Union[Fraction, float] = math.inf
        else:
            r = a / b
        if best is None or r < best:
            best = r
    return Fraction(1) if best is None else best


def round_half_up(x: Union[Fraction, float], places: int = 2) -> Decimal:
    if isinstance(x, float) and math.isinf(x):
        return Decimal("Infinity")
    q = Decimal(1).scaleb(-places)
    if isinstance(x, Fraction):
        d = Decimal(x.numerator) / Decimal(x.denominator)
    else:
        d = Decimal(x)
    return d.quantize(q, rounding=ROUND_HALF_UP)


def _tie_pairs(sorted_vals: Sequence) -> int:
    total = run = 0
    for k in range(1, len(sorted_vals) + 1):
        if k < len(sorted_vals) and sorted_vals[k] == sorted_vals[k - 1]:
            run += 1
        else:
            total += run * (run + 1) // 2
            run = 0
    return total


def _count_inversions(a: list) -> int:
    """Strict inversions of ``a`` via bottom-up merge sort; sorts ``a`` in place."""
    n = len(a)
    target = a
    buf = a[:]
    swaps = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[j] < a[i]:
                    buf[k] = a[j]
                    swaps += mid - i
                    j += 1
                else:
                    buf[k] = a[i]
                    i += 1
                k += 1
            buf[k:hi] = a[i:mid] + a[j:hi]
        a, buf = buf, a
        width *= 2
    if a is not target:
        target[:] = a
    return swaps


def kendall_tau_b(a: Sequence, b: Sequence) -> float:
    """Kendall tau-b between two assignments of ranks to the same items.

    Runs in O(n log n) (Knight's method): sort by ``(a, b)``, count ties,
    then count discordant pairs as inversions of the ``b`` column. Returns
    ``nan`` when either assignment gives every item the same value.
    """
    if len(a) != len(b):
        raise DomainError("assignments must cover the same items")
    n = len(a)
    pairs = sorted(zip(a, b))
    n0 = n * (n - 1) // 2
    ties_a = _tie_pairs([p[0] for p in pairs])
    ties_ab = _tie_pairs(pairs)
    col = [p[1] for p in pairs]
    discordant = _count_inversions(col)
    ties_b = _tie_pairs(col)  # col is sorted now
    denom = (n0 - ties_a) * (n0 - ties_b)
    if denom == 0:
        return math.nan
    concordant_minus = n0 - ties_a - ties_b + ties_ab - 2 * discordant
    return concordant_minus / math.sqrt(denom)


def chain_tau_b(first: Chain, second: Chain) -> float:
    """tau-b between the per-vertex level indices of two chains."""
    n = len(first.sets[-1])
    if len(second.sets[-1]) != n:
        raise DomainError("chains are over graphs of different sizes")
    return kendall_tau_b(first.levels(n), second.levels(n))
