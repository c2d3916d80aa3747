"""Simplest-rational recovery for snapping floating or dusty exact values
back onto small rationals."""

from __future__ import annotations

from fractions import Fraction

from .errors import VerificationError

Q = Fraction


def simplest_between(lo, hi):
    """The rational with the smallest denominator in [lo, hi] (ties go to
    the one closer to zero), by the continued-fraction walk."""
    lo, hi = Q(lo), Q(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Q(0)
    if hi < 0:
        return -_simplest_pos(-hi, -lo)
    return _simplest_pos(lo, hi)


def _simplest_pos(lo, hi):
    fl = lo.numerator // lo.denominator
    if fl == lo:
        return Q(fl)
    if fl + 1 <= hi:
        return Q(fl + 1)
    return fl + 1 / _simplest_pos(1 / (hi - fl), 1 / (lo - fl))


def snap_rational(x, tol, max_denominator=10**6):
    """Simplest rational within tol of x; error if its denominator would
    exceed the cap."""
    x = Q(x)
    tol = Q(tol)
    r = simplest_between(x - tol, x + tol)
    if r.denominator > max_denominator:
        raise VerificationError(
            "rationalization residual too large: simplest candidate has "
            f"denominator {r.denominator}"
        )
    return r
