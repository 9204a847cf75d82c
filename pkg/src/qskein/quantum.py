"""Quantum integers, loop values, and Gaussian binomials over Z[A, A^-1].

Everything here is exact.  The deformation parameter is a = A**2, so the
quantum integer [n] is a Laurent polynomial in A supported on one residue
class mod 4, and the Gaussian binomial in base a**2 = A**4 lands on 4Z.
Loop values delta(n) extend to negative indices by delta(-1) = 0 and
delta(n) = -delta(-n-2); that reflection is what makes the recursive
bubble coefficients terminate cleanly.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidParams, ZeroDenominator
from .exactpoly import LaurentPoly, RationalFn
from .series import TruncatedSeries

__all__ = ["qint", "delta", "qpoch_finite", "gauss_binom",
           "delta_product_identity", "alpha", "beta"]


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n] = (a**n - a**-n) / (a - a**-1) with a = A**2.

    [0] = 0, [-n] = -[n]; for n > 0 the coefficients are all 1 on the
    exponents 2(n-1), 2(n-3), ..., 2(1-n).
    """
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -qint(-n)
    coeffs = [0] * (4 * (n - 1) + 1)
    coeffs[::4] = [1] * n
    return LaurentPoly(-2 * (n - 1), coeffs)


@lru_cache(maxsize=None)
def delta(n: int) -> LaurentPoly:
    """Loop value of the n-strand idempotent: (-1)**n [n+1].

    delta(-1) = 0 and delta(n) = -delta(-n-2) for n <= -2.
    """
    if n == -1:
        return LaurentPoly.zero()
    if n < -1:
        return -delta(-n - 2)
    v = qint(n + 1)
    return -v if n % 2 else v


def qpoch_finite(n: int, order: int) -> TruncatedSeries:
    """(q;q)_n = prod_{j=1..n} (1 - q**j) as a window of `order` coefficients."""
    if n < 0:
        raise InvalidParams("Pochhammer index must be nonnegative")
    if order < 1:
        raise InvalidParams("order must be positive")
    c = [0] * order
    c[0] = 1
    for j in range(1, n + 1):
        if j >= order:
            break
        for t in range(order - 1, j - 1, -1):
            c[t] -= c[t - j]
    return TruncatedSeries(0, c)


@lru_cache(maxsize=None)
def _gauss_binom_q(l: int, i: int) -> tuple:
    # dense q-coefficients of [l choose i], degree i*(l-i)
    if i == 0 or i == l:
        return (1,)
    a = _gauss_binom_q(l - 1, i)
    b = _gauss_binom_q(l - 1, i - 1)
    out = [0] * (i * (l - i) + 1)
    for t, c in enumerate(a):
        out[t] += c
    off = l - i
    for t, c in enumerate(b):
        out[t + off] += c
    return tuple(out)


def gauss_binom(l: int, i: int) -> LaurentPoly:
    """Gaussian binomial [l choose i] in base A**4.

    Built from the Pascal recursion [l,i] = [l-1,i] + q**(l-i) [l-1,i-1];
    zero outside 0 <= i <= l.
    """
    if l < 0:
        raise InvalidParams("upper index must be nonnegative")
    if i < 0 or i > l:
        return LaurentPoly.zero()
    qc = _gauss_binom_q(l, i)
    coeffs = [0] * (4 * (len(qc) - 1) + 1)
    coeffs[::4] = qc
    return LaurentPoly(0, coeffs)


def delta_product_identity(m: int, n: int, k: int) -> bool:
    """Check delta(m+k) delta(n+k-1) - delta(m) delta(n-1) = delta(m+n+k) delta(k-1)."""
    if m < 0 or n < 0 or k < 0:
        raise InvalidParams("indices must be nonnegative")
    lhs = delta(m + k) * delta(n + k - 1) - delta(m) * delta(n - 1)
    return lhs == delta(m + n + k) * delta(k - 1)


@lru_cache(maxsize=None)
def alpha(m: int, n: int, k: int) -> RationalFn:
    """Weight of the band-count-preserving term in the single-bubble relation."""
    _check_weight_args(m, n, k)
    num = delta(n + k) * delta(m + k - 1) - delta(n) * delta(m - 1)
    den = delta(n + k - 1) * delta(m + k - 1)
    if den.is_zero:
        raise ZeroDenominator(f"alpha({m}, {n}, {k}) has a vanishing denominator")
    return RationalFn(num, den)


@lru_cache(maxsize=None)
def beta(m: int, n: int, k: int) -> RationalFn:
    """Weight of the band-count-lowering term in the single-bubble relation."""
    _check_weight_args(m, n, k)
    den = delta(n + k - 1) * delta(m + k - 1)
    if den.is_zero:
        raise ZeroDenominator(f"beta({m}, {n}, {k}) has a vanishing denominator")
    return RationalFn(delta(m - 1) * delta(n - 1), den)


def _check_weight_args(m: int, n: int, k: int) -> None:
    if m < 0 or n < 0:
        raise InvalidParams("strand labels must be nonnegative")
    if k < 1:
        raise InvalidParams("band label must be at least 1")
