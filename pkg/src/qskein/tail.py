"""State sums and the stable tail of the colored Jones family for 8_5.

The n-th colored invariant of the 8_5 knot reduces, after bubble
expansions, to a double state sum over fusion channels (i, j).  Its lowest
coefficients stabilize as n grows; the limit is the tail

    T(q) = (q;q)_inf**2 * sum_k  q^(k + k^2) / (q;q)_k
                        * sum_{i=0..k} q^(-2 i (k - i)) [k choose i]^2

computed here to any order with exact integer arithmetic.  The module also
carries the Pochhammer-product identities that rewrite the state sum into
that shape; each identity check recomputes both sides independently, so
the identities double as cross-validation of the bubble engine.

sb_state_sum builds the exact rational value of the state sum over a
single common denominator of loop values; stabilization_check divides it
by delta(n), expands, and compares against the tail window for window.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .bubble import _closed_factors, bubble_coeff_closed, theta
from .errors import InvalidParams
from .exactpoly import LaurentPoly, RationalFn
from .quantum import delta, gauss_binom, qint, qpoch_finite
from .series import (TruncatedSeries, lp_to_series, qpoch_infinite,
                     rf_to_series, ts_doteq)

__all__ = ["StateSumValue", "TailSeries", "MonomialComparison",
           "sb_state_sum", "qint_product_identity", "square_bubble_poch_form",
           "mixed_bubble_poch_form", "theta_poch_form", "theta_value_identity",
           "tail_summand", "tail_85", "tail_85_double_sum",
           "stabilization_check", "reference_tail_coeffs"]


@dataclass(frozen=True)
class StateSumValue:
    """Exact value of the color-n state sum."""

    n: int
    value: RationalFn


@dataclass(frozen=True)
class TailSeries:
    """Tail coefficients through q**(order-1) and how they were computed."""

    terms: TruncatedSeries
    order: int
    method: str


@dataclass(frozen=True)
class MonomialComparison:
    """Result of comparing two closed forms up to a unit monomial.

    When ok, factor is the ratio lhs/rhs, a monomial +-A**s; factor equal
    to 1 means the two sides agree exactly.
    """

    ok: bool
    factor: LaurentPoly | None

    def __bool__(self) -> bool:
        return self.ok


_ONE_MINUS_Q = LaurentPoly(0, (1, 0, 0, 0, -1))


@lru_cache(maxsize=None)
def _qq(n: int) -> LaurentPoly:
    """(q;q)_n as a polynomial in A with q = A**4."""
    if n < 0:
        raise InvalidParams("Pochhammer index must be nonnegative")
    if n == 0:
        return LaurentPoly.one()
    f = [0] * (4 * n + 1)
    f[0] = 1
    f[-1] = -1
    return _qq(n - 1) * LaurentPoly(0, f)


def _delta_power_product(counter) -> LaurentPoly:
    out = LaurentPoly.one()
    for d in sorted(counter):
        if d and counter[d]:
            out = out * delta(d) ** counter[d]
    return out


def _cancel(num: Counter, den: Counter) -> None:
    for d in set(num) & set(den):
        common = min(num[d], den[d])
        num[d] -= common
        den[d] -= common
    for c in (num, den):
        for d in [d for d, mult in c.items() if not mult or d == 0]:
            del c[d]


def sb_state_sum(n: int) -> StateSumValue:
    """Exact double state sum over fusion channels for color n.

    Every (i, j) term is a product of five bubble coefficients, two loop
    ratios and a closing loop.  The terms are accumulated over one common
    denominator of loop values, with a single reduction at the end, so the
    result is the canonical rational value.
    """
    if n < 0:
        raise InvalidParams("color must be nonnegative")
    terms = []
    for i in range(n + 1):
        for j in range(n + 1):
            sign, a_exp = 1, 0
            num: Counter = Counter()
            den: Counter = Counter()
            for mm, nn, kk, ll, ii in ((n, n, n, n, i), (n, n, n, n, j),
                                       (i, n, n, n - j, 0), (j, n, n, n - i, 0),
                                       (j, i, n, n, 0)):
                s, e, nc, dc = _closed_factors(mm, nn, kk, ll, ii)
                sign *= s
                a_exp += e
                num += nc
                den += dc
            num[2 * n] += 2
            num[i + j] += 1
            den[n + i] += 1
            den[n + j] += 1
            _cancel(num, den)
            terms.append((sign, a_exp, num, den,
                          gauss_binom(n, i) * gauss_binom(n, j)))
    shared: Counter = Counter()
    for _, _, _, den, _ in terms:
        for d, mult in den.items():
            if mult > shared[d]:
                shared[d] = mult
    total = LaurentPoly.zero()
    for sign, a_exp, num, den, binom in terms:
        extra = Counter({d: shared[d] - den.get(d, 0) for d in shared})
        p = binom.shifted(a_exp)
        if sign < 0:
            p = -p
        p = p * _delta_power_product(num) * _delta_power_product(extra)
        total = total + p
    return StateSumValue(n, RationalFn(total, _delta_power_product(shared)))


def _unit_compare(lhs: RationalFn, rhs: RationalFn) -> MonomialComparison:
    if lhs.is_zero and rhs.is_zero:
        return MonomialComparison(True, LaurentPoly.one())
    if lhs.is_zero or rhs.is_zero:
        return MonomialComparison(False, None)
    ratio = lhs / rhs
    if ratio.is_polynomial:
        p = ratio.num
        if len(p.coeffs) == 1 and p.coeffs[0] in (1, -1):
            return MonomialComparison(True, p)
    return MonomialComparison(False, None)


def qint_product_identity(n: int, j: int) -> bool:
    """prod_{t=0..j} [n-t] against its Pochhammer form; exact equality.

    Needs 0 <= j < n so every factor is a genuine quantum integer.
    """
    if n < 1 or j < 0 or j >= n:
        raise InvalidParams("need 0 <= j < n")
    lhs = LaurentPoly.one()
    for t in range(j + 1):
        lhs = lhs * qint(n - t)
    e = 2 + 3 * j + j * j - 2 * n - 2 * j * n
    rhs = RationalFn(_qq(n).shifted(e), _ONE_MINUS_Q ** (j + 1) * _qq(n - j - 1))
    return RationalFn.make(lhs) == rhs


def square_bubble_poch_form(n: int, i: int) -> MonomialComparison:
    """Channel-i coefficient of the square bubble (all labels n) in Pochhammer form."""
    if n < 0 or i < 0 or i > n:
        raise InvalidParams("need 0 <= i <= n")
    lhs = bubble_coeff_closed(n, n, n, n, i)
    num = (_qq(n) ** 6 * _qq(3 * n - i + 1)).shifted(2 * i + 4 * i * i - 2 * n)
    if (i + n) % 2:
        num = -num
    den = _qq(2 * n) ** 2 * _qq(2 * n + 1) * _qq(i) ** 2 * _qq(n - i) ** 3
    return _unit_compare(lhs, RationalFn(num, den))


def mixed_bubble_poch_form(n: int, i: int, j: int) -> MonomialComparison:
    """Channel-0 coefficient of the (j, n; n, n-i) bubble in Pochhammer form."""
    if n < 0 or i < 0 or j < 0 or i > n or j > n:
        raise InvalidParams("need 0 <= i, j <= n")
    lhs = bubble_coeff_closed(j, n, n, n - i, 0)
    num = (_qq(i + j) * _qq(n) * _qq(n + i)
           * _qq(2 * n + j + 1)).shifted(2 * (i - n))
    if (n - i) % 2:
        num = -num
    den = _qq(i) * _qq(2 * n) * _qq(j + n) * _qq(n + j + i + 1)
    return _unit_compare(lhs, RationalFn(num, den))


def theta_poch_form(n: int, i: int, j: int) -> MonomialComparison:
    """Closed (i, j; n, n) bubble times its closing loop in Pochhammer form."""
    if n < 0 or i < 0 or j < 0:
        raise InvalidParams("labels must be nonnegative")
    lhs = bubble_coeff_closed(i, j, n, n, 0) * delta(i + j)
    num = (_qq(n) * _qq(j) * _qq(i)
           * _qq(n + j + i + 1)).shifted(-2 * (i + j + n))
    if (i + j + n) % 2:
        num = -num
    den = _ONE_MINUS_Q * _qq(i + n) * _qq(j + n) * _qq(j + i)
    return _unit_compare(lhs, RationalFn(num, den))


def theta_value_identity(n: int, i: int, j: int) -> bool:
    """The closed (i, j; n, n) bubble times delta(i+j) is the theta value.

    theta(n, i, j) arrives through a different closed-form instance, so
    this is the three-way symmetry of the theta graph checked exactly.
    """
    if n < 0 or i < 0 or j < 0:
        raise InvalidParams("labels must be nonnegative")
    lhs = bubble_coeff_closed(i, j, n, n, 0) * delta(i + j)
    return lhs == theta(n, i, j)


def tail_summand(n: int, i: int, j: int) -> RationalFn:
    """The (i, j) term of the color-n state sum in fully Pochhammerized form.

    Substituting the product identities into every factor of the state sum
    gives this expression; it must match the factor-by-factor value, which
    the tests verify at the series level.
    """
    if n < 0 or i < 0 or j < 0 or i > n or j > n:
        raise InvalidParams("need 0 <= i, j <= n")
    num = (_qq(i + j) * _qq(n) ** 15
           * _qq(1 + i + 2 * n) * _qq(1 + j + 2 * n)
           * _qq(1 - i + 3 * n) * _qq(1 - j + 3 * n))
    num = num.shifted(2 * i + 4 * i * i + 2 * j + 4 * j * j - 10 * n)
    if (i + j + n) % 2:
        num = -num
    den = (_ONE_MINUS_Q * _qq(i) ** 2 * _qq(j) ** 2 * _qq(2 * n) ** 6
           * _qq(n - i) ** 3 * _qq(i + n) * _qq(n - j) ** 3 * _qq(j + n)
           * _qq(1 + i + j + n) * _qq(1 + 2 * n) ** 2)
    ratios = RationalFn(delta(2 * n) ** 2, delta(n + i) * delta(n + j))
    return RationalFn(num, den) * ratios


def _tail_finish(total: TruncatedSeries, order: int, method: str) -> TailSeries:
    pi = qpoch_infinite(order)
    out = total * pi * pi
    assert out.shift == 0 and out.order == order and out.coeffs[0] == 1
    return TailSeries(out, order, method)


def tail_85(order: int) -> TailSeries:
    """Tail coefficients of q**0 .. q**(order-1), straight from the formula.

    The k-th term dips q**(-2 floor(k/2) ceil(k/2)) below its q**(k + k^2)
    prefactor, so its window starts at k + k^2 - 2 floor(k/2) ceil(k/2);
    that bound grows quadratically and cuts the k-sum off.
    """
    if order < 1:
        raise InvalidParams("order must be positive")
    total = None
    k = 0
    while True:
        dip = 2 * (k // 2) * ((k + 1) // 2)
        start = k + k * k - dip
        if start >= order:
            break
        w = order - start
        inner = LaurentPoly.zero()
        for i in range(k + 1):
            gb = gauss_binom(k, i)
            inner = inner + (gb * gb).shifted(-8 * i * (k - i))
        ts = lp_to_series(inner, w).shifted(-dip)
        term = (ts * qpoch_finite(k, w).invert()).shifted(k + k * k)
        total = term if total is None else total + term
        k += 1
    return _tail_finish(total, order, "direct")


def tail_85_double_sum(order: int) -> TailSeries:
    """Same tail with the channel sum distributed over the k-sum.

    Each (i, k) pair contributes q**(k + k^2 - 2 i (k - i)) [k choose i]^2
    / (q;q)_k; the exponent is increasing in k at fixed i and is at least
    i + i^2, which bounds both loops.  Must agree with tail_85 exactly.
    """
    if order < 1:
        raise InvalidParams("order must be positive")
    total = None
    i = 0
    while i + i * i < order:
        k = i
        while True:
            e = k + k * k - 2 * i * (k - i)
            if e >= order:
                break
            w = order - e
            gb = gauss_binom(k, i)
            ts = lp_to_series(gb * gb, w)
            term = (ts * qpoch_finite(k, w).invert()).shifted(e)
            total = term if total is None else total + term
            k += 1
        i += 1
    return _tail_finish(total, order, "double-sum")


def stabilization_check(n: int) -> bool:
    """Does the color-n state sum reproduce the tail through q**n?

    Divides the exact state sum by delta(n), expands the quotient as a
    q-series from its lowest term, and compares n + 1 coefficients against
    the tail.  Any failure of exact divisibility or of the expansion to
    stay on integral q-powers inside the window raises from the layers
    below, which is the diagnostic we want.
    """
    if n < 1:
        raise InvalidParams("need a window of at least two coefficients")
    quotient = sb_state_sum(n).value / RationalFn.make(delta(n))
    ser = rf_to_series(quotient, n + 1)
    return ts_doteq(ser, tail_85(n + 1).terms, n + 1)


@lru_cache(maxsize=None)
def reference_tail_coeffs() -> tuple:
    """The 121 published tail coefficients; line j holds the q**j coefficient."""
    text = resources.files("qskein").joinpath("data/tail_85_coeffs.txt").read_text()
    return tuple(int(line) for line in text.split())
