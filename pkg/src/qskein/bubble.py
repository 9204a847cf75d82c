"""Bubble coefficients and expansions for pairs of merging idempotent bands.

A bubble carries four outer labels m, n, m', n' and two inner band labels
k, l subject to m + k = m' + l and n + k = n' + l.  Expanding it rewrites
the diagram as a sum over fusion channels i with coefficients that live in
the fraction field of Z[A, A^-1].  Three independent evaluators are kept:

  * bubble_coeff_closed    product of loop values, the workhorse
  * bubble_coeff_recursive repeated single-band reduction via alpha/beta
  * bubble_coeff_quantum   the same product arranged in quantum integers

They must agree everywhere; the test suite and `qskein verify` hold them
to that.  The closed form requires k >= l.  Expansions with l > k go
through the 180-degree rotation of the diagram, which swaps the roles of
the outer pairs and of k and l.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConstraintViolation, InvalidParams
from .exactpoly import LaurentPoly, RationalFn
from .quantum import alpha, beta, delta, gauss_binom, qint

__all__ = ["BubbleParams", "ExpansionTerm", "bubble_coeff_closed",
           "bubble_coeff_recursive", "bubble_coeff_quantum",
           "bubble_expand", "theta"]


@dataclass(frozen=True)
class BubbleParams:
    """Labels of a bubble diagram: outer m, n (upper), m', n' (lower), inner k, l."""

    m: int
    n: int
    m_prime: int
    n_prime: int
    k: int
    l: int

    def __post_init__(self):
        for name in ("m", "n", "m_prime", "n_prime", "k", "l"):
            if getattr(self, name) < 0:
                raise ConstraintViolation(f"label {name} must be nonnegative")
        if self.m + self.k != self.m_prime + self.l:
            raise ConstraintViolation(
                f"m + k = m' + l fails: {self.m} + {self.k} != {self.m_prime} + {self.l}")
        if self.n + self.k != self.n_prime + self.l:
            raise ConstraintViolation(
                f"n + k = n' + l fails: {self.n} + {self.k} != {self.n_prime} + {self.l}")

    @classmethod
    def from_upper(cls, m: int, n: int, k: int, l: int) -> BubbleParams:
        """Derive the lower labels from the upper ones."""
        return cls(m, n, m + k - l, n + k - l, k, l)


@dataclass(frozen=True)
class ExpansionTerm:
    """One fusion channel: coefficient times the ladder with the given band labels."""

    i: int
    coeff: RationalFn
    top_label: int
    bottom_label: int


def _check_closed_args(m: int, n: int, k: int, l: int) -> None:
    if m < 0 or n < 0 or l < 0:
        raise InvalidParams("labels must be nonnegative")
    if k < l:
        raise InvalidParams(f"closed form needs k >= l, got k={k}, l={l}")


def _closed_factors(m: int, n: int, k: int, l: int, i: int):
    """Loop-value bookkeeping of the closed form, before any polynomial work.

    Returns (sign, a_exp, num, den): num and den are Counters mapping a
    loop index d to the multiplicity of delta(d), already cancelled
    against each other, with delta(0) = 1 dropped.  The Gaussian binomial
    [l choose i] is left to the caller.  Only valid for k >= l and
    0 <= i <= min(m, n, l).
    """
    num = Counter()
    den = Counter()
    for j in range(l - i):
        num[k - j - 1] += 1
        num[m + n + k - i - j] += 1
    for s in range(i):
        num[n - s - 1] += 1
        num[m - s - 1] += 1
    for t in range(l):
        den[n + k - t - 1] += 1
        den[m + k - t - 1] += 1
    for d in set(num) & set(den):
        common = min(num[d], den[d])
        num[d] -= common
        den[d] -= common
    num = Counter({d: c for d, c in num.items() if c and d != 0})
    den = Counter({d: c for d, c in den.items() if c and d != 0})
    sign = -1 if (i * (i - l)) % 2 else 1
    return sign, 2 * i * (i - l), num, den


def _delta_power_product(counter) -> LaurentPoly:
    out = LaurentPoly.one()
    for d in sorted(counter):
        out = out * delta(d) ** counter[d]
    return out


@lru_cache(maxsize=None)
def bubble_coeff_closed(m: int, n: int, k: int, l: int, i: int) -> RationalFn:
    """Channel-i coefficient as a product of loop values.

    Zero outside 0 <= i <= min(m, n, l); requires k >= l.
    """
    _check_closed_args(m, n, k, l)
    if i < 0 or i > min(m, n, l):
        return RationalFn.zero()
    sign, a_exp, num_c, den_c = _closed_factors(m, n, k, l, i)
    num = gauss_binom(l, i).shifted(a_exp)
    if sign < 0:
        num = -num
    num = num * _delta_power_product(num_c)
    return RationalFn(num, _delta_power_product(den_c))


_REC_MEMO: dict = {}


def bubble_coeff_recursive(m: int, n: int, k: int, l: int, i: int) -> RationalFn:
    """Channel-i coefficient by peeling one band at a time.

    Each step trades the innermost band for an alpha term (band count kept,
    k drops by one) plus a beta term (band count drops, outer labels drop).
    Independent of the closed form by construction.
    """
    _check_closed_args(m, n, k, l)
    return _rec(m, n, k, l, i)


def _rec(m: int, n: int, k: int, l: int, i: int) -> RationalFn:
    if i < 0 or i > l or m < 0 or n < 0:
        return RationalFn.zero()
    if l == 0:
        return RationalFn.one() if i == 0 else RationalFn.zero()
    key = (m, n, k, l, i)
    hit = _REC_MEMO.get(key)
    if hit is not None:
        return hit
    out = alpha(m, n, k) * _rec(m, n, k - 1, l - 1, i)
    b = beta(m, n, k)
    if not b.is_zero:
        out = out + b * _rec(m - 1, n - 1, k, l - 1, i - 1)
    _REC_MEMO[key] = out
    return out


@lru_cache(maxsize=None)
def bubble_coeff_quantum(m: int, n: int, k: int, l: int, i: int) -> RationalFn:
    """Channel-i coefficient arranged in quantum integers.

    Same value as the closed form; the loop values are unpacked as
    delta(d) = (-1)**d [d+1], which reshuffles every sign into the single
    prefactor (-1)**(i+l).
    """
    _check_closed_args(m, n, k, l)
    if i < 0 or i > min(m, n, l):
        return RationalFn.zero()
    num = gauss_binom(l, i).shifted(2 * i * (i - l))
    if (i + l) % 2:
        num = -num
    for j in range(l - i):
        num = num * qint(k - j)
        num = num * qint(m + n + k - i - j + 1)
    for s in range(i):
        num = num * qint(n - s)
        num = num * qint(m - s)
    den = LaurentPoly.one()
    for t in range(l):
        den = den * qint(n + k - t)
        den = den * qint(m + k - t)
    return RationalFn(num, den)


def bubble_expand(params: BubbleParams) -> list:
    """All fusion channels of a bubble with their coefficients and new labels.

    For k >= l the channel-i term keeps i bands above and k - l + i below.
    For l > k the bubble is read upside down: the rotated diagram has its
    larger band first, so the coefficients are closed-form values in the
    primed labels and the channel-i term carries l - k + i above, i below.
    """
    m, n, mp, np_, k, l = (params.m, params.n, params.m_prime,
                           params.n_prime, params.k, params.l)
    if k >= l:
        top = min(m, n, l)
        return [ExpansionTerm(i, bubble_coeff_closed(m, n, k, l, i),
                              i, k - l + i)
                for i in range(top + 1)]
    top = min(mp, np_, k)
    return [ExpansionTerm(i, bubble_coeff_closed(np_, mp, l, k, i),
                          l - k + i, i)
            for i in range(top + 1)]


@lru_cache(maxsize=None)
def theta(m: int, n: int, k: int) -> RationalFn:
    """Evaluation of the trivalent theta graph with edge labels m, n, k.

    Closing a (k, k) bubble over an (m, n) pair leaves only the i = 0
    channel, whose ladder closes to delta(m + n).  Symmetric in all three
    arguments, although the formula hides it.
    """
    if m < 0 or n < 0 or k < 0:
        raise InvalidParams("labels must be nonnegative")
    return bubble_coeff_closed(m, n, k, k, 0) * delta(m + n)
