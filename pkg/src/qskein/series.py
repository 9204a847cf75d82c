"""Truncated integer q-series with explicit validity windows.

A TruncatedSeries tracks the coefficients of q**shift .. q**(shift+order-1)
and nothing beyond; below the shift every coefficient is an exact zero.
Operations propagate the window conservatively, so a coefficient you can
read out of a result is always correct.  Negative shifts are ordinary
values here: inner sums of the tail formula dip below q**0 before the
q**(k+k^2) prefactor lifts them back.

The q-layer talks to the A-layer through lp_to_series and rf_to_series
with the fixed reindexing q = A**4.
"""

from __future__ import annotations

from .errors import (EmptyWindow, ExponentNotMultipleOf4, InsufficientOrder,
                     InvalidParams, NonUnitLeading, ZeroSeries)
from .exactpoly import LaurentPoly, RationalFn

__all__ = ["TruncatedSeries", "ts_doteq", "qpoch_infinite", "lp_to_series",
           "rf_to_series"]


class TruncatedSeries:
    """Finite window of an integer power series in q."""

    __slots__ = ("shift", "coeffs")

    def __init__(self, shift: int = 0, coeffs=(0,)) -> None:
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise EmptyWindow("a series must track at least one coefficient")
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        if order < 1:
            raise EmptyWindow("order must be positive")
        return cls(0, (1,) + (0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def hi(self) -> int:
        """Largest exponent with a known coefficient."""
        return self.shift + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        if exp < self.shift:
            return 0
        if exp > self.hi:
            raise InsufficientOrder(f"coefficient of q^{exp} is beyond the window")
        return self.coeffs[exp - self.shift]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.shift == other.shift and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.shift, self.coeffs))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.shift, [-c for c in self.coeffs])

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            other = TruncatedSeries(min(0, self.shift),
                                    _const_window(other, min(0, self.shift), self.hi))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        shift = min(self.shift, other.shift)
        hi = min(self.hi, other.hi)
        if hi < shift:
            raise EmptyWindow("validity windows do not overlap")
        return TruncatedSeries(
            shift, [self._at(e) + other._at(e) for e in range(shift, hi + 1)])

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(self.shift, [other * c for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        b = other.coeffs
        for j, cj in enumerate(self.coeffs[:n]):
            if cj:
                out[j:] = [x + cj * y for x, y in zip(out[j:], b[:n - j])]
        return TruncatedSeries(self.shift + other.shift, out)

    __rmul__ = __mul__

    def _at(self, exp: int) -> int:
        # exp is inside [min shift, min hi] of a joint window by construction
        if exp < self.shift:
            return 0
        return self.coeffs[exp - self.shift]

    def shifted(self, d: int) -> TruncatedSeries:
        """Multiply by q**d."""
        return TruncatedSeries(self.shift + d, self.coeffs)

    def truncated(self, order: int) -> TruncatedSeries:
        if order < 1:
            raise EmptyWindow("order must be positive")
        if order > len(self.coeffs):
            raise InsufficientOrder("cannot widen a validity window")
        return TruncatedSeries(self.shift, self.coeffs[:order])

    def invert(self) -> TruncatedSeries:
        """Multiplicative inverse; the lowest tracked coefficient must be +-1."""
        lead = _first_nonzero(self.coeffs)
        if lead is None:
            raise NonUnitLeading("cannot invert a series with no nonzero coefficient")
        c0 = self.coeffs[lead]
        if c0 not in (1, -1):
            raise NonUnitLeading(f"leading coefficient {c0} is not a unit")
        a = self.coeffs[lead:]
        n = len(a)
        b = [0] * n
        b[0] = c0
        for t in range(1, n):
            acc = 0
            for u in range(1, t + 1):
                if a[u]:
                    acc += a[u] * b[t - u]
            b[t] = -c0 * acc
        return TruncatedSeries(-(self.shift + lead), b)

    def normalize(self) -> TruncatedSeries:
        """Drop leading zeros and reset the shift to 0."""
        lead = _first_nonzero(self.coeffs)
        if lead is None:
            raise ZeroSeries("cannot normalize a zero series")
        return TruncatedSeries(0, self.coeffs[lead:])

    def to_json(self) -> dict:
        return {"variable": "q", "shift": self.shift,
                "order": len(self.coeffs),
                "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> TruncatedSeries:
        coeffs = [int(c) for c in data["coeffs"]]
        if int(data["order"]) != len(coeffs):
            raise InvalidParams("order field disagrees with coefficient count")
        return cls(int(data["shift"]), coeffs)

    def text(self) -> str:
        """Human form, ascending exponents; q^1 prints as plain q."""
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.shift + j
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"

    __str__ = text

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.shift}, {list(self.coeffs)!r})"


def _first_nonzero(coeffs):
    for j, c in enumerate(coeffs):
        if c:
            return j
    return None


def _const_window(value: int, shift: int, hi: int):
    out = [0] * (hi - shift + 1)
    out[-shift] = value
    return out


def ts_doteq(f: TruncatedSeries, g: TruncatedSeries, n: int) -> bool:
    """Equality up to a q-power shift, modulo q**n.

    Both series are normalized (lowest nonzero term moved to q**0) and the
    first n coefficients are compared.  Either operand tracking fewer than
    n coefficients past its lowest term raises InsufficientOrder.
    """
    if n < 1:
        raise InvalidParams("comparison window must contain at least one term")
    a = f.normalize()
    b = g.normalize()
    if len(a.coeffs) < n or len(b.coeffs) < n:
        raise InsufficientOrder(f"need {n} coefficients after normalization")
    return a.coeffs[:n] == b.coeffs[:n]


def qpoch_infinite(order: int) -> TruncatedSeries:
    """(q;q)_infinity mod q**order via the pentagonal number expansion."""
    if order < 1:
        raise InvalidParams("order must be positive")
    out = [0] * order
    k = 0
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 >= order and e2 >= order:
            break
        s = 1 if k % 2 == 0 else -1
        if e1 < order:
            out[e1] += s
        if k and e2 < order:
            out[e2] += s
        k += 1
    return TruncatedSeries(0, out)


def lp_to_series(f: LaurentPoly, order: int) -> TruncatedSeries:
    """Reindex an A-polynomial supported on 4Z (after normalization) to q.

    The lowest exponent is moved to 0 first; the result starts at q**0.
    A polynomial is exact, so coefficients beyond its degree pad as zeros
    up to the requested order.
    """
    if order < 1:
        raise InvalidParams("order must be positive")
    if f.is_zero:
        return TruncatedSeries(0, [0] * order)
    span = f.max_exp - f.min_exp
    if span % 4:
        raise ExponentNotMultipleOf4(f"A-exponent span {span} is not a multiple of 4")
    for e, _ in f.terms():
        if (e - f.min_exp) % 4:
            raise ExponentNotMultipleOf4(
                f"A-exponent {e} sits {e - f.min_exp} above the lowest term")
    qc = list(f.coeffs[::4])
    if len(qc) < order:
        qc += [0] * (order - len(qc))
    return TruncatedSeries(0, qc[:order])


def rf_to_series(rf: RationalFn, order: int) -> TruncatedSeries:
    """Normalized q-expansion of an A-rational function.

    The numerator's lowest term becomes q**0.  The reduced denominator must
    have lowest coefficient +-1 (it always does for quotients of quantum
    integers) so the expansion stays over the integers.  Any nonzero
    coefficient at an A-offset outside 4Z inside the window is an error.
    """
    if order < 1:
        raise InvalidParams("order must be positive")
    if rf.is_zero:
        return TruncatedSeries(0, [0] * order)
    dc = rf.den.coeffs
    if dc[0] not in (1, -1):
        raise NonUnitLeading(f"denominator lowest coefficient {dc[0]} is not a unit")
    d0 = dc[0]
    na = 4 * (order - 1) + 1
    inv = [0] * na
    inv[0] = d0
    for t in range(1, na):
        acc = 0
        for u in range(1, min(t, len(dc) - 1) + 1):
            if dc[u]:
                acc += dc[u] * inv[t - u]
        inv[t] = -d0 * acc
    nc = rf.num.coeffs
    out = [0] * na
    for u, c in enumerate(nc[:na]):
        if c:
            out[u:] = [x + c * y for x, y in zip(out[u:], inv[:na - u])]
    for t, c in enumerate(out):
        if c and t % 4:
            raise ExponentNotMultipleOf4(
                f"series coefficient at A-offset {t} is nonzero")
    return TruncatedSeries(0, out[::4])
