"""Exact Laurent polynomials and rational functions over the integers.

A Laurent polynomial is stored densely as (min_exp, coeffs): coeffs[j] is
the integer coefficient of A**(min_exp + j).  The zero polynomial is the
canonical pair (0, ()).  Nonzero polynomials keep a nonzero first and last
coefficient, so equality is plain tuple equality.

A rational function is a reduced pair of Laurent polynomials.  The
canonical form puts the whole monomial content in the numerator: the
denominator has min_exp 0, a positive lowest coefficient, no common
polynomial factor with the numerator, and the pair carries no joint
integer content.  With that convention equality is again componentwise.

Everything is exact.  Division that must be exact raises NotDivisible on
any nonzero remainder instead of rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import InvalidParams, NotDivisible, ZeroDenominator

__all__ = ["LaurentPoly", "RationalFn"]


def _stride(coeffs) -> int:
    """gcd of the nonzero positions; 0 when only position 0 is occupied."""
    s = 0
    for j, c in enumerate(coeffs):
        if c and j:
            s = _int_gcd(s, j)
            if s == 1:
                break
    return s


def _deflate(coeffs, s):
    return coeffs[::s]


def _inflate(coeffs, s):
    out = [0] * ((len(coeffs) - 1) * s + 1)
    out[::s] = coeffs
    return out


def _convolve(a, b):
    """Dense integer convolution; skips zero entries of the shorter factor."""
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    la = len(a)
    for j, cj in enumerate(b):
        if cj:
            out[j:j + la] = [x + cj * y for x, y in zip(out[j:j + la], a)]
    return out


def _mul_lists(a, b):
    """Convolution with stride compression: both inputs have index 0 occupied."""
    s = _int_gcd(_stride(a), _stride(b))
    if s > 1:
        return _inflate(_convolve(_deflate(a, s), _deflate(b, s)), s)
    return _convolve(a, b)


def _content(coeffs) -> int:
    g = 0
    for c in coeffs:
        if c:
            g = _int_gcd(g, abs(c))
            if g == 1:
                break
    return g


def _primitive(coeffs):
    g = _content(coeffs)
    if g > 1:
        return [c // g for c in coeffs]
    return list(coeffs)


def _trim(coeffs):
    """Strip zero entries from both ends; returns (dropped_low, list)."""
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    return lo, list(coeffs[lo:hi])


def _prem(a, b):
    """Pseudo-remainder of a by b (integer lists, b[-1] != 0), trimmed."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    for pos in range(len(a) - 1 - db, -1, -1):
        lead = r[pos + db]
        if lead:
            # r <- lb*r - lead*x^pos*b keeps the chain integral
            r = [lb * c for c in r]
            for t in range(db):
                r[pos + t] -= lead * b[t]
            r[pos + db] = 0
    _, r = _trim(r[:db] if db else [])
    return r


def _gcd_lists(a, b):
    """Primitive gcd in Q[x] of trimmed integer lists, positive leading coeff."""
    s = _int_gcd(_stride(a), _stride(b))
    if s > 1:
        return _inflate(_gcd_lists(_deflate(a, s), _deflate(b, s)), s)
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        # monomial factors are units here, so x-powers in the remainder
        # can be stripped without touching the gcd
        a, b = b, _primitive(r)
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _div_exact_lists(f, g):
    """Exact quotient f/g for trimmed integer lists, or NotDivisible."""
    if not f:
        return []
    if len(f) < len(g):
        raise NotDivisible("degree of dividend is too small")
    s = _int_gcd(_stride(f), _stride(g))
    if s > 1:
        return _inflate(_div_exact_lists(_deflate(f, s), _deflate(g, s)), s)
    dg = len(g) - 1
    lg = g[-1]
    qlen = len(f) - dg
    if lg in (1, -1):
        r = list(f)
        q = [0] * qlen
        for pos in range(qlen - 1, -1, -1):
            c = r[pos + dg]
            if c:
                qc = c * lg
                q[pos] = qc
                for t in range(dg):
                    r[pos + t] -= qc * g[t]
                r[pos + dg] = 0
        if any(r):
            raise NotDivisible("nonzero remainder")
        return q
    r = [Fraction(c) for c in f]
    q = [Fraction(0)] * qlen
    for pos in range(qlen - 1, -1, -1):
        c = r[pos + dg]
        if c:
            qc = c / lg
            q[pos] = qc
            for t in range(dg):
                r[pos + t] -= qc * g[t]
            r[pos + dg] = 0
    if any(r):
        raise NotDivisible("nonzero remainder")
    if any(c.denominator != 1 for c in q):
        raise NotDivisible("quotient is not integral")
    return [int(c) for c in q]


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("min_exp", "coeffs", "variable")

    def __init__(self, min_exp: int = 0, coeffs=(), variable: str = "A") -> None:
        lo, trimmed = _trim(tuple(coeffs))
        if trimmed:
            object.__setattr__(self, "min_exp", min_exp + lo)
        else:
            object.__setattr__(self, "min_exp", 0)
        object.__setattr__(self, "coeffs", tuple(trimmed))
        object.__setattr__(self, "variable", variable)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, variable: str = "A") -> LaurentPoly:
        return cls(0, (), variable)

    @classmethod
    def one(cls, variable: str = "A") -> LaurentPoly:
        return cls(0, (1,), variable)

    @classmethod
    def monomial(cls, coeff: int, exp: int, variable: str = "A") -> LaurentPoly:
        return cls(exp, (coeff,), variable)

    @classmethod
    def from_terms(cls, terms: dict[int, int], variable: str = "A") -> LaurentPoly:
        """Build from an exponent -> coefficient mapping."""
        nz = {e: c for e, c in terms.items() if c}
        if not nz:
            return cls.zero(variable)
        lo = min(nz)
        out = [0] * (max(nz) - lo + 1)
        for e, c in nz.items():
            out[e - lo] = c
        return cls(lo, out, variable)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            return 0
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        j = exp - self.min_exp
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def terms(self):
        """Yield (exponent, coefficient) pairs, ascending, zeros skipped."""
        for j, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + j, c

    def _check_same_variable(self, other: LaurentPoly) -> None:
        if self.variable != other.variable:
            raise InvalidParams(
                f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other, 0, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.variable == other.variable
                and self.min_exp == other.min_exp
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.variable, self.min_exp, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_exp, [-c for c in self.coeffs], self.variable)

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other, 0, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_variable(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for e, c in self.terms():
            out[e - lo] += c
        for e, c in other.terms():
            out[e - lo] += c
        return LaurentPoly(lo, out, self.variable)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        return self + (-other if isinstance(other, LaurentPoly) else -1 * other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.variable)
            return LaurentPoly(self.min_exp, [other * c for c in self.coeffs],
                               self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_variable(other)
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero(self.variable)
        return LaurentPoly(self.min_exp + other.min_exp,
                           _mul_lists(self.coeffs, other.coeffs), self.variable)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise InvalidParams("negative power of a Laurent polynomial")
        out = LaurentPoly.one(self.variable)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shifted(self, d: int) -> LaurentPoly:
        """Multiply by A**d."""
        if self.is_zero:
            return self
        return LaurentPoly(self.min_exp + d, self.coeffs, self.variable)

    def substitute_invert(self) -> LaurentPoly:
        """The image under A -> A**(-1); an involutive ring map."""
        return LaurentPoly(-self.max_exp, self.coeffs[::-1], self.variable)

    def content(self) -> int:
        return _content(self.coeffs)

    def divide_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient; raises NotDivisible unless other divides self."""
        if not isinstance(other, LaurentPoly):
            raise InvalidParams("divisor must be a LaurentPoly")
        self._check_same_variable(other)
        if other.is_zero:
            raise ZeroDenominator("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero(self.variable)
        q = _div_exact_lists(self.coeffs, other.coeffs)
        return LaurentPoly(self.min_exp - other.min_exp, q, self.variable)

    @staticmethod
    def gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
        """Primitive gcd over the rationals, min_exp 0, positive leading coeff.

        Monomials are units of the Laurent ring, so the result is pinned to
        min_exp 0; the sign convention makes the highest coefficient positive.
        """
        f._check_same_variable(g)
        if f.is_zero and g.is_zero:
            raise InvalidParams("gcd of two zero polynomials")
        if f.is_zero:
            f, g = g, f
        if g.is_zero:
            c = _primitive(f.coeffs)
            if c[-1] < 0:
                c = [-x for x in c]
            return LaurentPoly(0, c, f.variable)
        return LaurentPoly(0, _gcd_lists(f.coeffs, g.coeffs), f.variable)

    def to_json(self) -> dict:
        return {"variable": self.variable,
                "min_exp": self.min_exp,
                "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls(int(data["min_exp"]),
                   [int(c) for c in data["coeffs"]],
                   data.get("variable", "A"))

    def text(self) -> str:
        """Human form, ascending exponents, explicit A^k tokens."""
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = f"{self.variable}^{e}" if mag == 1 else f"{mag}{self.variable}^{e}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.min_exp}, {list(self.coeffs)!r})"


class RationalFn:
    """Quotient of Laurent polynomials in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly) -> None:
        num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @classmethod
    def make(cls, num, den=None) -> RationalFn:
        """Build and reduce; accepts LaurentPoly or int arguments."""
        num = _as_poly(num)
        den = LaurentPoly.one(num.variable) if den is None else _as_poly(den, num.variable)
        return cls(num, den)

    @classmethod
    def zero(cls, variable: str = "A") -> RationalFn:
        return cls(LaurentPoly.zero(variable), LaurentPoly.one(variable))

    @classmethod
    def one(cls, variable: str = "A") -> RationalFn:
        return cls(LaurentPoly.one(variable), LaurentPoly.one(variable))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one(self.den.variable)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn.make(_as_poly(other, self.num.variable))
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> RationalFn:
        return RationalFn(-self.num, self.den)

    def __add__(self, other) -> RationalFn:
        other = _as_rational(other, self.num.variable)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFn:
        other = _as_rational(other, self.num.variable)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RationalFn:
        return (-self) + other

    def __mul__(self, other) -> RationalFn:
        other = _as_rational(other, self.num.variable)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFn:
        other = _as_rational(other, self.num.variable)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFn:
        if self.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        other = _as_rational(other, self.num.variable)
        return RationalFn(other.num * self.den, other.den * self.num)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RationalFn:
        return cls(LaurentPoly.from_json(data["num"]),
                   LaurentPoly.from_json(data["den"]))

    def text(self) -> str:
        if self.is_polynomial:
            return self.num.text()
        return f"({self.num.text()}) / ({self.den.text()})"

    __str__ = text

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"


def _as_poly(value, variable: str = "A") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.monomial(value, 0, variable)
    raise InvalidParams(f"cannot treat {type(value).__name__} as a polynomial")


def _as_rational(value, variable: str):
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, (int, LaurentPoly)):
        return RationalFn.make(_as_poly(value, variable))
    return NotImplemented


def _reduce(num: LaurentPoly, den: LaurentPoly):
    """Canonical form shared by every RationalFn constructor path."""
    num._check_same_variable(den)
    variable = num.variable
    if den.is_zero:
        raise ZeroDenominator("zero denominator")
    if num.is_zero:
        return LaurentPoly.zero(variable), LaurentPoly.one(variable)
    shift = num.min_exp - den.min_exp
    ncs = list(num.coeffs)
    dcs = list(den.coeffs)
    ncont = _content(ncs)
    dcont = _content(dcs)
    nprim = [c // ncont for c in ncs]
    dprim = [c // dcont for c in dcs]
    g = _gcd_lists(nprim, dprim)
    if g != [1]:
        nprim = _div_exact_lists(nprim, g)
        dprim = _div_exact_lists(dprim, g)
    scale = Fraction(ncont, dcont)
    nout = [scale.numerator * c for c in nprim]
    dout = [scale.denominator * c for c in dprim]
    if dout[0] < 0:
        nout = [-c for c in nout]
        dout = [-c for c in dout]
    return (LaurentPoly(shift, nout, variable), LaurentPoly(0, dout, variable))
