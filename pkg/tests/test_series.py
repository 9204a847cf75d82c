"""Window algebra, inversion, and the A-to-q bridges."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qskein import (EmptyWindow, ExponentNotMultipleOf4, InsufficientOrder,
                    InvalidParams, LaurentPoly, NonUnitLeading, RationalFn,
                    TruncatedSeries, ZeroSeries, lp_to_series, qpoch_finite,
                    qpoch_infinite, rf_to_series, ts_doteq)


def ts(shift, *coeffs):
    return TruncatedSeries(shift, coeffs)


def _longdiv(num, den, order):
    # Fraction long division, the independent oracle for invert()
    out = []
    rem = list(num) + [0] * order
    for _ in range(order):
        c = Fraction(rem[0], den[0])
        out.append(c)
        rem = [r - c * d for r, d in zip(rem[1:], den[1:] + [0] * len(rem))]
    return out


def test_invert_pochhammer_2():
    inv = qpoch_finite(2, 6).invert()
    # coefficients count partitions into parts of size at most 2
    assert inv.coeffs == (1, 1, 2, 2, 3, 3)
    oracle = _longdiv([1], [1, -1, -1, 1], 6)
    assert [Fraction(c) for c in inv.coeffs] == oracle


unit_series = st.builds(
    lambda shift, sign, rest: TruncatedSeries(shift, [sign] + rest),
    st.integers(min_value=-8, max_value=8),
    st.sampled_from((1, -1)),
    st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=15))


@given(unit_series)
def test_invert_roundtrip(f):
    g = f.invert()
    assert (f * g).shift == 0
    assert (f * g).coeffs == (1,) + (0,) * (f.order - 1)


def test_invert_errors():
    with pytest.raises(NonUnitLeading):
        ts(0, 2, 1).invert()
    with pytest.raises(NonUnitLeading):
        ts(0, 0, 0).invert()
    # leading zeros are fine, they just shift the result
    g = ts(0, 0, 1, 2, 3).invert()
    assert g.shift == -1 and g.coeffs == (1, -2, 1)


def test_window_arithmetic():
    a = ts(0, 1, 2, 3, 4)
    b = ts(2, 5, 5)
    s = a + b
    assert s.shift == 0 and s.coeffs == (1, 2, 8, 9)
    assert (a - a).coeffs == (0, 0, 0, 0)
    p = a * b
    assert p.shift == 2 and p.order == 2 and p.coeffs == (5, 15)
    assert (a * 3).coeffs == (3, 6, 9, 12)
    assert (2 + ts(0, 1, 1)).coeffs == (3, 1)
    assert a.shifted(4).shift == 4
    assert a.truncated(2).coeffs == (1, 2)
    with pytest.raises(InsufficientOrder):
        a.truncated(9)
    with pytest.raises(EmptyWindow):
        TruncatedSeries(0, ())


def test_coeff_access():
    f = ts(2, 7, 0, 4)
    assert f.coeff(0) == 0          # below the window: exact zero
    assert f.coeff(2) == 7 and f.coeff(4) == 4
    assert f.hi == 4
    with pytest.raises(InsufficientOrder):
        f.coeff(5)


def test_normalize_and_doteq():
    f = ts(3, 0, 0, 1, -2, 5)
    g = f.normalize()
    assert g.shift == 0 and g.coeffs == (1, -2, 5)
    assert ts_doteq(f, ts(-4, 1, -2, 5, 9), 3)
    assert not ts_doteq(f, ts(0, 1, 2, 5), 3)
    with pytest.raises(ZeroSeries):
        ts(0, 0, 0).normalize()
    with pytest.raises(InsufficientOrder):
        ts_doteq(f, f, 4)
    with pytest.raises(InvalidParams):
        ts_doteq(f, f, 0)


@given(unit_series, st.integers(min_value=-6, max_value=6))
def test_doteq_ignores_shifts(f, d):
    n = min(f.order, 3)
    assert ts_doteq(f, f.shifted(d), n)


def test_qpoch_infinite_vs_product():
    order = 60
    direct = TruncatedSeries.one(order)
    for j in range(1, order):
        direct = direct * TruncatedSeries(0, [1] + [0] * (j - 1) + [-1] + [0] * (order - j - 1))
    assert qpoch_infinite(order) == direct
    with pytest.raises(InvalidParams):
        qpoch_infinite(0)


def test_lp_to_series():
    f = LaurentPoly(-4, (1, 0, 0, 0, 2, 0, 0, 0, 1))
    assert lp_to_series(f, 5).coeffs == (1, 2, 1, 0, 0)
    assert lp_to_series(f, 2).coeffs == (1, 2)
    assert lp_to_series(LaurentPoly.zero(), 3).coeffs == (0, 0, 0)
    # lowest term is the reference point, so [2] = A^-2 + A^2 is on-lattice
    assert lp_to_series(LaurentPoly(-2, (1, 0, 0, 0, 1)), 3).coeffs == (1, 1, 0)
    with pytest.raises(ExponentNotMultipleOf4):
        lp_to_series(LaurentPoly(0, (1, 0, 1)), 3)
    with pytest.raises(InvalidParams):
        lp_to_series(f, 0)


def test_rf_to_series():
    one_minus_q = LaurentPoly(0, (1, 0, 0, 0, -1))
    geom = rf_to_series(RationalFn.make(1, one_minus_q), 6)
    assert geom.coeffs == (1, 1, 1, 1, 1, 1)
    from qskein import delta
    f = rf_to_series(RationalFn.make(delta(2), delta(1)), 4)
    assert f.coeffs == (-1, 0, -1, 1)
    assert rf_to_series(RationalFn.zero(), 3).coeffs == (0, 0, 0)
    with pytest.raises(NonUnitLeading):
        rf_to_series(RationalFn.make(1, LaurentPoly(0, (2, 0, 0, 0, 1))), 3)
    with pytest.raises(ExponentNotMultipleOf4):
        rf_to_series(RationalFn.make(1, LaurentPoly(0, (1, 1))), 3)


def test_text_rendering():
    assert ts(0, 1, -2, 1, 0, -2, 3).text() == "1 - 2q + q^2 - 2q^4 + 3q^5"
    assert ts(-2, 1, 0, 3).text() == "q^-2 + 3"
    assert ts(0, 0, 0).text() == "0"
    assert ts(1, 1).text() == "q"


def test_json_roundtrip():
    f = ts(-3, 1, 0, -7, 10 ** 30)
    data = f.to_json()
    assert data["order"] == 4 and data["variable"] == "q"
    assert TruncatedSeries.from_json(data) == f
    data["order"] = 5
    with pytest.raises(InvalidParams):
        TruncatedSeries.from_json(data)
