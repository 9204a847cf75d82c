"""Bubble coefficients: three routes, expansions, theta values."""

import pytest

from qskein import (BubbleParams, ConstraintViolation, InvalidParams,
                    LaurentPoly, RationalFn, alpha, beta, bubble_coeff_closed,
                    bubble_coeff_quantum, bubble_coeff_recursive,
                    bubble_expand, delta, qint, theta)


def test_params_constraints():
    p = BubbleParams(2, 3, 1, 2, 1, 2)
    assert (p.m_prime, p.n_prime) == (1, 2)
    assert BubbleParams.from_upper(2, 3, 1, 2) == p
    with pytest.raises(ConstraintViolation, match="m \\+ k = m' \\+ l"):
        BubbleParams(2, 3, 2, 2, 1, 2)
    with pytest.raises(ConstraintViolation, match="n \\+ k = n' \\+ l"):
        BubbleParams(2, 3, 1, 1, 1, 2)
    with pytest.raises(ConstraintViolation, match="nonnegative"):
        BubbleParams.from_upper(1, 1, 0, 3)
    with pytest.raises(AttributeError):
        p.m = 5                      # frozen


def test_closed_form_degenerate_cases():
    assert bubble_coeff_closed(3, 2, 4, 0, 0) == RationalFn.one()
    assert bubble_coeff_closed(3, 2, 4, 0, 1).is_zero
    assert bubble_coeff_closed(3, 2, 4, 2, -1).is_zero
    assert bubble_coeff_closed(3, 2, 4, 2, 3).is_zero   # above min(m, n, l)
    assert bubble_coeff_closed(0, 5, 3, 2, 1).is_zero
    with pytest.raises(InvalidParams):
        bubble_coeff_closed(1, 1, 1, 2, 0)
    with pytest.raises(InvalidParams):
        bubble_coeff_closed(-1, 1, 1, 1, 0)


def test_single_band_matches_weights():
    # l = 1 channels are exactly the alpha/beta weights
    for m in range(4):
        for n in range(4):
            for k in range(1, 4):
                assert bubble_coeff_closed(m, n, k, 1, 0) == alpha(m, n, k)
                if min(m, n) >= 1:
                    assert bubble_coeff_closed(m, n, k, 1, 1) == beta(m, n, k)


def test_three_routes_agree_spot():
    for args in ((3, 2, 4, 2, 1), (2, 2, 2, 2, 2), (4, 3, 5, 3, 0),
                 (1, 4, 3, 3, 1), (5, 5, 3, 2, 2)):
        c = bubble_coeff_closed(*args)
        assert c == bubble_coeff_recursive(*args)
        assert c == bubble_coeff_quantum(*args)


def test_recursive_guards():
    assert bubble_coeff_recursive(3, 2, 4, 0, 0) == RationalFn.one()
    assert bubble_coeff_recursive(0, 5, 3, 2, 1).is_zero
    with pytest.raises(InvalidParams):
        bubble_coeff_recursive(1, 1, 1, 2, 0)


def test_expand_square_bubble():
    terms = bubble_expand(BubbleParams.from_upper(1, 1, 1, 1))
    assert [(t.i, t.top_label, t.bottom_label) for t in terms] == [(0, 0, 0), (1, 1, 1)]
    assert terms[0].coeff == alpha(1, 1, 1)
    assert terms[1].coeff == beta(1, 1, 1)


def test_expand_labels_k_greater():
    terms = bubble_expand(BubbleParams.from_upper(2, 3, 3, 2))
    assert [(t.i, t.top_label, t.bottom_label) for t in terms] \
        == [(0, 0, 1), (1, 1, 2), (2, 2, 3)]


def test_expand_rotation_for_wide_bottom():
    # same diagram read upside down: labels swap ends, coefficients match
    narrow = bubble_expand(BubbleParams(1, 1, 2, 2, 2, 1))
    wide = bubble_expand(BubbleParams(2, 2, 1, 1, 1, 2))
    assert [t.coeff for t in narrow] == [t.coeff for t in wide]
    assert [(t.top_label, t.bottom_label) for t in wide] \
        == [(t.bottom_label, t.top_label) for t in narrow]


def test_theta_values():
    assert theta(0, 0, 3) == RationalFn.make(delta(3))
    assert theta(1, 1, 0) == RationalFn.make(delta(2))
    want = RationalFn.make(
        -(LaurentPoly.from_terms({-4: 1, 4: 1}) * qint(3)), qint(2))
    assert theta(1, 1, 1) == want
    with pytest.raises(InvalidParams):
        theta(-1, 0, 0)


def test_theta_symmetry_grid():
    for m in range(4):
        for n in range(4):
            for k in range(4):
                v = theta(m, n, k)
                assert v == theta(m, k, n) == theta(n, k, m) == theta(k, m, n)


def _qfact(n):
    out = LaurentPoly.one()
    for t in range(1, n + 1):
        out = out * qint(t)
    return out


def test_theta_against_factorial_form():
    # independent closed form for the theta value in quantum factorials
    for m in range(3):
        for n in range(3):
            for k in range(3):
                num = _qfact(m + n + k + 1) * _qfact(m) * _qfact(n) * _qfact(k)
                den = _qfact(n + k) * _qfact(m + k) * _qfact(m + n)
                want = RationalFn(num, den)
                if (m + n + k) % 2:
                    want = -want
                assert theta(m, n, k) == want
