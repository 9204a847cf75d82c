"""Acceptance gate: one test per criterion, one PASS/FAIL line each.

Run with -s to see the lines as they pass; every criterion is bit-exact.
"""

import random
import time

from qskein import (TruncatedSeries, alpha, bubble_coeff_closed,
                    bubble_coeff_quantum, bubble_coeff_recursive, delta,
                    delta_product_identity, mixed_bubble_poch_form,
                    qint_product_identity, qpoch_infinite, RationalFn,
                    reference_tail_coeffs, square_bubble_poch_form,
                    stabilization_check, tail_85, tail_85_double_sum, theta,
                    theta_poch_form)

GRID = [(m, n, k, l)
        for m in range(6) for n in range(6)
        for k in range(1, 6) for l in range(1, k + 1)]


def _report(name, ok):
    print(("PASS " if ok else "FAIL ") + name)
    assert ok, name


def test_criterion_1_golden_tail():
    t0 = time.monotonic()
    got = tail_85(121).terms.coeffs
    elapsed = time.monotonic() - t0
    ok = got == reference_tail_coeffs() \
        and got[:6] == (1, -2, 1, 0, -2, 3) and got[120] == -324 \
        and elapsed < 5.0
    _report(f"criterion 1: tail_85(121) matches the published series "
            f"({elapsed:.2f}s)", ok)


def test_criterion_2_triple_oracle():
    t0 = time.monotonic()
    ok = all(bubble_coeff_closed(m, n, k, l, i)
             == bubble_coeff_recursive(m, n, k, l, i)
             == bubble_coeff_quantum(m, n, k, l, i)
             for m, n, k, l in GRID for i in range(min(m, n, l) + 1))
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60.0
    _report(f"criterion 2: closed/recursive/quantum agree on the full grid "
            f"({elapsed:.2f}s)", ok)


def test_criterion_3_symmetry_suite():
    sym = all(bubble_coeff_closed(m, n, k, l, i)
              == bubble_coeff_closed(n, m, k, l, i)
              for m, n, k, l in GRID for i in range(min(m, n, l) + 1))
    asym = all(alpha(m, n, k) == alpha(n, m, k)
               for m in range(6) for n in range(6) for k in range(1, 6))
    vanish = all(bubble_coeff_closed(m, n, k, l, i).is_zero
                 for m, n, k, l in GRID for i in (-1, l + 1))
    _report("criterion 3: outer-label symmetry, alpha symmetry, "
            "out-of-range vanishing", sym and asym and vanish)


def test_criterion_4_delta_product_identity():
    ok = all(delta_product_identity(m, n, k)
             for m in range(9) for n in range(9) for k in range(9))
    _report("criterion 4: delta product identity on 0..8", ok)


def test_criterion_5_theta_symmetry():
    sym = all(theta(m, n, k) == theta(m, k, n) == theta(n, k, m)
              for m in range(6) for n in range(6) for k in range(6))
    edge = all(theta(0, 0, k) == RationalFn.make(delta(k)) for k in range(6)) \
        and all(theta(m, n, 0) == RationalFn.make(delta(m + n))
                for m in range(6) for n in range(6))
    _report("criterion 5: theta three-way symmetry and edge values", sym and edge)


def test_criterion_6_identity_checks():
    monomials = set()
    ok = all(qint_product_identity(n, j) for n in range(1, 6) for j in range(n))
    for n in range(6):
        for i in range(n + 1):
            cmp = square_bubble_poch_form(n, i)
            ok = ok and cmp.ok
            if cmp.ok:
                monomials.add(cmp.factor.text())
            for j in range(n + 1):
                cmp = mixed_bubble_poch_form(n, i, j)
                ok = ok and cmp.ok
                if cmp.ok:
                    monomials.add(cmp.factor.text())
    for n in range(6):
        for i in range(6):
            for j in range(6):
                cmp = theta_poch_form(n, i, j)
                ok = ok and cmp.ok
                if cmp.ok:
                    monomials.add(cmp.factor.text())
    _report(f"criterion 6: Pochhammer identities on n <= 5, discrepancy "
            f"monomials {sorted(monomials)}", ok)


def test_criterion_7_stabilization():
    t0 = time.monotonic()
    ok = all(stabilization_check(n) for n in (1, 2, 3, 4))
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 120.0
    _report(f"criterion 7: state sum reproduces the tail for n = 1..4 "
            f"({elapsed:.2f}s)", ok)


def test_criterion_8_series_kernel():
    rng = random.Random(58115)
    ok = True
    for _ in range(100):
        coeffs = [rng.choice((1, -1))] + [rng.randint(-9, 9) for _ in range(63)]
        f = TruncatedSeries(rng.randint(-10, 10), coeffs)
        g = f * f.invert()
        ok = ok and g.shift == 0 and g.coeffs == (1,) + (0,) * 63
    direct = TruncatedSeries.one(200)
    for j in range(1, 200):
        direct = direct * TruncatedSeries(0, [1] + [0] * (j - 1) + [-1]
                                          + [0] * (200 - j - 1))
    ok = ok and qpoch_infinite(200) == direct
    _report("criterion 8: 100 invert round-trips at order 64 and "
            "qpoch_infinite(200) vs the finite product", ok)


def test_criterion_9_rearrangement():
    ok = tail_85_double_sum(121).terms == tail_85(121).terms
    _report("criterion 9: double-sum rearrangement equals the direct tail "
            "at order 121", ok)
