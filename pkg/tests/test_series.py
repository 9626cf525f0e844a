import json
import random

import pytest

from singzeta.laurent import LaurentPoly2, ONE, Q, T, qpochhammer
from singzeta.series import (TruncSeries2, LaurentSeriesUT, poch_inf,
                             poch_inf_info, inv_qpoch_u, phi_rs, WindowError)


def geometric(u_prec, t_prec):
    return TruncSeries2(u_prec, t_prec, {(0, j): 1 for j in range(t_prec)})


def test_inverse_geometric():
    one_minus_t = TruncSeries2(8, 8, {(0, 0): 1, (0, 1): -1})
    assert one_minus_t.inverse() == geometric(8, 8)


def test_mul_example():
    a = TruncSeries2(8, 8, {(0, 0): 1, (1, 1): 1})
    b = TruncSeries2(8, 8, {(0, 0): 1, (1, 1): -1})
    assert a * b == TruncSeries2(8, 8, {(0, 0): 1, (2, 2): -1})


def test_inverse_involution_random():
    rng = random.Random(3)
    for _ in range(20):
        coeffs = {(rng.randint(0, 5), rng.randint(0, 5)): rng.randint(-4, 4)
                  for _ in range(6)}
        coeffs[(0, 0)] = rng.choice([1, -1])
        s = TruncSeries2(6, 6, coeffs)
        assert s.inverse().inverse() == s
        assert s * s.inverse() == TruncSeries2.one(6, 6)


def test_inverse_requires_unit():
    with pytest.raises(WindowError):
        TruncSeries2(4, 4, {(0, 0): 2}).inverse()


def test_window_intersection_compare():
    big = poch_inf(1, 0, 10, 4)
    small = poch_inf(1, 0, 6, 3)
    equal, window, disc = big.agrees_with(small)
    assert equal and window == (6, 3) and disc is None


def test_window_monotonicity():
    assert poch_inf(1, 1, 12, 9).truncate(7, 5) == poch_inf(1, 1, 7, 5)
    a = phi_rs(1, 1, [(1, 0)], [(3, 1)], (2, 1), 10, 6)
    assert a.truncate(6, 4) == phi_rs(1, 1, [(1, 0)], [(3, 1)], (2, 1), 6, 4)


def test_poch_inf_pentagonal():
    # (u;u)_inf = 1 - u - u^2 + u^5 + u^7 - u^12 - ...
    series = poch_inf(1, 0, 13, 1)
    expected = {(0, 0): 1, (1, 0): -1, (2, 0): -1, (5, 0): 1, (7, 0): 1, (12, 0): -1}
    assert series.coeffs == expected


def test_poch_inf_stabilization_index():
    series, k = poch_inf_info(1, 0, 6, 1)
    assert k == 5
    _, k = poch_inf_info(1, 1, 6, 2)
    assert k == 5
    # a factor whose leading monomial is outside the t-window is never used
    _, k = poch_inf_info(1, 1, 6, 1)
    assert k == 0
    with pytest.raises(WindowError):
        poch_inf(0, 0, 5, 5)


def test_poch_inf_constant_term():
    assert poch_inf(1, 1, 9, 5).coeffs[(0, 0)] == 1


def test_euler_identities():
    # (ut;u)_inf equals its alternating sum side, and the product of the
    # product-form with sum_k (ut)^k/(u;u)_k is 1 (both on a 12x8 window)
    u_prec, t_prec = 12, 8
    prod = poch_inf(1, 1, u_prec, t_prec)
    alt = TruncSeries2(u_prec, t_prec)
    direct = TruncSeries2(u_prec, t_prec)
    for k in range(t_prec):
        inv = TruncSeries2(u_prec, t_prec, inv_qpoch_u(k, u_prec).coeffs)
        sign = -1 if k % 2 else 1
        alt = alt + TruncSeries2.monomial(sign, k * (k + 1) // 2, k, u_prec, t_prec) * inv
        direct = direct + TruncSeries2.monomial(1, k, k, u_prec, t_prec) * inv
    assert alt == prod
    assert prod * direct == TruncSeries2.one(u_prec, t_prec)


def test_cauchy_phi11():
    # 1phi1(a; az; u, z) = (z;u)_inf / (az;u)_inf at a = u, z = u^2 t
    lhs = phi_rs(1, 1, [(1, 0)], [(3, 1)], (2, 1), 10, 6)
    rhs = poch_inf(2, 1, 10, 6) * poch_inf(3, 1, 10, 6).inverse()
    assert lhs == rhs


def test_phi_edge_cases():
    assert phi_rs(0, 0, [], [], None, 5, 5) == TruncSeries2.one(5, 5)
    with pytest.raises(WindowError):
        phi_rs(1, 0, [(1, 0)], [], (0, 0), 5, 5)  # constant z, e = 0: no term decay
    with pytest.raises(WindowError):
        phi_rs(0, 1, [], [(0, 0)], (1, 0), 5, 5)  # lower parameter 1
    with pytest.raises(WindowError):
        phi_rs(2, 0, [(1, 0), (1, 0)], [], (1, 0), 5, 5)  # r > s+1


def test_series_serialization():
    s = poch_inf(1, 1, 5, 4)
    blob = json.loads(json.dumps(s.to_json_obj()))
    assert TruncSeries2.from_json_obj(blob) == s


def test_from_laurent_variants():
    p = ONE - LaurentPoly2.monomial(1, -1, 1)  # 1 - t/q
    s = TruncSeries2.from_laurent(p, 5, 5)
    assert s.coeffs == {(0, 0): 1, (1, 1): -1}
    with pytest.raises(WindowError):
        TruncSeries2.from_laurent(ONE + Q, 5, 5)
    qt = TruncSeries2.from_laurent(ONE + Q * T, 5, 5, var="q")
    assert qt.coeffs == {(0, 0): 1, (1, 1): 1}


# -- Laurent-tolerant layer -----------------------------------------------------


def test_laurent_series_precision_tracking():
    exact = LaurentSeriesUT.from_laurent(Q ** 2, 4)  # u^-2
    series = LaurentSeriesUT.from_trunc(inv_qpoch_u(1, 10), 4)
    prod = exact * series
    assert prod.u_hi == 8  # 10 + (-2)
    assert prod.coeffs[(-2, 0)] == 1 and prod.coeffs[(0, 0)] == 1


def test_laurent_series_inverse_exact():
    ls = LaurentSeriesUT(5, {(0, 0): 1, (1, 1): -1})  # 1 - ut
    inv = ls.inverse()
    assert inv.coeffs == {(j, j): 1 for j in range(5)}
    assert (ls * inv).coeffs == {(0, 0): 1}


def test_laurent_series_to_trunc_guards():
    ls = LaurentSeriesUT(3, {(-1, 0): 1})
    with pytest.raises(WindowError):
        ls.to_trunc(3, 3)
    capped = LaurentSeriesUT.from_trunc(inv_qpoch_u(2, 4), 3)
    with pytest.raises(WindowError):
        capped.to_trunc(6, 3)


def test_laurent_series_t_substitution():
    ls = LaurentSeriesUT.from_laurent(qpochhammer(T, Q, 1), 4)  # 1 - t
    shifted = ls.subst_t_times_upow(2)  # 1 - u^2 t
    assert shifted.coeffs == {(0, 0): 1, (2, 1): -1}
