import json
import random

import pytest

from singzeta.laurent import (LaurentPoly2, ZERO, ONE, Q, T, QINV, qpochhammer,
                              qbinomial, aq, parse_poly, qpoch_qinv_ratio,
                              UnsupportedSubstitutionError)
from singzeta.partitions import Partition


def rand_poly(rng, terms=6, span=4):
    return LaurentPoly2({(rng.randint(-span, span), rng.randint(-span, span)):
                         rng.randint(-9, 9) for _ in range(terms)})


def test_qpochhammer_examples():
    assert qpochhammer(T, Q, 0) == ONE
    assert qpochhammer(T, Q, 2) == ONE - T - Q * T + Q * T * T
    assert qpochhammer(Q, Q, 1) == ONE - Q


def test_qpochhammer_recurrence():
    for n in range(21):
        lhs = qpochhammer(T, Q, n + 1)
        rhs = qpochhammer(T, Q, n) * (ONE - T * LaurentPoly2.monomial(1, n, 0))
        assert lhs == rhs


def test_qbinomial_examples():
    for n in range(6):
        assert qbinomial(n, 0) == ONE
    assert qbinomial(2, 1) == ONE + Q
    assert qbinomial(4, 2) == parse_poly("1 + q + 2*q^2 + q^3 + q^4")
    with pytest.raises(ValueError):
        qbinomial(2, 3)


def test_qbinomial_symmetry():
    for n in range(13):
        for r in range(n + 1):
            assert qbinomial(n, r) == qbinomial(n, n - r)


def _rref_count(n, r, p):
    """Count r-dim subspaces of F_p^n by enumerating reduced echelon forms."""
    from itertools import combinations
    total = 0
    for pivots in combinations(range(n), r):
        free = 0
        for i, col in enumerate(pivots):
            # free entries of row i: columns right of its pivot, not pivots
            free += sum(1 for c in range(col + 1, n) if c not in pivots)
        total += p ** free
    return total


def test_qbinomial_counts_subspaces():
    for n in range(5):
        for r in range(n + 1):
            for p in (2, 3):
                assert qbinomial(n, r).eval_int(p) == _rref_count(n, r, p)


def test_aq_examples():
    assert aq(Partition()) == ONE
    assert aq(Partition([1])) == Q - ONE
    assert aq(Partition([1, 1])) == parse_poly("q - q^2 - q^3 + q^4")
    # lam=(2,1): q^5 (1-1/q)^2
    assert aq(Partition([2, 1])) == parse_poly("q^3 - 2*q^4 + q^5")


def test_substitute():
    p = ONE - T + Q * T * T
    assert p.substitute(Q, LaurentPoly2.monomial(1, -1, -1)) == \
        parse_poly("1 - q^-1*t^-1 + q^-1*t^-2")
    assert p.substitute(Q, T) == p
    assert T.substitute(Q, T * T) == T * T
    with pytest.raises(UnsupportedSubstitutionError):
        p.substitute(Q + ONE, T)
    with pytest.raises(UnsupportedSubstitutionError):
        p.substitute(Q, 2 * T)


def test_eval_int():
    assert (ONE + Q * T).eval_int(2, 1) == 3
    assert (Q - ONE).eval_int(3, 0) == 2
    assert (ONE - T + Q * T * T).eval_int(2, 1) == 2
    with pytest.raises(ZeroDivisionError):
        QINV.eval_int(0, 1)
    with pytest.raises(ZeroDivisionError):
        LaurentPoly2.monomial(1, 0, -1).eval_int(2, 0)


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(40):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO


def test_serialization_roundtrip_random():
    rng = random.Random(11)
    for _ in range(60):
        p = rand_poly(rng)
        assert parse_poly(str(p)) == p
        assert LaurentPoly2.from_json_obj(json.loads(json.dumps(p.to_json_obj()))) == p


def test_canonical_order():
    p = Q * T * T - T + ONE
    assert str(p) == "1 - t + q*t^2"
    obj = p.to_json_obj()
    assert obj == {"vars": ["q", "t"], "terms": [[0, 0, "1"], [0, 1, "-1"], [1, 2, "1"]]}
    assert str(ZERO) == "0"
    assert parse_poly("0") == ZERO


def test_qpoch_qinv_ratio():
    # (1/q;1/q)_3 / (1/q;1/q)_1 = (1-q^-2)(1-q^-3)
    want = (ONE - LaurentPoly2.monomial(1, -2, 0)) * (ONE - LaurentPoly2.monomial(1, -3, 0))
    assert qpoch_qinv_ratio(3, 2) == want
    assert qpoch_qinv_ratio(3, 0) == ONE


def test_grouped_str():
    p = parse_poly("1 - t - q*t + q^3*t^2 + q^2*t^2")
    assert p.grouped_str() == "1 - (1 + q)*t + (q^2 + q^3)*t^2"
