from fractions import Fraction

import pytest

from singzeta.partitions import Partition
from singzeta.oracle import (FqModulePresentation, build_local_model,
                             enumerate_submodules, quot_coeffs_oracle,
                             solomon_census, matrix_pair_count,
                             coh_quot_invariance_check, dvr_type_cotype_census,
                             surjective_homs_count)
from singzeta.report import BudgetExceededError
from singzeta.clzeta import z_series


def test_build_local_model_dimensions():
    assert build_local_model(("node", 1), 1, 2, 2).dim == 3  # basis 1, x, y
    assert build_local_model(("cusp", 1), 1, 1, 3).dim == 1  # R/m = k
    assert build_local_model(("cusp", 2), 2, 3, 2).dim == 10
    assert build_local_model(("cusp", 1), 1, 2, 2, "normalization").dim == 4
    assert build_local_model(("node", 1), 1, 2, 2, "normalization").dim == 8
    assert build_local_model(("node", 1), 1, 3, 2, "max_ideal").dim == 4


def test_model_validation():
    # generators must commute and be nilpotent; the builder's always do,
    # and a hand-made bad presentation is rejected
    with pytest.raises(ValueError):
        FqModulePresentation(2, 1, [[[1]]])  # identity is not nilpotent
    with pytest.raises(ValueError):
        FqModulePresentation(2, 2, [[[0, 1], [0, 0]], [[0, 0], [1, 0]]])  # no commute


def test_census_codim_zero():
    # the single codim-0 submodule is the whole module; its quotient is 0
    model = build_local_model(("cusp", 1), 2, 2, 3)
    census = enumerate_submodules(model, 0)
    assert census.counts == {(0, 0): 1}


def test_census_rank_vanishing():
    # quotient rank never exceeds min(d, codim)
    model = build_local_model(("node", 1), 2, 3, 2)
    census = enumerate_submodules(model, 3)
    for (n, r), c in census.counts.items():
        assert r <= min(2, n) or c == 0


def test_census_schedule_independence():
    model = build_local_model(("node", 2), 1, 3, 2)
    a = enumerate_submodules(model, 3, schedule="lex")
    b = enumerate_submodules(model, 3, schedule="revlex")
    assert a == b


def test_census_budget():
    model = build_local_model(("node", 1), 2, 3, 2)
    with pytest.raises(BudgetExceededError):
        enumerate_submodules(model, 3, budget=5)


def test_solomon_census():
    # coefficients of 1/(t;p)_d are h_k(1, p, ..., p^{d-1})
    for p in (2, 3):
        assert solomon_census(1, p, 4).coefficients(4) == [1] * 5
        want = [sum(p ** a for a in range(k + 1)) for k in range(5)]
        assert solomon_census(2, p, 4).coefficients(4) == want


def test_quot_coeffs_oracle_vs_formula():
    got = quot_coeffs_oracle("node", 1, 1, 2, 3)
    want = [c.eval_int(2) for c in z_series("node", 1, 1, 4)]
    assert [Fraction(x) for x in got] == want
    got = quot_coeffs_oracle("cusp", 1, 1, 2, 3, module="normalization")
    want = [c.eval_int(2) for c in z_series("cusp", 1, 1, 4, module="normalization")]
    assert [Fraction(x) for x in got] == want


def test_matrix_pair_count():
    assert matrix_pair_count(0, 2) == 1
    assert matrix_pair_count(1, 2) == 2
    assert matrix_pair_count(1, 3) == 3
    with pytest.raises(BudgetExceededError):
        matrix_pair_count(3, 3, budget=100)


def test_dvr_census():
    census = dvr_type_cotype_census(Partition([1, 1]), 2)
    # three lines, each of type (1) and cotype (1); plus 0 and the whole module
    assert census[((1,), (1,))] == 3
    assert census[((), (1, 1))] == 1
    assert census[((1, 1), ())] == 1


def test_surjective_homs_count():
    # maps F_p^d -> F_p surjective: p^d - 1
    assert surjective_homs_count(Partition([1]), 2, 3) == 8
    assert surjective_homs_count(Partition([2]), 1, 2) == 2  # generators of Z/4-like module
    assert surjective_homs_count(Partition([1, 1]), 1, 2) == 0


def test_coh_quot_invariance():
    rep = coh_quot_invariance_check("node", 1, 2, 1, 1, [1, 2, 3])
    assert rep.passed
    with pytest.raises(ValueError):
        coh_quot_invariance_check("node", 1, 2, 1, 2, [2])
