import pytest

from singzeta.laurent import LaurentPoly2, ONE, Q, T, parse_poly
from singzeta.quotzeta import (SingularityFamily, nz, nz_cusp_free,
                               nz_cusp_normalization, nz_node_free,
                               nz_node_normalization, full_z, funceq_check,
                               funceq_report, specialize, specialization_report,
                               skew_cauchy_bounded_check, cusp_t2_check,
                               node22_closed_form, node22_check, m_limit_check,
                               positivity_scan)


def test_family_constants():
    cusp = SingularityFamily("cusp", 2)
    node = SingularityFamily("node", 2)
    assert (cusp.s, cusp.delta, cusp.conductor_colength) == (1, 2, 4)
    assert (node.s, node.delta, node.conductor_colength) == (2, 2, 8)
    with pytest.raises(ValueError):
        SingularityFamily("line", 1)


def test_nz_cusp_normalization_examples():
    assert nz_cusp_normalization(1, 1) == ONE + Q * T
    # d=1: sum_{i<=m} (q t)^i
    assert nz_cusp_normalization(3, 1) == parse_poly("1 + q*t + q^2*t^2 + q^3*t^3")
    assert nz_cusp_normalization(4, 0) == ONE
    assert nz_cusp_normalization(1, 2) == parse_poly("1 + q^2*t + q^3*t + q^4*t^2")


def test_nz_cusp_free_examples():
    assert nz_cusp_free(1, 1) == ONE + Q * T * T
    assert nz_cusp_free(2, 0) == ONE
    for m in (1, 2):
        for d in (1, 2, 3):
            assert nz_cusp_free(m, d) == nz_cusp_normalization(m, d).substitute(Q, T * T)


def test_nz_node_normalization_examples():
    assert nz_node_normalization(1, 1) == parse_poly("1 - t + q*t")
    assert nz_node_normalization(3, 0) == ONE
    assert nz_node_normalization(1, 2) == parse_poly(
        "1 - t - q*t + q^2*t + q^3*t + q*t^2 - q^2*t^2 - q^3*t^2 + q^4*t^2")


def test_nz_node_free_examples():
    assert nz_node_free(1, 1) == parse_poly("1 - t + q*t^2")
    assert nz_node_free(2, 1) == parse_poly("1 - t + q*t^2 - q*t^3 + q^2*t^4")
    assert nz_node_free(3, 0) == ONE


def test_degree_bound():
    for kind in ("cusp", "node"):
        for m in (1, 2, 3):
            fam = SingularityFamily(kind, m)
            for d in (1, 2, 3):
                for module in ("free", "normalization"):
                    assert nz(fam, d, module).t_degree() <= fam.degree_bound(d)


def test_full_z_geometric():
    coeffs = full_z(ONE, 1, 1, 3)
    assert coeffs == [ONE, ONE, ONE]


def test_full_z_solomon_d2():
    coeffs = full_z(ONE, 1, 2, 3)
    assert coeffs == [ONE, ONE + Q, parse_poly("1 + q + q^2")]


def test_full_z_node():
    # (1 - t + q t^2)/(1-t)^2 = (1 - t + q t^2) * sum (k+1) t^k
    #                         = 1 + t + (1+q) t^2 + (1+2q) t^3 + ...
    coeffs = full_z(nz_node_free(1, 1), 2, 1, 4)
    assert coeffs == [ONE, ONE, ONE + Q, ONE + 2 * Q]


def test_full_z_nonnegative_coefficients():
    for kind in ("cusp", "node"):
        for m in (1, 2):
            fam = SingularityFamily(kind, m)
            for d in (1, 2):
                for module in ("free", "normalization"):
                    for c in full_z(nz(fam, d, module), fam.s, d, 5):
                        assert all(v >= 0 for v in c.terms.values())


def test_funceq_examples():
    assert funceq_check(SingularityFamily("node", 1), 1).passed
    assert funceq_check(SingularityFamily("cusp", 1), 1).passed
    assert funceq_check(SingularityFamily("node", 3), 0).passed


def test_funceq_mutation_detected():
    # note q*t itself is a fixed point of the d=1 involution, so bump the
    # constant term instead: its mirror is the t^2 coefficient
    fam = SingularityFamily("node", 1)
    corrupted = nz_node_free(1, 1) + ONE
    report = funceq_report(corrupted, fam, 1, label="mutated")
    assert report.status == "fail"
    assert report.discrepancy is not None


def test_specialize_examples():
    assert specialize(nz_node_free(1, 2), "t_eq_1") == LaurentPoly2.monomial(1, 4, 0)
    assert specialize(nz_cusp_free(1, 1), "lambda_eq_1") == ONE + T * T
    assert specialize(nz_node_free(1, 1), "lambda_eq_1") == parse_poly("1 - t + t^2")
    with pytest.raises(ValueError):
        specialize(ONE, "q_eq_2")


def test_node_t1_both_modules():
    for m in (1, 2, 3):
        for d in (1, 2, 3):
            want = LaurentPoly2.monomial(1, m * d * d, 0)
            assert specialize(nz_node_free(m, d), "t_eq_1") == want
            assert specialize(nz_node_normalization(m, d), "t_eq_1") == want


def test_specialization_report():
    assert specialization_report(SingularityFamily("node", 2), 2).passed
    assert specialization_report(SingularityFamily("cusp", 2), 2).passed


def test_remark_t2_vs_qt_differ_at_d2():
    # the two changes of variable agree at d=1 but not at d=2
    norm = nz_cusp_normalization(1, 1)
    assert norm.substitute(Q, T * T) == norm.substitute(Q * T, T)
    norm2 = nz_cusp_normalization(1, 2)
    assert norm2.substitute(Q, T * T) != norm2.substitute(Q * T, T)


def test_skew_cauchy_examples():
    assert skew_cauchy_bounded_check(1, 1).passed
    assert skew_cauchy_bounded_check(1, 2).passed
    assert skew_cauchy_bounded_check(3, 2).passed


def test_cusp_t2_check():
    assert cusp_t2_check(3, 4).passed


def test_node22_closed_form():
    assert node22_closed_form(0) == ONE
    assert node22_closed_form(1) == parse_poly("1 - t + q*t^2")
    for d in range(6):
        assert node22_check(d).passed


def test_m_limit():
    rep = m_limit_check("node", 1, 4, 5)
    assert rep.passed
    assert m_limit_check("cusp", 1, 4, 5).passed
    assert m_limit_check("node", 2, 3, 4).passed
    # d=0: both sides are 1
    assert m_limit_check("node", 0, 3, 3).passed


def test_positivity_scan():
    assert positivity_scan("node", 1, 1).passed
    assert positivity_scan("node", 2, 1).passed
    assert positivity_scan("cusp", 1, 2).passed
    assert positivity_scan("node", 2, 2).passed
