"""Closed-form Quot zeta numerators for the y^2 = x^n curve germs.

The cusp family is y^2 = x^(2m+1) (one branch), the node family y^2 = x^(2m)
(two branches).  NZ denotes the numerator of the rank-d Quot zeta function,
i.e. Z times (t;q)_d^s; it is a polynomial in Z[q,t].  The formulas sum Hall
polynomials over partitions in the d-by-m box:

    cusp, normalization:  sum_mu g_mu(q) (q^d t)^|mu|
    cusp, free:           the same with t -> t^2
    node, normalization:  sum_mu g_mu(q) (q^d t)^|mu| (1/q;1/q)_d/(1/q;1/q)_{d-mu'_1}
    node, free:           sum_{mu <= lam} g_lam(q) g^lam_mu(q) (t;q)^2_{d-lam'_m}
                              t^|lam| (q^d t)^{|lam|-|mu|}
                              (1/q;1/q)_{lam'_m}/(1/q;1/q)_{mu'_m}

with g_mu = hall_box(m,d,mu).  Everything is assembled division-free and
asserted to land in Z[q,t].
"""

from .laurent import (LaurentPoly2, ZERO, ONE, Q, T, qpochhammer,
                      qbinomial, qpoch_qinv_ratio)
from .hall import hall_box, hall_skew
from .partitions import iterate_box
from .report import VerificationReport, compare_report, timed
from .series import TruncSeries2


class SingularityFamily:
    """One of the two y^2 = x^n germ families, with its derived constants.

    s is the branching number, delta the Serre invariant, and c the conductor
    colength (summed over branches).
    """

    def __init__(self, kind, m):
        if kind not in ("cusp", "node"):
            raise ValueError("kind must be 'cusp' or 'node'")
        if m < 1:
            raise ValueError("m must be >= 1")
        self.kind = kind
        self.m = m

    @property
    def s(self):
        return 1 if self.kind == "cusp" else 2

    @property
    def delta(self):
        return self.m

    @property
    def conductor_colength(self):
        # per-branch colength 2m in both presentations
        return 2 * self.m * self.s

    def degree_bound(self, d):
        return (2 * self.conductor_colength + self.s) * d

    def __str__(self):
        n = 2 * self.m + (1 if self.kind == "cusp" else 0)
        return "%s(m=%d, y^2=x^%d)" % (self.kind, self.m, n)

    __repr__ = __str__


_NZ_CACHE = {}


def nz_cusp_normalization(m, d):
    """NZ of the rank-d normalization module over the cusp germ."""
    key = ("cusp-norm", m, d)
    if key not in _NZ_CACHE:
        total = ZERO
        for mu in iterate_box(m, d):
            total = total + hall_box(m, d, mu) * LaurentPoly2.monomial(1, d * mu.size(), mu.size())
        _NZ_CACHE[key] = _check_poly(total)
    return _NZ_CACHE[key]


def nz_cusp_free(m, d):
    """NZ of the free rank-d module over the cusp germ: the t -> t^2 image."""
    key = ("cusp-free", m, d)
    if key not in _NZ_CACHE:
        _NZ_CACHE[key] = nz_cusp_normalization(m, d).substitute(Q, T * T)
    return _NZ_CACHE[key]


def nz_node_normalization(m, d):
    """NZ of the rank-d normalization module over the node germ."""
    key = ("node-norm", m, d)
    if key not in _NZ_CACHE:
        total = ZERO
        for mu in iterate_box(m, d):
            term = hall_box(m, d, mu) * LaurentPoly2.monomial(1, d * mu.size(), mu.size())
            total = total + term * qpoch_qinv_ratio(d, mu.conj_part(1))
        _NZ_CACHE[key] = _check_poly(total)
    return _NZ_CACHE[key]


def nz_node_free(m, d):
    """NZ of the free rank-d module over the node germ (two-index Hall sum)."""
    key = ("node-free", m, d)
    if key not in _NZ_CACHE:
        total = ZERO
        for lam in iterate_box(m, d):
            glam = hall_box(m, d, lam)
            lam_m = lam.conj_part(m)
            poch2 = qpochhammer(T, Q, d - lam_m) ** 2
            for mu in iterate_box(lam.part(1) if lam.parts else 0, lam.length()):
                if not lam.contains(mu):
                    continue
                gskew = hall_skew(lam, mu)
                k = lam.size() - mu.size()
                term = (glam * gskew * poch2
                        * LaurentPoly2.monomial(1, d * k, lam.size() + k))
                ratio = _qinv_ratio_range(mu.conj_part(m), lam_m)
                total = total + term * ratio
        _NZ_CACHE[key] = _check_poly(total)
    return _NZ_CACHE[key]


def _qinv_ratio_range(lo, hi):
    """(1/q;1/q)_hi / (1/q;1/q)_lo as prod_{j=lo+1}^{hi} (1 - q^-j)."""
    result = ONE
    for j in range(lo + 1, hi + 1):
        result = result * (ONE - LaurentPoly2.monomial(1, -j, 0))
    return result


def _check_poly(p):
    if not p.is_polynomial():
        raise AssertionError("numerator left Z[q,t]")
    return p


def nz(family, d, module="free"):
    """Dispatch to the four closed forms."""
    if module not in ("free", "normalization"):
        raise ValueError("module must be 'free' or 'normalization'")
    if family.kind == "cusp":
        return nz_cusp_free(family.m, d) if module == "free" else nz_cusp_normalization(family.m, d)
    return nz_node_free(family.m, d) if module == "free" else nz_node_normalization(family.m, d)


# -- full zeta function ------------------------------------------------------


def full_z(nz_poly, s, d, t_prec):
    """Z = NZ / (t;q)_d^s as a t-series with pure-q polynomial coefficients.

    Returns the list of t^0..t^(t_prec-1) coefficients.  Each is a point count,
    so it must be a polynomial in q with nonnegative coefficients; asserted.
    """
    denom = (qpochhammer(T, Q, d) ** s).t_coefficients()
    inv = [ONE]
    for k in range(1, t_prec):
        acc = ZERO
        for j in range(1, k + 1):
            if j in denom:
                acc = acc + denom[j] * inv[k - j]
        inv.append(-acc)
    nz_coeffs = nz_poly.t_coefficients()
    out = []
    for k in range(t_prec):
        acc = ZERO
        for j, c in nz_coeffs.items():
            if j <= k:
                acc = acc + c * inv[k - j]
        if any(v < 0 or a < 0 for (a, _), v in acc.terms.items()):
            raise AssertionError("Quot coefficient is not a point-count polynomial")
        out.append(acc)
    return out


# -- verification operations ---------------------------------------------------


def funceq_report(nz_poly, family, d, label=""):
    """Functional equation NZ(t) = (q^{d^2} t^{2d})^delta NZ(q^-d t^-1), exactly."""
    delta = family.delta
    flipped = nz_poly.substitute(Q, LaurentPoly2.monomial(1, -d, -1))
    rhs = LaurentPoly2.monomial(1, d * d * delta, 2 * d * delta) * flipped
    return compare_report("funceq", {"family": family.kind, "m": family.m, "d": d,
                                     "which": label or "free"},
                          nz_poly, rhs)


def funceq_check(family, d):
    return funceq_report(nz(family, d, "free"), family, d)


def specialize(nz_poly, mode):
    """Exact specialization at t=1 (mode 't_eq_1') or q=1 (mode 'lambda_eq_1')."""
    if mode == "t_eq_1":
        return nz_poly.substitute(Q, ONE)
    if mode == "lambda_eq_1":
        return nz_poly.substitute(ONE, T)
    raise ValueError("mode must be 't_eq_1' or 'lambda_eq_1'")


def specialization_report(family, d):
    """t=1 and q=1 values against their closed forms.

    t=1: both node numerators equal q^{m d^2}; the cusp value is m-independent
    of the module only through the t->t^2 squaring, so only its q=1 form is
    pinned: (sum_{i<=m} t^{2i})^d for the cusp, (sum_{i<=2m} (-t)^i)^d for the
    node.
    """
    m = family.m
    checks = []
    if family.kind == "node":
        target = LaurentPoly2.monomial(1, m * d * d, 0)
        for module in ("free", "normalization"):
            got = specialize(nz(family, d, module), "t_eq_1")
            checks.append((("t=1", module), got, target))
        one_sum = sum((LaurentPoly2.monomial((-1) ** i, 0, i) for i in range(2 * m + 1)), ZERO)
        checks.append((("q=1", "free"), specialize(nz(family, d, "free"), "lambda_eq_1"),
                       one_sum ** d))
    else:
        one_sum = sum((LaurentPoly2.monomial(1, 0, 2 * i) for i in range(m + 1)), ZERO)
        checks.append((("q=1", "free"), specialize(nz(family, d, "free"), "lambda_eq_1"),
                       one_sum ** d))
    with timed() as tm:
        first_bad = None
        for tag, got, want in checks:
            if got != want:
                first_bad = (tag, got, want)
                break
    if first_bad is None:
        return VerificationReport("special", {"family": family.kind, "m": m, "d": d},
                                  "pass", wall_time=tm.elapsed,
                                  detail="%d specializations" % len(checks))
    tag, got, want = first_bad
    from .report import first_discrepancy
    return VerificationReport("special", {"family": family.kind, "m": m, "d": d},
                              "fail", lhs=str(got), rhs=str(want),
                              discrepancy=first_discrepancy(got, want),
                              wall_time=tm.elapsed, detail="at %s/%s" % tag)


def skew_cauchy_bounded_check(m, d):
    """Bounded skew-Cauchy identity, for every mu in the d-by-m box:

    sum_{lam: mu <= lam <= (m^d)} g_lam(q) g^lam_mu(q) t^|lam| (t;q)_{d-lam'_m}
        = g_mu(q) t^|mu|.
    """
    with timed() as tm:
        for mu in iterate_box(m, d):
            lhs = ZERO
            for lam in iterate_box(m, d):
                if not lam.contains(mu):
                    continue
                lhs = lhs + (hall_box(m, d, lam) * hall_skew(lam, mu)
                             * LaurentPoly2.monomial(1, 0, lam.size())
                             * qpochhammer(T, Q, d - lam.conj_part(m)))
            rhs = hall_box(m, d, mu) * LaurentPoly2.monomial(1, 0, mu.size())
            if lhs != rhs:
                from .report import first_discrepancy
                return VerificationReport("squaring", {"m": m, "d": d, "mu": str(mu)},
                                          "fail", lhs=str(lhs), rhs=str(rhs),
                                          discrepancy=first_discrepancy(lhs, rhs),
                                          wall_time=tm.elapsed)
    return VerificationReport("squaring", {"m": m, "d": d}, "pass", wall_time=tm.elapsed)


def cusp_t2_check(m, d):
    """Thm-level identity: free cusp numerator is the normalization one at t^2."""
    lhs = nz_cusp_free(m, d)
    rhs = nz_cusp_normalization(m, d).substitute(Q, T * T)
    return compare_report("t2", {"m": m, "d": d}, lhs, rhs)


def node22_closed_form(d):
    """(2,2)-link closed form sum_r (-1)^r q^C(r,2) t^r [d r]_q (t q^{d-r+1}; q)_r."""
    total = ZERO
    for r in range(d + 1):
        sign = -1 if r % 2 else 1
        term = (LaurentPoly2.monomial(sign, r * (r - 1) // 2, r) * qbinomial(d, r)
                * qpochhammer(LaurentPoly2.monomial(1, d - r + 1, 1), Q, r))
        total = total + term
    return total


def node22_check(d):
    return compare_report("node22", {"d": d}, node22_closed_form(d), nz_node_free(1, d))


def m_limit_closed_form(kind, d, q_prec, t_prec):
    """The m -> infinity limit series in Z[[q,t]].

    node: (t;q)_d / (q^d t^2;q)_d;  cusp: 1 / (q^d t^2;q)_d.
    """
    denom = TruncSeries2.from_laurent(
        qpochhammer(LaurentPoly2.monomial(1, d, 2), Q, d), q_prec, t_prec, var="q")
    if kind == "node":
        num = TruncSeries2.from_laurent(qpochhammer(T, Q, d), q_prec, t_prec, var="q")
        return num * denom.inverse()
    return denom.inverse()


def m_limit_check(kind, d, q_prec, t_prec, m_cap=12):
    """Stabilization of nz_*_free in m, and match with the closed-form limit."""
    free = nz_node_free if kind == "node" else nz_cusp_free
    target = m_limit_closed_form(kind, d, q_prec, t_prec)
    with timed() as tm:
        stable_at = None
        for m in range(1, m_cap):
            a = TruncSeries2.from_laurent(free(m, d), q_prec, t_prec, var="q")
            b = TruncSeries2.from_laurent(free(m + 1, d), q_prec, t_prec, var="q")
            if a == b:
                stable_at = m
                break
        if stable_at is None:
            return VerificationReport("mlimit", {"kind": kind, "d": d},
                                      "fail", discrepancy=(q_prec, t_prec),
                                      wall_time=tm.elapsed,
                                      detail="no stabilization up to m=%d" % m_cap)
        equal, window, disc = a.agrees_with(target)
    status = "pass" if equal else "fail"
    return VerificationReport("mlimit",
                              {"kind": kind, "d": d, "window": window},
                              status, lhs=str(a), rhs=str(target),
                              discrepancy=disc, wall_time=tm.elapsed,
                              detail="stable from m=%d" % stable_at)


def positivity_scan(family, m, d):
    """Diagnostic: coefficients of NZ_free(-t) should be nonnegative."""
    with timed() as tm:
        fam = SingularityFamily(family, m) if isinstance(family, str) else family
        flipped = nz(fam, d, "free").substitute(Q, -T)
        bad = sorted(k for k, v in flipped.terms.items() if v < 0)
    if bad:
        return VerificationReport("positivity", {"family": fam.kind, "m": fam.m, "d": d},
                                  "reported", lhs=str(flipped),
                                  discrepancy=bad[0], wall_time=tm.elapsed,
                                  detail="negative coefficients at %s" % (bad[:5],))
    return VerificationReport("positivity", {"family": fam.kind, "m": fam.m, "d": d},
                              "pass", wall_time=tm.elapsed)
