"""Cohen-Lenstra series for the y^2 = x^n germs, rank conversions, and limits.

Everything lives in Z[[u,t]] with u = 1/q.  The numerator NZ-hat of the CL
series is

    cusp: sum over mu with parts <= m of t^{2|mu|} / a(mu),
    node: (ut;u)_inf^2 * sum over mu <= lam, lam_1 <= m of
          g^lam_mu(q) (u;u)_{lam'_m} t^{2|lam|-|mu|}
          / (a(lam) (u;u)_{mu'_m} (ut;u)^2_{lam'_m}),

where 1/a(lam) = u^{sum lam'_i^2} prod 1/(u;u)_{lam'_i - lam'_{i+1}}.  Each
node term is u-positive: deg_q g^lam_mu = sum mu'_i(lam'_i - mu'_i) is
dominated by the u^{sum lam'_i^2} prefactor, asserted during assembly.  The
full series is the numerator times 1/(ut;u)_inf^s.

Rank-conversion identities (intermediates are Laurent in u, carried by
LaurentSeriesUT with its precision bookkeeping):

    (A) Z_{R^d}(t)      = sum_r [d r]_q t^r Z_{mR^r}(q^{d-r} t)
    (B) t^d Z_{mR^d}(t) = (u;u)_d sum_r (-1)^{d-r} u^{C(d-r,2)} / ((u;u)_{d-r}
                          (u;u)_r) * Z_{R^r}(q^{d-r} t)
    (C) Zhat(t)         = sum_D t^D u^{D^2}/(u;u)_D Z_{mR^D}(u^D t)
    (D) Zhat(t)         = sum_D sum_{r<=D} (-1)^{D-r} u^{C(D-r,2)}/((u;u)_{D-r}
                          (u;u)_r) * Z_{R^r}(u^r t),  inner sum in t^D Z[[u,t]]

using q^l/(q;q)_l = (-1)^l u^{l(l-1)/2}/(u;u)_l.
"""

from .laurent import LaurentPoly2, ONE, qbinomial, qpoch_qinv
from .partitions import Partition, iterate_bounded_parts
from .quotzeta import SingularityFamily, nz, full_z
from .hall import hall_skew
from .report import (VerificationReport, compare_report, timed,
                     BudgetExceededError)
from .series import TruncSeries2, LaurentSeriesUT, poch_inf, inv_qpoch_u


class ClSeries:
    """A Cohen-Lenstra numerator and full series on a common window."""

    def __init__(self, kind, m, numerator, s):
        if numerator.coeffs.get((0, 0)) != 1:
            raise AssertionError("CL numerator must have constant term 1")
        self.kind = kind
        self.m = m
        self.numerator = numerator
        self.full = numerator * poch_inf(1, 1, numerator.u_prec, numerator.t_prec).inverse() ** s
        self.u_prec = numerator.u_prec
        self.t_prec = numerator.t_prec


def _lift(tfree, t_prec):
    """View a t-free series on a taller window."""
    return TruncSeries2(tfree.u_prec, t_prec, tfree.coeffs)


def _to_u_trunc(p, shift, u_prec, t_prec):
    """u^shift * p(q -> 1/u) on the window; the result must be u-positive."""
    out = {}
    for (a, b), c in p.terms.items():
        i = shift - a
        if i < 0 or b < 0:
            raise AssertionError("negative exponent after u-shift")
        if i < u_prec and b < t_prec:
            out[(i, b)] = c
    return TruncSeries2(u_prec, t_prec, out)


def cl_cusp(m, u_prec, t_prec):
    """CL numerator/series for the cusp y^2 = x^{2m+1}."""
    total = TruncSeries2(u_prec, t_prec)
    for mu in iterate_bounded_parts(m, (t_prec - 1) // 2):
        conj = mu.conjugate().parts
        order = sum(c * c for c in conj)
        if order >= u_prec:
            continue
        term = TruncSeries2.monomial(1, order, 2 * mu.size(), u_prec, t_prec)
        for i, c in enumerate(conj):
            gap = c - (conj[i + 1] if i + 1 < len(conj) else 0)
            term = term * _lift(inv_qpoch_u(gap, u_prec), t_prec)
        total = total + term
    return ClSeries("cusp", m, total, s=1)


def cl_node(m, u_prec, t_prec):
    """CL numerator/series for the node y^2 = x^{2m}."""
    outer = poch_inf(1, 1, u_prec, t_prec) ** 2
    total = TruncSeries2(u_prec, t_prec)
    for lam in iterate_bounded_parts(m, t_prec - 1):
        lam_conj = lam.conjugate().parts
        sum_sq = sum(c * c for c in lam_conj)
        lam_m = lam.conj_part(m)
        poch_lam_m = qpoch_qinv(lam_m)
        inv_a_tail = TruncSeries2.one(u_prec, t_prec)
        for i, c in enumerate(lam_conj):
            gap = c - (lam_conj[i + 1] if i + 1 < len(lam_conj) else 0)
            inv_a_tail = inv_a_tail * _lift(inv_qpoch_u(gap, u_prec), t_prec)
        inv_ut_sq = _inv_ut_poch(lam_m, u_prec, t_prec) ** 2
        for mu in _subpartitions(lam):
            t_order = 2 * lam.size() - mu.size()
            if t_order >= t_prec:
                continue
            mu_conj = mu.conjugate().parts
            min_order = sum_sq - sum(mc * (lc - mc) for lc, mc in zip(lam_conj, mu_conj))
            if min_order >= u_prec:
                continue
            exact = hall_skew(lam, mu) * poch_lam_m
            if exact.is_zero():
                continue
            term = _to_u_trunc(exact, sum_sq, u_prec, t_prec)
            term = term * inv_a_tail
            term = term * _lift(inv_qpoch_u(mu.conj_part(m), u_prec), t_prec)
            term = term * inv_ut_sq
            total = total + term * TruncSeries2.monomial(1, 0, t_order, u_prec, t_prec)
    return ClSeries("node", m, outer * total, s=2)


def cl_series(kind, m, u_prec, t_prec):
    return cl_cusp(m, u_prec, t_prec) if kind == "cusp" else cl_node(m, u_prec, t_prec)


def _subpartitions(lam):
    rows = lam.parts

    def rec(i, prefix):
        if i == len(rows):
            yield Partition(prefix)
            return
        cap = min(rows[i], prefix[-1]) if prefix else rows[i]
        for p in range(0, cap + 1):
            yield from rec(i + 1, prefix + (p,))

    yield from rec(0, ())


def _inv_ut_poch(n, u_prec, t_prec):
    """1/(ut;u)_n = 1/prod_{k=1}^n (1 - u^k t) on the window."""
    poly = ONE
    for k in range(1, n + 1):
        poly = poly * (ONE - LaurentPoly2.monomial(1, -k, 1))
    return _to_u_trunc(poly, 0, u_prec, t_prec).inverse()


# -- full Quot zeta helpers ----------------------------------------------------


def z_series(kind, m, d, t_prec, module="free"):
    """Z_{R^d} (or the normalization's) as a t-list of pure-q polynomials."""
    fam = SingularityFamily(kind, m)
    return full_z(nz(fam, d, module), fam.s, d, t_prec)


def _z_to_ls(z_list, t_prec):
    """Exact Laurent-series view of a t-list of q-polynomial coefficients."""
    coeffs = {}
    for j, poly in enumerate(z_list[:t_prec]):
        for (a, b), c in poly.terms.items():
            if b:
                raise ValueError("Z coefficients must be pure q-polynomials")
            coeffs[(-a, j)] = c
    return LaurentSeriesUT(t_prec, coeffs)


# -- rank conversion identities ---------------------------------------------------


def convert_rank(z_list, direction, u_prec, t_prec):
    """Apply one of the four conversion identities; Laurent-tolerant output.

    z_list holds per-rank inputs: full-Z t-lists (either lists of pure-q
    LaurentPoly2 or LaurentSeriesUT).  Directions:

      quot_to_mhilb: inputs Z_{R^r}, r = 0..d   -> Z_{mR^d} via (B)
      mhilb_to_quot: inputs Z_{mR^r}, r = 0..d  -> Z_{R^d} via (A)
      cl_from_mhilb: inputs Z_{mR^r}, r < t_prec -> Zhat via (C)
      cl_from_quot:  inputs Z_{R^r},  r < t_prec -> Zhat via (D)

    For quot_to_mhilb the inputs must extend to t-degree t_prec + d; d is
    inferred as len(z_list) - 1 for the first two directions.
    """
    ls = [x if isinstance(x, LaurentSeriesUT) else _z_to_ls(x, _len_of(x)) for x in z_list]
    if direction == "mhilb_to_quot":
        d = len(ls) - 1
        total = LaurentSeriesUT(t_prec)
        for r, zr in enumerate(ls):
            if zr.t_prec < t_prec - r:
                raise ValueError("rank %d input too short in t" % r)
            part = zr.subst_t_times_upow(-(d - r))
            pref = LaurentSeriesUT.from_laurent(
                qbinomial(d, r) * LaurentPoly2.monomial(1, 0, r), t_prec)
            total = total + pref * _cap_t(part, t_prec)
        return total
    if direction == "quot_to_mhilb":
        d = len(ls) - 1
        inner_t = t_prec + d
        total = LaurentSeriesUT(inner_t)
        for r, zr in enumerate(ls):
            if zr.t_prec < inner_t:
                raise ValueError("rank %d input too short in t (need %d)" % (r, inner_t))
            l = d - r
            exact = _cap_t(zr, inner_t).subst_t_times_upow(-l)
            sign = -1 if l % 2 else 1
            exact = exact.shift(l * (l - 1) // 2) * sign
            exact = LaurentSeriesUT.from_laurent(_qpoch_u_poly(d), inner_t) * exact
            low = exact.min_u_exp()
            need = u_prec + max(0, -int(low) if low != float("inf") else 0)
            series = LaurentSeriesUT.from_trunc(
                _series_prod(inv_qpoch_u(l, need), inv_qpoch_u(r, need)), inner_t)
            total = total + exact * series
        return _drop_t_power(total, d, u_prec)
    if direction == "cl_from_mhilb":
        total = LaurentSeriesUT(t_prec)
        for D, zD in enumerate(ls):
            if D >= t_prec:
                break
            if zD.t_prec + D < t_prec:
                raise ValueError("rank %d input too short in t (need %d)" % (D, t_prec - D))
            part = zD.subst_t_times_upow(D).shift(D * D, D)
            low = part.min_u_exp()
            need = u_prec + max(0, -int(low) if low != float("inf") else 0)
            series = LaurentSeriesUT.from_trunc(inv_qpoch_u(D, need), t_prec)
            total = total + _cap_t(part, t_prec) * series
        return total
    if direction == "cl_from_quot":
        total = LaurentSeriesUT(t_prec)
        prepared = []
        for r, zr in enumerate(ls):
            if r >= t_prec:
                break
            if zr.t_prec < t_prec:
                raise ValueError("rank %d input too short in t (need %d)" % (r, t_prec))
            prepared.append(_cap_t(zr.subst_t_times_upow(r), t_prec))
        for D in range(min(t_prec, len(prepared))):
            inner = LaurentSeriesUT(t_prec)
            for r in range(D + 1):
                l = D - r
                sign = -1 if l % 2 else 1
                part = prepared[r].shift(l * (l - 1) // 2) * sign
                low = part.min_u_exp()
                need = u_prec + max(0, -int(low) if low != float("inf") else 0)
                series = LaurentSeriesUT.from_trunc(
                    _series_prod(inv_qpoch_u(l, need), inv_qpoch_u(r, need)), t_prec)
                inner = inner + part * series
            _assert_t_divisible(inner, D, u_prec)
            total = total + inner
        return total
    raise ValueError("unknown direction %r" % direction)


def _len_of(x):
    return len(x)


def _cap_t(ls, t_prec):
    if t_prec > ls.t_prec:
        raise ValueError("cannot enlarge a t-window (have %d, want %d)" % (ls.t_prec, t_prec))
    return LaurentSeriesUT(t_prec, ls.coeffs, u_hi=ls.u_hi)


def _qpoch_u_poly(n):
    """(u;u)_n as an exact q-Laurent polynomial (in the q slot, exponents <= 0)."""
    return qpoch_qinv(n)


def _series_prod(a, b):
    return a * b


def _drop_t_power(ls, d, u_prec):
    """Divide by t^d, asserting the low t-coefficients vanish where known."""
    for (i, j), c in ls.coeffs.items():
        if j < d and c and (ls.u_hi is None or i < ls.u_hi) and i < u_prec:
            raise AssertionError("expected divisibility by t^%d, found t^%d" % (d, j))
    out = {(i, j - d): c for (i, j), c in ls.coeffs.items() if j >= d}
    return LaurentSeriesUT(ls.t_prec - d, out, u_hi=ls.u_hi)


def _assert_t_divisible(ls, d, u_prec):
    for (i, j), c in ls.coeffs.items():
        if j < d and c and i < u_prec:
            raise AssertionError("inner sum not divisible by t^%d" % d)


def extract_polynomial_coefficients(ls, u_prec):
    """Exact q-polynomial t-coefficients of a Laurent-tolerant series.

    Valid when the series is a priori a polynomial-coefficient object (the
    conversion identities guarantee this); asserts that every positive
    u-exponent visible on the window has cancelled, then drops the unknown
    region.  Returns a list of pure-q LaurentPoly2 plus the exact view.
    """
    hi = ls.u_hi if ls.u_hi is not None else u_prec
    bad = sorted(k for k, c in ls.coeffs.items() if 0 < k[0] < min(hi, u_prec) and c)
    if bad:
        raise AssertionError("uncancelled positive u-exponents at %s" % (bad[:5],))
    out = [LaurentPoly2() for _ in range(ls.t_prec)]
    for (i, j), c in ls.coeffs.items():
        if i <= 0:
            out[j] = out[j] + LaurentPoly2.monomial(c, -i, 0)
    return out


# -- rank -> infinity limit -------------------------------------------------------


def scaled_z_trunc(kind, m, d, u_prec, t_prec):
    """Z_{R^d}(u^d t) on the window, asserting nonnegative u-exponents."""
    fam = SingularityFamily(kind, m)
    nz_ls = LaurentSeriesUT.from_laurent(nz(fam, d, "free"), t_prec).subst_t_times_upow(d)
    if nz_ls.min_u_exp() < 0:
        raise AssertionError("NZ(u^d t) has a negative u-exponent")
    prod = nz_ls
    for j in range(1, d + 1):
        factor = LaurentSeriesUT(t_prec, {(0, 0): 1, (j, 1): -1})
        prod = prod * (factor.inverse() ** fam.s)
    return prod.to_trunc(u_prec, t_prec, what="Z(u^d t)")


def limit_check(kind, m, d_list, u_prec, t_prec):
    """Thm-level rank limit: consecutive d agree and match the CL series."""
    if len(d_list) < 2:
        raise ValueError("need at least two ranks")
    with timed() as tm:
        scaled = [scaled_z_trunc(kind, m, d, u_prec, t_prec) for d in d_list]
        for a, b in zip(scaled, scaled[1:]):
            equal, window, disc = a.agrees_with(b)
            if not equal:
                return VerificationReport(
                    "limit", {"kind": kind, "m": m, "d_list": tuple(d_list)},
                    "fail", lhs=str(a), rhs=str(b), discrepancy=disc,
                    wall_time=tm.elapsed, detail="consecutive ranks disagree")
        cl = cl_series(kind, m, u_prec, t_prec)
        equal, window, disc = scaled[-1].agrees_with(cl.full)
    if equal:
        return VerificationReport("limit", {"kind": kind, "m": m, "d_list": tuple(d_list),
                                            "window": window}, "pass", wall_time=tm.elapsed)
    return VerificationReport("limit", {"kind": kind, "m": m, "d_list": tuple(d_list)},
                              "fail", lhs=str(scaled[-1]), rhs=str(cl.full),
                              discrepancy=disc, wall_time=tm.elapsed,
                              detail="stable value differs from CL series")


# -- matrix-pair counting ----------------------------------------------------------


def matrix_count_formula(n):
    """#{(A,B): AB=BA, A^2=B^3} over F_q as a polynomial in q:

    sum_{j<=n/2} (-1)^j q^{(3j^2-j)/2 + n(n-2j)} (q;q)_n / ((q;q)_j (q;q)_{n-2j}).
    """
    total = LaurentPoly2()
    for j in range(n // 2 + 1):
        sign = -1 if j % 2 else 1
        e = (3 * j * j - j) // 2 + n * (n - 2 * j)
        ratio = qbinomial(n, j)
        for i in range(n - 2 * j + 1, n - j + 1):
            ratio = ratio * (ONE - LaurentPoly2.monomial(1, i, 0))
        total = total + LaurentPoly2.monomial(sign, e, 0) * ratio
    return total


# -- special values -----------------------------------------------------------------


def andrews_gordon_product(m, u_prec):
    """prod over n not congruent to 0, +-(m+1) mod 2m+3 of 1/(1-u^n)."""
    mod = 2 * m + 3
    excluded = {0, (m + 1) % mod, (m + 2) % mod}
    poly = TruncSeries2.one(u_prec, 1)
    for n in range(1, u_prec):
        if n % mod not in excluded:
            poly = poly * (TruncSeries2.one(u_prec, 1) - TruncSeries2.monomial(1, n, 0, u_prec, 1))
    return poly.inverse()


def node_minus1_product(m, u_prec):
    """(u^2;u^2)inf (u^{m+1};u^{m+1})inf^2 / ((u;u)inf^2 (u^{2m+2};u^{2m+2})inf)."""
    def poch(step):
        return poch_inf(step, 0, u_prec, 1, step=step)

    num = poch(2) * poch(m + 1) ** 2
    den = poch(1) ** 2 * poch(2 * m + 2)
    return num * den.inverse()


def _eval_pm_one(kind, m, sign, u_prec, t_start=8, t_cap=2048):
    """NZ-hat(+-1) as the u-adic limit of partial sums, doubling t_prec."""
    prev = None
    t_prec = t_start
    while t_prec <= t_cap:
        numerator = cl_series(kind, m, u_prec, t_prec).numerator
        acc = {}
        for (i, j), c in numerator.coeffs.items():
            v = c if (sign > 0 or j % 2 == 0) else -c
            acc[(i, 0)] = acc.get((i, 0), 0) + v
        val = TruncSeries2(u_prec, 1, acc)
        if prev is not None and val == prev:
            return val, t_prec
        prev = val
        t_prec *= 2
    raise BudgetExceededError("t=%+d evaluation did not stabilize below t_prec=%d"
                              % (sign, t_cap), progress=(u_prec, t_cap))


def special_values(kind, m, u_prec):
    """The t = +-1 identities for NZ-hat; conjecture-level ones are 'reported'."""
    reports = []
    with timed() as tm:
        if kind == "cusp":
            target = andrews_gordon_product(m, u_prec)
            for sign in (1, -1):
                val, used_t = _eval_pm_one(kind, m, sign, u_prec)
                reports.append(compare_report(
                    "special-cusp-AG", {"m": m, "t": sign, "u_prec": u_prec,
                                        "t_prec_used": used_t}, val, target))
        else:
            val, used_t = _eval_pm_one(kind, m, 1, u_prec)
            reports.append(compare_report(
                "special-node-plus1", {"m": m, "u_prec": u_prec, "t_prec_used": used_t},
                val, TruncSeries2.one(u_prec, 1)))
            val, used_t = _eval_pm_one(kind, m, -1, u_prec)
            reports.append(compare_report(
                "special-node-minus1", {"m": m, "u_prec": u_prec, "t_prec_used": used_t},
                val, node_minus1_product(m, u_prec), conjectural=(m >= 2)))
    for r in reports:
        r.wall_time = tm.elapsed / max(1, len(reports))
    return reports
