"""Truncated bivariate power series in (u, t), u = 1/q, and q-series primitives.

TruncSeries2 stores coefficients on an explicit rectangular window
0 <= i < u_prec, 0 <= j < t_prec; arithmetic never claims anything outside the
window and comparisons of mismatched windows use the intersection.  The module
also provides infinite Pochhammer products, the basic hypergeometric evaluator,
and an internal Laurent-tolerant series used where exact q-polynomial
coefficients (negative u-exponents) appear in intermediate steps.
"""

from .laurent import LaurentPoly2


class WindowError(ValueError):
    """Raised when a value cannot be represented on the requested window."""


class TruncSeries2:
    """Series in Z[[u,t]] known exactly on a u_prec-by-t_prec window."""

    __slots__ = ("u_prec", "t_prec", "coeffs")

    def __init__(self, u_prec, t_prec, coeffs=None):
        if u_prec < 1 or t_prec < 1:
            raise WindowError("window must be at least 1x1")
        self.u_prec = u_prec
        self.t_prec = t_prec
        c = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                if v and 0 <= i < u_prec and 0 <= j < t_prec:
                    c[(i, j)] = int(v)
        self.coeffs = c

    # -- constructors --------------------------------------------------------

    @staticmethod
    def one(u_prec, t_prec):
        return TruncSeries2(u_prec, t_prec, {(0, 0): 1})

    @staticmethod
    def monomial(c, i, j, u_prec, t_prec):
        return TruncSeries2(u_prec, t_prec, {(i, j): c})

    @staticmethod
    def from_laurent(p, u_prec, t_prec, var="u"):
        """Convert a LaurentPoly2; q-exponent a maps to u-exponent -a.

        With var="q" the first variable is kept as a positive power of q (used
        by the m->infinity checks, which live in Z[[q,t]]).  A conversion that
        would need a negative exponent in the target variable raises.
        """
        out = {}
        for (a, b), c in p.terms.items():
            i = -a if var == "u" else a
            if i < 0:
                raise WindowError("negative %s-exponent in conversion" % var)
            if b < 0:
                raise WindowError("negative t-exponent in conversion")
            if i < u_prec and b < t_prec:
                out[(i, b)] = c
        return TruncSeries2(u_prec, t_prec, out)

    # -- arithmetic ------------------------------------------------------------

    def _window(self, other):
        return min(self.u_prec, other.u_prec), min(self.t_prec, other.t_prec)

    def __add__(self, other):
        up, tp = self._window(other)
        out = {}
        for src in (self.coeffs, other.coeffs):
            for (i, j), v in src.items():
                if i < up and j < tp:
                    out[(i, j)] = out.get((i, j), 0) + v
        return TruncSeries2(up, tp, out)

    def __neg__(self):
        return TruncSeries2(self.u_prec, self.t_prec, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries2(self.u_prec, self.t_prec,
                                {k: other * v for k, v in self.coeffs.items()})
        up, tp = self._window(other)
        out = {}
        for (i1, j1), v1 in self.coeffs.items():
            if i1 >= up or j1 >= tp:
                continue
            for (i2, j2), v2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i < up and j < tp:
                    out[(i, j)] = out.get((i, j), 0) + v1 * v2
        return TruncSeries2(up, tp, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; requires constant term +-1."""
        c0 = self.coeffs.get((0, 0), 0)
        if c0 not in (1, -1):
            raise WindowError("inverse requires constant term +-1, got %r" % c0)
        up, tp = self.u_prec, self.t_prec
        inv = {(0, 0): c0}
        # graded recursion: coefficient at (i,j) depends on strictly smaller i+j
        nonunit = [(k, v) for k, v in self.coeffs.items() if k != (0, 0)]
        for n in range(1, up + tp - 1):
            for i in range(max(0, n - tp + 1), min(n + 1, up)):
                j = n - i
                s = 0
                for (a, b), v in nonunit:
                    w = inv.get((i - a, j - b))
                    if w is not None:
                        s += v * w
                if s:
                    inv[(i, j)] = -c0 * s
        return TruncSeries2(up, tp, inv)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncSeries2.one(self.u_prec, self.t_prec)
        for _ in range(n):
            result = result * self
        return result

    # -- comparison -------------------------------------------------------------

    def truncate(self, u_prec, t_prec):
        if u_prec > self.u_prec or t_prec > self.t_prec:
            raise WindowError("cannot enlarge a window by truncation")
        return TruncSeries2(u_prec, t_prec, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        return (self.u_prec, self.t_prec, self.coeffs) == (other.u_prec, other.t_prec, other.coeffs)

    def agrees_with(self, other):
        """Compare on the window intersection.

        Returns (equal, (u_prec, t_prec), first_discrepancy_or_None).
        """
        up, tp = self._window(other)
        a, b = self.truncate(up, tp), other.truncate(up, tp)
        if a.coeffs == b.coeffs:
            return True, (up, tp), None
        diffs = sorted(k for k in set(a.coeffs) | set(b.coeffs)
                       if a.coeffs.get(k, 0) != b.coeffs.get(k, 0))
        return False, (up, tp), diffs[0]

    def is_one(self):
        return self.coeffs == {(0, 0): 1}

    def t_coefficient(self, j):
        """The t^j coefficient as a dict {u-exponent: int}."""
        return {i: v for (i, jj), v in self.coeffs.items() if jj == j}

    def t_coefficient_orders(self):
        """Minimal u-order of each nonzero t-coefficient, as {j: order}."""
        orders = {}
        for (i, j) in self.coeffs:
            if j not in orders or i < orders[j]:
                orders[j] = i
        return orders

    # -- serialization -------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        from .laurent import _monomial_str
        pieces = []
        for j in range(self.t_prec):
            col = sorted(self.t_coefficient(j).items())
            if not col:
                continue
            neg = col[0][1] < 0
            if neg:
                col = [(i, -v) for i, v in col]
            if len(col) == 1:
                i, v = col[0]
                body = _monomial_str(v, i, j, var="u")
            else:
                inner = []
                for i, v in col:
                    m = _monomial_str(abs(v), i, 0, var="u")
                    inner.append((("- " if v < 0 else "+ ") + m) if inner else
                                 ("-" if v < 0 else "") + m)
                body = "(" + " ".join(inner) + ")"
                if j:
                    body += "*" + ("t" if j == 1 else "t^%d" % j)
            pieces.append(("- " if neg else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + pieces[1:])

    __repr__ = __str__

    def to_json_obj(self):
        return {
            "u_prec": self.u_prec,
            "t_prec": self.t_prec,
            "terms": [[i, j, str(v)] for (i, j), v in sorted(self.coeffs.items())],
        }

    @staticmethod
    def from_json_obj(obj):
        return TruncSeries2(obj["u_prec"], obj["t_prec"],
                            {(i, j): int(v) for i, j, v in obj["terms"]})


# -- infinite Pochhammer products ---------------------------------------------


def poch_inf_info(x_exp_u, x_exp_t, u_prec, t_prec, step=1):
    """(u^a t^b; u^step)_infinity on the window, plus the stabilization index.

    Only factors whose leading monomial lies inside the window are multiplied;
    the returned index is the number of such factors.
    """
    a, b = x_exp_u, x_exp_t
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise WindowError("pochhammer argument must be a nonconstant monomial")
    if step < 1:
        raise WindowError("step must be a positive power of u")
    result = TruncSeries2.one(u_prec, t_prec)
    k = 0
    while b < t_prec and a + k * step < u_prec:
        factor = TruncSeries2.one(u_prec, t_prec) - TruncSeries2.monomial(1, a + k * step, b, u_prec, t_prec)
        result = result * factor
        k += 1
    return result, k


def poch_inf(x_exp_u, x_exp_t, u_prec, t_prec, step=1):
    return poch_inf_info(x_exp_u, x_exp_t, u_prec, t_prec, step)[0]


def qpoch_u(n, u_prec, t_prec=1):
    """(u;u)_n as a TruncSeries2 on the window."""
    result = TruncSeries2.one(u_prec, t_prec)
    for k in range(1, n + 1):
        if k >= u_prec:
            break
        result = result * (TruncSeries2.one(u_prec, t_prec) -
                           TruncSeries2.monomial(1, k, 0, u_prec, t_prec))
    return result


_INV_POCH_CACHE = {}


def inv_qpoch_u(n, u_prec):
    """1/(u;u)_n as a t-free series to the given precision, cached."""
    key = (n, u_prec)
    got = _INV_POCH_CACHE.get(key)
    if got is None:
        got = qpoch_u(n, u_prec).inverse()
        _INV_POCH_CACHE[key] = got
    return got


# -- basic hypergeometric series ------------------------------------------------


def _finite_poch(mono, k, u_prec, t_prec):
    """(x; u)_k for a monomial x = u^a t^b (or x = 0 encoded as None)."""
    if mono is None:
        return TruncSeries2.one(u_prec, t_prec)
    a, b = mono
    result = TruncSeries2.one(u_prec, t_prec)
    for i in range(k):
        result = result * (TruncSeries2.one(u_prec, t_prec) -
                           TruncSeries2.monomial(1, a + i, b, u_prec, t_prec))
    return result


def phi_rs(r, s, upper, lower, z, u_prec, t_prec, max_terms=10000):
    """Basic hypergeometric series r_phi_s with base u, summed on the window.

    Parameters and the argument z are monomials u^a t^b given as (a, b) pairs
    with nonnegative entries, or None for a zero parameter/argument.  Each term
    is ((-1)^k u^C(k,2))^(s+1-r) * prod (a_i;u)_k / ((u;u)_k prod (b_j;u)_k) * z^k;
    summation stops once the term's guaranteed (u,t)-order exits the window.
    """
    if len(upper) != r or len(lower) != s:
        raise ValueError("parameter lists must have lengths r and s")
    e = s + 1 - r
    if e < 0:
        raise WindowError("r > s+1 gives negative u-powers; not summable on a window")
    for mono in upper + lower:
        if mono is not None and (mono[0] < 0 or mono[1] < 0):
            raise WindowError("parameters must be nonnegative monomials")
    for mono in lower:
        if mono == (0, 0):
            raise WindowError("lower parameter 1 makes the denominator non-unit")
    if z is None:
        return TruncSeries2.one(u_prec, t_prec)
    zu, zt = z
    if zu < 0 or zt < 0:
        raise WindowError("argument must be a nonnegative monomial")
    if zu == 0 and zt == 0 and e == 0:
        raise WindowError("term order does not increase; series does not converge on a window")

    total = TruncSeries2(u_prec, t_prec)
    k = 0
    while True:
        u_lb = k * zu + e * (k * (k - 1) // 2)
        t_lb = k * zt
        if u_lb >= u_prec or (zt > 0 and t_lb >= t_prec):
            break
        if k > max_terms:
            raise WindowError("hypergeometric summation exceeded %d terms" % max_terms)
        sign = 1 if (k * e) % 2 == 0 else -1
        term = TruncSeries2.monomial(sign, e * (k * (k - 1) // 2) + k * zu, k * zt, u_prec, t_prec)
        for mono in upper:
            term = term * _finite_poch(mono, k, u_prec, t_prec)
        denom = qpoch_u(k, u_prec, t_prec)
        for mono in lower:
            denom = denom * _finite_poch(mono, k, u_prec, t_prec)
        total = total + term * denom.inverse()
        k += 1
    return total


# -- Laurent-tolerant series (internal) ---------------------------------------


_INF = float("inf")


class LaurentSeriesUT:
    """Series in t (truncated at t_prec) with u-Laurent coefficients.

    Coefficients are exact for u-exponents below `u_hi` (None means exact
    everywhere, i.e. the object is an exact Laurent polynomial in u per
    t-degree).  Multiplication tracks how far exactness survives, the standard
    Laurent-series precision bookkeeping.
    """

    __slots__ = ("coeffs", "t_prec", "u_hi")

    def __init__(self, t_prec, coeffs=None, u_hi=None):
        self.t_prec = t_prec
        self.u_hi = u_hi
        c = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                if v and 0 <= j < t_prec and (u_hi is None or i < u_hi):
                    c[(i, j)] = int(v)
        self.coeffs = c

    @staticmethod
    def from_laurent(p, t_prec):
        """Exact conversion; q-exponent a becomes u-exponent -a."""
        return LaurentSeriesUT(t_prec, {(-a, b): c for (a, b), c in p.terms.items()})

    @staticmethod
    def from_trunc(ts, t_prec=None):
        return LaurentSeriesUT(t_prec if t_prec is not None else ts.t_prec,
                               dict(ts.coeffs), u_hi=ts.u_prec)

    @staticmethod
    def one(t_prec):
        return LaurentSeriesUT(t_prec, {(0, 0): 1})

    def _low(self):
        return min((i for (i, _) in self.coeffs), default=_INF)

    def min_u_exp(self):
        return self._low()

    def __add__(self, other):
        tp = min(self.t_prec, other.t_prec)
        hi = _min_hi(self.u_hi, other.u_hi)
        out = {}
        for src in (self.coeffs, other.coeffs):
            for k, v in src.items():
                out[k] = out.get(k, 0) + v
        return LaurentSeriesUT(tp, out, u_hi=hi)

    def __neg__(self):
        return LaurentSeriesUT(self.t_prec, {k: -v for k, v in self.coeffs.items()}, u_hi=self.u_hi)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentSeriesUT(self.t_prec, {k: other * v for k, v in self.coeffs.items()},
                                   u_hi=self.u_hi)
        tp = min(self.t_prec, other.t_prec)
        # exactness of the product: O(u^hA)*lowB and O(u^hB)*lowA both limit it
        cands = []
        if self.u_hi is not None:
            cands.append(self.u_hi + other._low())
        if other.u_hi is not None:
            cands.append(other.u_hi + self._low())
        hi = min(cands, default=_INF)
        hi = None if hi == _INF else int(hi)
        out = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                j = j1 + j2
                if j >= tp:
                    continue
                i = i1 + i2
                if hi is not None and i >= hi:
                    continue
                out[(i, j)] = out.get((i, j), 0) + v1 * v2
        return LaurentSeriesUT(tp, out, u_hi=hi)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise WindowError("negative powers not supported")
        result = LaurentSeriesUT.one(self.t_prec)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, du, dt=0):
        """Multiply by the monomial u^du t^dt (exact; t-window grows with dt)."""
        if dt < 0:
            raise WindowError("negative t-shift not supported")
        hi = None if self.u_hi is None else self.u_hi + du
        return LaurentSeriesUT(self.t_prec + dt,
                               {(i + du, j + dt): v for (i, j), v in self.coeffs.items()},
                               u_hi=hi)

    def subst_t_times_upow(self, d):
        """The substitution t -> u^d t: (i, j) -> (i + d*j, j), exact shape change."""
        if self.u_hi is not None and d < 0:
            raise WindowError("t-substitution with negative shift on an inexact series")
        hi = self.u_hi  # nonneg shift only improves per-degree exactness
        return LaurentSeriesUT(self.t_prec,
                               {(i + d * j, j): v for (i, j), v in self.coeffs.items()},
                               u_hi=hi)

    def inverse(self):
        """t-adic inverse for exact series with unit constant term.

        Works per t-degree with u-Laurent-polynomial coefficients; requires the
        object to be exact (u_hi None).
        """
        if self.u_hi is not None:
            raise WindowError("inverse implemented for exact series only")
        a = [dict() for _ in range(self.t_prec)]
        for (i, j), v in self.coeffs.items():
            a[j][i] = v
        if a[0] not in ({0: 1}, {0: -1}):
            raise WindowError("inverse requires constant term +-1")
        c0 = a[0][0]
        b = [dict() for _ in range(self.t_prec)]
        b[0] = {0: c0}
        for j in range(1, self.t_prec):
            acc = {}
            for k in range(1, j + 1):
                for i1, v1 in a[k].items():
                    for i2, v2 in b[j - k].items():
                        acc[i1 + i2] = acc.get(i1 + i2, 0) + v1 * v2
            b[j] = {i: -c0 * v for i, v in acc.items() if v}
        out = {(i, j): v for j, col in enumerate(b) for i, v in col.items()}
        return LaurentSeriesUT(self.t_prec, out)

    def t_coefficient_poly(self, j):
        """The t^j coefficient as a pure-q LaurentPoly2 (u-exponent i -> q^-i)."""
        return LaurentPoly2({(-i, 0): v for (i, jj), v in self.coeffs.items() if jj == j})

    def assert_no_positive_u_below(self, bound):
        """Check that no term has u-exponent in (0, bound) (cancellation check)."""
        bad = sorted(k for k in self.coeffs if 0 < k[0] < bound)
        if bad:
            raise AssertionError("uncancelled positive u-exponents at %s" % (bad[:5],))

    def to_trunc(self, u_prec, t_prec, what="series"):
        """Truncate to a TruncSeries2 window, asserting validity.

        Requires exactness at least to u_prec and no negative u-exponents.
        """
        if self.u_hi is not None and self.u_hi < u_prec:
            raise WindowError("%s known only below u^%d, window wants u^%d"
                              % (what, self.u_hi, u_prec))
        if t_prec > self.t_prec:
            raise WindowError("cannot enlarge the t-window")
        neg = sorted(k for k in self.coeffs if k[0] < 0)
        if neg:
            raise WindowError("%s has negative u-exponents, e.g. %s" % (what, neg[:5]))
        return TruncSeries2(u_prec, t_prec, self.coeffs)


def _min_hi(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)
