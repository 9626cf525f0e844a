"""Exact bivariate Laurent polynomials in (q, t) and q-special-function primitives.

A LaurentPoly2 is a sparse dictionary {(e_q, e_t): coeff} with arbitrary-precision
integer coefficients and integer (possibly negative) exponents.  No floating
point is used anywhere; evaluation returns exact Fractions.  The canonical term
order, used by every printed or serialized form, is lexicographic ascending by
(e_q, e_t).
"""

from fractions import Fraction


class UnsupportedSubstitutionError(ValueError):
    """Raised when a substitution image is not a unit monomial."""


class LaurentPoly2:
    """Sparse Laurent polynomial in q and t with integer coefficients.

    Immutable by convention: no method mutates self, and the term dict must not
    be modified after construction.  Zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (eq, et), c in terms.items():
                if c:
                    t[(int(eq), int(et))] = int(c)
        self.terms = t
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c):
        return LaurentPoly2({(0, 0): c})

    @staticmethod
    def monomial(c, eq, et):
        return LaurentPoly2({(eq, et): c})

    # -- ring structure ----------------------------------------------------

    def _coerce(other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = LaurentPoly2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = LaurentPoly2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentPoly2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = LaurentPoly2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_polynomial(self):
        """True if no negative exponent occurs (element of Z[q,t])."""
        return all(a >= 0 and b >= 0 for (a, b) in self.terms)

    def is_pure_q(self):
        return all(b == 0 for (_, b) in self.terms)

    def min_q_exp(self):
        return min((a for (a, _) in self.terms), default=0)

    def max_q_exp(self):
        return max((a for (a, _) in self.terms), default=0)

    def t_degree(self):
        return max((b for (_, b) in self.terms), default=0)

    def t_coefficients(self):
        """Split into {t-exponent: pure-q LaurentPoly2}."""
        out = {}
        for (a, b), c in self.terms.items():
            out.setdefault(b, {})[(a, 0)] = c
        return {b: LaurentPoly2(d) for b, d in sorted(out.items())}

    def coeff(self, eq, et):
        return self.terms.get((eq, et), 0)

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, q_image, t_image):
        """Exact substitution q -> q_image, t -> t_image.

        Both images must be monomials with coefficient +-1 (the only
        substitutions the formulas need: t -> t^2, t -> q^-d t^-1, t -> -t...).
        """
        qi = _as_unit_monomial(q_image, "q_image")
        ti = _as_unit_monomial(t_image, "t_image")
        (qs, qa, qb), (ts, ta, tb) = qi, ti
        out = {}
        for (a, b), c in self.terms.items():
            k = (a * qa + b * ta, a * qb + b * tb)
            sign = (qs ** (a & 1)) * (ts ** (b & 1))
            s = out.get(k, 0) + sign * c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return LaurentPoly2(out)

    def eval_int(self, q_val, t_val=1):
        """Exact value at integer q and rational t, as a Fraction.

        A zero base with a negative exponent is a domain error.
        """
        q_val = Fraction(q_val)
        t_val = Fraction(t_val)
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            if a < 0 and q_val == 0:
                raise ZeroDivisionError("q=0 with negative q-exponent")
            if b < 0 and t_val == 0:
                raise ZeroDivisionError("t=0 with negative t-exponent")
            total += c * q_val**a * t_val**b
        return total

    # -- serialization -------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (a, b), c in self.sorted_terms():
            mono = _monomial_str(abs(c), a, b)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + mono)
            else:
                pieces.append(("- " if c < 0 else "+ ") + mono)
        return " ".join(pieces)

    __repr__ = __str__

    def grouped_str(self, var="q"):
        """Table-style form: terms grouped by t-degree, q ascending per group.

        A multi-term group is parenthesized; when the lowest term of a group is
        negative a single minus is factored out, e.g. `1 - (q^2 + q^3)*t^3`.
        """
        groups = self.t_coefficients()
        if not groups:
            return "0"
        pieces = []
        for b in sorted(groups):
            poly = groups[b]
            items = poly.sorted_terms()
            neg = items[0][1] < 0
            if neg:
                items = [(k, -c) for k, c in items]
            if len(items) == 1:
                (a, _), c = items[0]
                body = _monomial_str(c, a, b, var=var)
            else:
                inner = []
                for (a, _), c in items:
                    m = _monomial_str(abs(c), a, 0, var=var)
                    inner.append(("- " if c < 0 else "+ ") + m if inner else ("-" if c < 0 else "") + m)
                body = "(" + " ".join(inner) + ")"
                if b:
                    body += "*" + ("t" if b == 1 else "t^%d" % b)
            pieces.append(("- " if neg else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + pieces[1:])

    def to_json_obj(self):
        return {
            "vars": ["q", "t"],
            "terms": [[a, b, str(c)] for (a, b), c in self.sorted_terms()],
        }

    @staticmethod
    def from_json_obj(obj):
        if obj.get("vars") != ["q", "t"]:
            raise ValueError("expected vars ['q','t']")
        return LaurentPoly2({(a, b): int(c) for a, b, c in obj["terms"]})


def _as_unit_monomial(p, what):
    """Return (sign, e_q, e_t) for a +-1-coefficient monomial, else raise."""
    if isinstance(p, int):
        p = LaurentPoly2.const(p)
    if len(p.terms) != 1:
        raise UnsupportedSubstitutionError("%s must be a monomial" % what)
    ((eq, et), c), = p.terms.items()
    if c not in (1, -1):
        raise UnsupportedSubstitutionError("%s must have unit coefficient" % what)
    return (c, eq, et)


def _monomial_str(c, a, b, var="q"):
    parts = []
    if a:
        parts.append(var if a == 1 else "%s^%d" % (var, a))
    if b:
        parts.append("t" if b == 1 else "t^%d" % b)
    if abs(c) != 1 or not parts:
        parts.insert(0, str(abs(c)))
    s = "*".join(parts)
    return "-" + s if c < 0 else s


ZERO = LaurentPoly2()
ONE = LaurentPoly2.const(1)
Q = LaurentPoly2.monomial(1, 1, 0)
T = LaurentPoly2.monomial(1, 0, 1)
QINV = LaurentPoly2.monomial(1, -1, 0)


def parse_poly(text):
    """Parse the canonical text form back into a LaurentPoly2.

    Accepts sums of `c*q^a*t^b` pieces with optional coefficient and exponents,
    e.g. `1 - t + 2*q^-1*t^3`.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    # split into signed chunks
    chunks = []
    cur = ""
    sign = 1
    for i, ch in enumerate(s):
        if ch in "+-" and cur and s[i - 1] not in "^+-*":
            chunks.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch in "+-" and not cur:
            sign = sign if ch == "+" else -sign
        else:
            cur += ch
    chunks.append((sign, cur))
    total = ZERO
    for sign, chunk in chunks:
        c, a, b = 1, 0, 0
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError("bad term %r" % chunk)
            if factor[0] == "q":
                a += int(factor[2:]) if factor.startswith("q^") else (1 if factor == "q" else _bad(factor))
            elif factor[0] == "t":
                b += int(factor[2:]) if factor.startswith("t^") else (1 if factor == "t" else _bad(factor))
            else:
                c *= int(factor)
        total = total + LaurentPoly2.monomial(sign * c, a, b)
    return total


def _bad(tok):
    raise ValueError("bad factor %r" % tok)


# -- q-special functions ----------------------------------------------------


def qpochhammer(x, step, n):
    """Finite q-Pochhammer (x; step)_n = prod_{k=0}^{n-1} (1 - x*step^k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = LaurentPoly2._coerce(x)
    step = LaurentPoly2._coerce(step)
    result = ONE
    xk = x
    for _ in range(n):
        result = result * (ONE - xk)
        xk = xk * step
    return result


_QBINOM_CACHE = {(0, 0): ONE}


def qbinomial(n, r):
    """Gaussian binomial [n r]_q via the q-Pascal recurrence, memoized.

    [n r] = [n-1 r-1] + q^r [n-1 r].  Domain error when r > n or r < 0.
    """
    if r < 0 or r > n:
        raise ValueError("require 0 <= r <= n")
    if r == 0 or r == n:
        return ONE
    key = (n, r)
    got = _QBINOM_CACHE.get(key)
    if got is None:
        got = qbinomial(n - 1, r - 1) + LaurentPoly2.monomial(1, r, 0) * qbinomial(n - 1, r)
        _QBINOM_CACHE[key] = got
    return got


def qbinomial_qinv(n, r):
    """[n r] evaluated at q -> q^-1 (a Laurent polynomial)."""
    return qbinomial(n, r).substitute(QINV, T)


def qpoch_qinv(n):
    """(q^-1; q^-1)_n as an exact Laurent polynomial."""
    return qpochhammer(QINV, QINV, n)


def qpoch_qinv_ratio(n, k):
    """(q^-1;q^-1)_n / (q^-1;q^-1)_{n-k} assembled division-free.

    Equals prod_{j=n-k+1}^{n} (1 - q^-j); requires 0 <= k <= n.
    """
    if not 0 <= k <= n:
        raise ValueError("require 0 <= k <= n")
    result = ONE
    for j in range(n - k + 1, n + 1):
        result = result * (ONE - LaurentPoly2.monomial(1, -j, 0))
    return result


def qmultinomial_qinv(parts):
    """q^-1-multinomial (q^-1)_n / prod (q^-1)_{a_i} with n = sum(parts).

    Assembled as a product of q^-1-binomials, so every intermediate is a
    Laurent polynomial.
    """
    result = ONE
    total = 0
    for a in parts:
        total += a
        result = result * qbinomial_qinv(total, a)
    return result


def aq(lam):
    """Automorphism-count polynomial q^{sum lam'_i^2} prod (q^-1;q^-1)_{lam'_i - lam'_{i+1}}.

    The q^-1-Pochhammers are expanded exactly; the result is checked to be a
    genuine polynomial in q (an internal-invariant error otherwise).
    """
    conj = lam.conjugate().parts
    e = sum(c * c for c in conj)
    result = LaurentPoly2.monomial(1, e, 0)
    for i, c in enumerate(conj):
        nxt = conj[i + 1] if i + 1 < len(conj) else 0
        result = result * qpoch_qinv(c - nxt)
    if not result.is_polynomial():
        raise AssertionError("a_q(lambda) produced a negative exponent")
    return result
