"""Structured pass/fail records for identity checks."""

import json
import time


class BudgetExceededError(RuntimeError):
    """An enumeration hit its work cap; carries the progress made so far."""

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress


class VerificationReport:
    """Outcome of one identity check.

    status is 'pass', 'fail', or 'reported' ('reported' is reserved for
    conjecture-level checks, which never fail a suite).  A failing report must
    carry the first discrepancy locator (an exponent pair).
    """

    def __init__(self, name, params, status, lhs="", rhs="", discrepancy=None,
                 wall_time=0.0, detail=""):
        if status not in ("pass", "fail", "reported"):
            raise ValueError("bad status %r" % status)
        if status == "fail" and discrepancy is None:
            raise ValueError("failing report needs a discrepancy locator")
        self.name = name
        self.params = dict(params)
        self.status = status
        self.lhs = lhs
        self.rhs = rhs
        self.discrepancy = discrepancy
        self.wall_time = wall_time
        self.detail = detail

    @property
    def passed(self):
        return self.status == "pass"

    def __str__(self):
        ps = " ".join("%s=%s" % kv for kv in sorted(self.params.items()))
        line = "[%s] %s %s" % (self.status.upper(), self.name, ps)
        if self.status == "fail":
            line += " first-discrepancy=%s" % (self.discrepancy,)
        if self.detail:
            line += " (%s)" % self.detail
        return line

    __repr__ = __str__

    def to_json_obj(self):
        return {
            "check": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "discrepancy": list(self.discrepancy) if self.discrepancy is not None else None,
            "wall_time_ms": round(self.wall_time * 1000, 3),
            "detail": self.detail,
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), indent=2)


class timed:
    """Context manager measuring wall time for a report."""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False


def compare_report(name, params, lhs, rhs, lhs_text=None, rhs_text=None,
                   conjectural=False):
    """Build a report from two comparable exact objects.

    Objects must support == and, on mismatch, a first-discrepancy scan via
    their term/coefficient dicts (LaurentPoly2 or TruncSeries2).
    """
    with timed() as tm:
        equal = lhs == rhs
    if conjectural:
        status = "reported"
        detail = "agrees" if equal else "disagrees"
    else:
        status = "pass" if equal else "fail"
        detail = ""
    disc = None if equal else first_discrepancy(lhs, rhs)
    return VerificationReport(name, params, status,
                              lhs=lhs_text if lhs_text is not None else str(lhs),
                              rhs=rhs_text if rhs_text is not None else str(rhs),
                              discrepancy=disc, wall_time=tm.elapsed, detail=detail)


def first_discrepancy(lhs, rhs):
    """Smallest exponent pair where two exact objects differ."""
    a = getattr(lhs, "terms", None)
    if a is None:
        a = getattr(lhs, "coeffs", {})
    b = getattr(rhs, "terms", None)
    if b is None:
        b = getattr(rhs, "coeffs", {})
    diffs = sorted(k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0))
    return diffs[0] if diffs else (0, 0)
