"""Verification reports: reproduce the factorization table and run the identity suite."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import family, geometry
from .curves import default_quartic, load_table
from .errors import DegenerateError, RM3Error
from .exact import MultiPoly, RatFunc
from .finitefield import is_prime
from .rmfield import OKElem, rm_factor, verify_table_row
from .zeta import zeta_numerator

PASS, FAIL, SKIP, UNKNOWN = "PASS", "FAIL", "SKIP", "UNKNOWN"


@dataclass
class ReportRow:
    name: str
    status: str
    detail: str = ""
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def line(self):
        return f"{self.status:7s} {self.name}  {self.detail}  ({self.seconds:.2f}s)"


@dataclass
class Report:
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.status in (PASS, SKIP, UNKNOWN) for r in self.rows)

    def exit_code(self):
        return 0 if self.ok else 1

    def count(self, status):
        return sum(r.status == status for r in self.rows)

    def text(self):
        lines = [r.line() for r in self.rows]
        lines.append(f"{self.count(PASS)} passed, {self.count(FAIL)} failed, "
                     f"{self.count(SKIP)} skipped, {self.count(UNKNOWN)} unknown")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# table reproduction


def verify_table(pmax=89, curve=None, table=None, threads=1, primes=None):
    """count -> assemble -> factor -> compare, for each prime up to pmax."""
    curve = curve if curve is not None else default_quartic()
    table = table if table is not None else load_table()
    report = Report()
    primes = primes if primes is not None else [p for p in range(2, pmax + 1) if is_prime(p)]
    for p in primes:
        start = time.perf_counter()
        name = f"p={p}"
        if p == 2:
            report.rows.append(ReportRow(name, SKIP, "characteristic 2 unsupported"))
            continue
        if not geometry.quartic_smooth_mod_p(curve, p):
            report.rows.append(ReportRow(name, SKIP, "singular reduction",
                                         time.perf_counter() - start))
            continue
        try:
            counts, h = zeta_numerator(curve, p, threads=threads)
            factor = rm_factor(h)
        except RM3Error as exc:
            report.rows.append(ReportRow(name, FAIL, str(exc), time.perf_counter() - start))
            continue
        data = {"counts": counts, "h": [h.a, h.b, h.c],
                "alpha": list(factor.alpha.coords()), "trace": h.trace}
        row = table.get(p)
        if row is None:
            status, detail = UNKNOWN, "no fixture row"
        else:
            ok = verify_table_row(p, factor, OKElem(*row.alpha), row.trace)
            status = PASS if ok else FAIL
            detail = f"alpha={factor.alpha} trace={h.trace}"
            if not ok:
                detail += f" expected alpha~{OKElem(*row.alpha)} trace={row.trace}"
        report.rows.append(ReportRow(name, status, detail, time.perf_counter() - start, data))
    return report


# ---------------------------------------------------------------------------
# identity suite


def _timed(report, name, fn):
    """Run fn() -> (ok, detail); DegenerateError becomes SKIP, other errors FAIL."""
    start = time.perf_counter()
    try:
        ok, detail = fn()
        status = PASS if ok else FAIL
    except DegenerateError as exc:
        status, detail = SKIP, f"degenerate: {exc}"
    except RM3Error as exc:
        status, detail = FAIL, f"{type(exc).__name__}: {exc}"
    report.rows.append(ReportRow(name, status, detail, time.perf_counter() - start))


def _equals(value, c):
    if isinstance(value, RatFunc):
        return value.same_as(RatFunc.constant(c, value.variables))
    return value == c


def _check_T():
    T = family.build_T()
    dT = T.diff("y")
    ok = (_equals(T.specialize({"y": 0}), 0) and _equals(dT.specialize({"y": 0}), 0)
          and _equals(T.specialize({"y": 1}), 1) and _equals(dT.specialize({"y": 1}), 0))
    # a double pole at infinity: numerator degree exceeds denominator degree by 2
    ok = ok and T.num.degree("y") - T.den.degree("y") == 2
    return ok, "T(0)=T'(0)=0, T(1)=1, T'(1)=0, double pole at infinity"


def _check_s3():
    A = family.a_param()
    ring = A.num.variables
    bad = []
    for perm, b in family.s3_transformations():
        mapping = {v: MultiPoly.var(w, ring) for v, w in zip(("m", "n", "p"), perm)}
        lhs = A.subs(mapping, ring)
        rhs = b.compose("a", A)
        if not lhs.same_as(rhs.embed(ring)):
            bad.append(perm)
    return not bad, "five transformations" + (f"; mismatched {bad}" if bad else "")


def _permuted(f, perm):
    ring = f.num.variables
    mapping = {v: MultiPoly.var(w, ring) for v, w in zip(("m", "n", "p"), perm)}
    return RatFunc(f.num.subs(mapping, ring), f.den.subs(mapping, ring), normalize=False)


def _check_fs_invariance():
    f = family.build_fs("printed")
    bad = [perm for perm in family.permutations_of_mnp() if not f.same_as(_permuted(f, perm))]
    return not bad, "all six permutations" + (f"; broken by {bad}" if bad else "")


def _check_fs_routes():
    printed = family.build_fs("printed")
    ok = printed.same_as(family.build_fs("sigma")) and printed.same_as(family.build_fs("raw"))
    return ok, "step-2 substitution, expanded form and symmetric-function form agree"


def _check_step2():
    S = family.recompose_step2()
    alpha, beta = family.printed_step2(corrected=True)
    ok = S.same_as(RatFunc(alpha, beta, normalize=False))
    literal = S.same_as(RatFunc(*family.printed_step2(corrected=False), normalize=False))
    return ok, f"corrected form recomposes; literal form {'also' if literal else 'does not'}"


def _check_denominator():
    xs = family.torsion_multiples_symbolic()
    ring = family.X_RING
    x = RatFunc(MultiPoly.var("x", ring), MultiPoly.constant(1, ring))
    prod = RatFunc(MultiPoly.constant(1, ring), MultiPoly.constant(1, ring))
    for xi in xs:
        prod = prod * (x - xi.embed(ring))
    target = RatFunc(family.u_denominator(), MultiPoly.constant(1, ring))
    return (prod * prod).same_as(target), "[(x-x(S))(x-x(2S))(x-x(3S))]^2"


def _check_sigmas(t0):
    t0 = family._t_value(t0)
    signs = family.sigma_sign_pattern()
    E = family.build_quotient(t0)
    disc = E.y_discriminant(("x",))
    co = disc.univariate_coeffs("x")
    lead = co[3]
    e1, e2, e3 = -co[2] / lead, co[1] / lead, -co[0] / lead
    sig = family.build_sigmas(t0)
    ok = signs == (1, 1, 1) and (e1, e2, e3) == tuple(sig)
    return ok, f"signs {signs}; sigma({t0}) = ({', '.join(str(v) for v in sig)})"


def _check_translation(t0, w):
    counts = [family.translation_invariance(t0, p, w) for p in (5, 13, 29)]
    return True, f"checked {counts} points for p = 5, 13, 29"


def _check_profiles(w, t_values):
    rows = geometry.sampled_branch_profiles(20, w=w, t_values=t_values)
    bad = [(str(r["t"]), r["p"]) for r in rows if not r["ok"]]
    ok = len(rows) == 20 and not bad
    return ok, f"{len(rows)} samples" + (f"; failing {bad[:4]}" if bad else "")


def _check_certificates():
    certs = geometry.standard_certificates()
    want = [(7, 0, 12, 0), (3, 0, 10, 3), (2, 0, 8, 3)]
    got = [(c.map_degree, c.base_genus, c.total_ramification, c.genus) for c in certs]
    direct = [geometry.riemann_hurwitz(*w[:3]) == w[3] for w in want]
    return got == want and all(direct), "; ".join(str(c) for c in certs)


def verify_identities(t_values=None, w_override=None):
    """The symbolic identity suite; t-dependent checks run at each t in t_values."""
    t_values = [Fraction(-2)] if t_values is None else [Fraction(t) for t in t_values]
    report = Report()
    _timed(report, "T branching", _check_T)
    _timed(report, "a-parameter S3 table", _check_s3)
    _timed(report, "f_s permutation invariance", _check_fs_invariance)
    _timed(report, "f_s construction routes", _check_fs_routes)
    _timed(report, "step-2 recomposition", _check_step2)
    _timed(report, "u_t denominator", _check_denominator)
    for t0 in t_values:
        _timed(report, f"sigma cross-check t={t0}", lambda t0=t0: _check_sigmas(t0))
        _timed(report, f"translation invariance t={t0}",
               lambda t0=t0: _check_translation(family._t_value(t0), w_override))
    _timed(report, "fibre profiles 2,2,2,1", lambda: _check_profiles(w_override, None))
    _timed(report, "Riemann-Hurwitz certificates", _check_certificates)
    return report
