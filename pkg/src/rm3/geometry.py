"""Ramification profiles, Riemann-Hurwitz bookkeeping and smoothness of plane quartics.

Fibres of a rational map u = num/den of one variable are described by the
multiset of root multiplicities of ``num - v*den`` (or of ``den`` over
infinity), plus the multiplicity at x = infinity read off from the degree
drop.  Over Q the multiplicities come from a squarefree decomposition; over
GF(p) they are counted over the algebraic closure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateError, InputError, PreconditionError, VerificationError
from .exact import MultiPoly, RatFunc, squarefree_decomposition
from .finitefield import (count_roots, find_roots, irreducible_factors, is_prime,
                          make_field, random_irreducible, squarefree_profile, FieldCtx)

INF = "inf"


def _is_inf(value):
    return isinstance(value, str) and value.lower() in ("inf", "infinity", "oo")


@dataclass(frozen=True)
class RamificationProfile:
    """Point multiplicities in one fibre, sorted in descending order."""

    branch_value: object
    multiplicities: tuple
    factor_degrees: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "multiplicities",
                           tuple(sorted(self.multiplicities, reverse=True)))

    @property
    def degree(self):
        return sum(self.multiplicities)

    @property
    def ramification(self):
        return sum(m - 1 for m in self.multiplicities)

    @property
    def unramified(self):
        return all(m == 1 for m in self.multiplicities)

    def __str__(self):
        return "{" + ",".join(str(m) for m in self.multiplicities) + "}"


@dataclass(frozen=True)
class GenusCertificate:
    """Riemann-Hurwitz data 2g - 2 = n (2h - 2) + R for a tame cover of degree n."""

    map_degree: int
    base_genus: int
    total_ramification: int
    genus: int
    label: str = ""

    def check(self):
        lhs = 2 * self.genus - 2
        rhs = self.map_degree * (2 * self.base_genus - 2) + self.total_ramification
        return lhs == rhs

    def __str__(self):
        head = f"{self.label}: " if self.label else ""
        return (f"{head}degree {self.map_degree}, base genus {self.base_genus}, "
                f"ramification {self.total_ramification} -> genus {self.genus}")


def riemann_hurwitz(degree, base_genus, total_ram):
    """Genus of the cover; raises VerificationError when the data is inconsistent."""
    if degree < 1 or base_genus < 0 or total_ram < 0:
        raise InputError("degree must be positive, genus and ramification non-negative")
    twice = degree * (2 * base_genus - 2) + total_ram + 2
    if twice % 2:
        raise VerificationError(f"odd total ramification {total_ram} for degree {degree}")
    g = twice // 2
    if g < 0:
        raise VerificationError(f"negative genus from ({degree}, {base_genus}, {total_ram})")
    return g


def certificate(degree, base_genus, total_ram, label=""):
    return GenusCertificate(degree, base_genus, total_ram,
                            riemann_hurwitz(degree, base_genus, total_ram), label)


def disk_components(n, d):
    """Components of {(x, y) : x^n = y^d} over a small disk: gcd(n, d)."""
    if n < 1 or d < 1:
        raise InputError("disk_components needs positive integers")
    return math.gcd(n, d)


def pullback_profile(upstairs, downstairs_index):
    """Pull a degree-d branch point back along u.

    ``upstairs`` is the fibre of u over a point z; ``downstairs_index`` is the
    index d of the other cover over z.  A point of u-index m splits into
    gcd(m, d) points of the pulled-back cover, each of index d / gcd(m, d)
    over the source of u.  The result lists those indices for the whole fibre.
    """
    d = downstairs_index
    if d < 1:
        raise InputError("downstairs index must be positive")
    out = []
    for m in upstairs.multiplicities:
        e = disk_components(m, d)
        out += [d // e] * e
    return RamificationProfile(upstairs.branch_value, tuple(out))


# ---------------------------------------------------------------------------
# fibre profiles


def _univariate(P):
    used = P.used_variables()
    if len(used) > 1:
        raise InputError(f"expected a univariate map, found variables {used}")
    return P.univariate_coeffs(used[0] if used else None)


def _q_multiplicities(coeffs):
    if len(coeffs) <= 1:
        return [], []
    f = MultiPoly.from_coeffs("x", coeffs)
    mults, degrees = [], []
    for g, m in squarefree_decomposition(f, "x"):
        d = g.degree("x")
        mults += [m] * d
        degrees.append((m, d))
    return mults, degrees


def fiber_profile(u, value, field=None):
    """Multiplicities of the fibre of the one-variable map u over ``value``.

    ``field`` is None for Q (value a rational), a prime p, or a FieldCtx (value
    an int or raw element).  ``value`` may be :data:`INF`.  Over Q the profile
    also records (multiplicity, degree) of each squarefree factor.
    """
    if not isinstance(u, RatFunc):
        raise InputError("fiber_profile expects a RatFunc")
    num, den = _univariate(u.num), _univariate(u.den)
    if field is None:
        return _fiber_profile_q(num, den, value)
    ctx = make_field(field) if isinstance(field, int) else field
    return _fiber_profile_gf(ctx, num, den, value)


def _fiber_profile_q(num, den, value):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    D = max(len(num), len(den)) - 1
    if D < 1:
        raise InputError("constant map has no fibres")
    if _is_inf(value):
        P = den
        value = INF
    else:
        value = Fraction(value)
        P = [a - value * b for a, b in _pad(num, den)]
    while P and P[-1] == 0:
        P.pop()
    if not P:
        raise InputError("constant map has no fibres")
    mults, degrees = _q_multiplicities(P)
    drop = D - (len(P) - 1)
    if drop:
        mults.append(drop)
    return RamificationProfile(value, tuple(mults), tuple(degrees))


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _mod(c, p):
    c = Fraction(c)
    if c.denominator % p == 0:
        raise PreconditionError(f"coefficient {c} has a denominator divisible by {p}")
    return c.numerator * pow(c.denominator, -1, p) % p


def _fiber_profile_gf(ctx, num, den, value):
    p = ctx.p
    num = ctx.trim([ctx.elem(_mod(c, p)) for c in num])
    den = ctx.trim([ctx.elem(_mod(c, p)) for c in den])
    if not den:
        raise PreconditionError("denominator vanishes mod p")
    D = max(len(num), len(den)) - 1
    if D < 1 or len(ctx.poly_gcd(num, den)) > 1:
        raise PreconditionError(f"map degenerates mod {p}")
    if _is_inf(value):
        P, value = den, INF
    else:
        v = ctx.elem(value)
        P = ctx.poly_sub(num, ctx.poly_scale(den, v))
        value = v if ctx.k > 1 else v[0]
    if not P:
        raise InputError("constant map has no fibres")
    mults = list(squarefree_profile(ctx, P))
    drop = D - (len(P) - 1)
    if drop:
        mults.append(drop)
    return RamificationProfile(value, tuple(mults))


# ---------------------------------------------------------------------------
# ramification of u_t over sampled specialisations


def _sigma_cubic_mod(t0, p, k=1):
    from .family import build_sigmas
    s1, s2, s3 = (_mod(c, p) for c in build_sigmas(t0))
    ctx = make_field(p, k)
    return ctx, ctx.poly([-s3, s2, -s1, 1])


def split_field(t0, p):
    """(ctx, roots) for the smallest GF(p^k), k <= 3, splitting the sigma cubic."""
    for k in (1, 2, 3):
        ctx, cubic = _sigma_cubic_mod(t0, p, k)
        roots = find_roots(ctx, cubic)
        if len(roots) == 3:
            return ctx, roots
        if k == 1 and len(ctx.poly_gcd(cubic, ctx.poly_deriv(cubic))) > 1:
            break
    raise PreconditionError(f"sigma cubic has a repeated root mod {p}")


def u_branch_profiles(t0, p, w=None):
    """Fibres of u_t0 mod p over the roots of the sigma cubic and over infinity.

    The roots are taken in the smallest extension where the cubic splits;
    ``w`` overrides the numerator of u.
    """
    from .family import build_u
    ctx, roots = split_field(t0, p)
    u = build_u(t0, w=w)
    profiles = [fiber_profile(u, r, ctx) for r in roots]
    profiles.append(fiber_profile(u, INF, ctx))
    return profiles


def _good_sample(t0, p):
    from .family import build_E
    if p <= 7 or Fraction(t0).denominator % p == 0:
        return False
    t = _mod(t0, p)
    if t in (0, 1):
        return False
    disc = build_E(t0).discriminant()
    if _mod(disc, p) == 0:
        return False
    ctx, cubic = _sigma_cubic_mod(t0, p)
    sqf = ctx.poly_gcd(cubic, ctx.poly_deriv(cubic))
    return len(sqf) == 1 and count_roots(ctx, cubic) == 3


def sample_specializations(n=20, t_values=None, primes=None):
    """First n pairs (t0, p) with good reduction and a split sigma cubic."""
    t_values = t_values or [-2, 2, 3, -3, 4, Fraction(1, 2), -4, 5, Fraction(-1, 3), 6]
    primes = primes or [q for q in range(11, 400) if is_prime(q)]
    out = []
    for p in primes:
        for t0 in t_values:
            if _good_sample(t0, p):
                out.append((Fraction(t0), p))
                if len(out) == n:
                    return out
    return out


def sampled_branch_profiles(n=20, generic_checks=2, seed=0, w=None, t_values=None):
    """Check the 2,2,2,1 branching of u_t at n sampled specialisations.

    Returns a list of dicts with keys t, p, profiles, total, generic_ok and ok.
    """
    from .family import build_u
    rng = random.Random(seed)
    rows = []
    for t0, p in sample_specializations(n, t_values=t_values):
        try:
            profiles = u_branch_profiles(t0, p, w)
        except PreconditionError:
            rows.append({"t": t0, "p": p, "profiles": [], "total": None,
                         "generic_ok": False, "ok": False})
            continue
        branch = [pr.branch_value for pr in profiles]
        u = build_u(t0, w=w)
        generic_ok = True
        tried = 0
        while tried < generic_checks:
            v = rng.randrange(p)
            if v in branch:
                continue
            tried += 1
            generic_ok &= fiber_profile(u, v, p).unramified
        total = sum(pr.ramification for pr in profiles)
        ok = (all(pr.multiplicities == (2, 2, 2, 1) for pr in profiles)
              and total == 12 and generic_ok)
        rows.append({"t": t0, "p": p, "profiles": profiles, "total": total,
                     "generic_ok": generic_ok, "ok": ok})
    return rows


def u_certificate(t0=-2, p=None):
    """Genus of the source of u_t (a P^1) from its four branch fibres."""
    if p is None:
        p = sample_specializations(1, t_values=[t0])[0][1]
    total = sum(pr.ramification for pr in u_branch_profiles(t0, p))
    return certificate(7, 0, total, "u_t")


def hyperelliptic_certificate(u_inf, u_generic):
    """y^2 = u(x) - s: double cover branched over s and infinity."""
    total = (pullback_profile(u_inf, 2).ramification
             + pullback_profile(u_generic, 2).ramification)
    return certificate(2, 0, total, "hyperelliptic")


def trigonal_certificate(u_branch, u_generic):
    """Pull f_s back along u: index 2 over m, n, p and one further value q."""
    total = sum(pullback_profile(pr, 2).ramification for pr in u_branch)
    total += pullback_profile(u_generic, 2).ramification
    return certificate(3, 0, total, "trigonal")


def standard_certificates():
    """The three Riemann-Hurwitz counts of the construction, from fibre profiles."""
    branch = RamificationProfile(None, (2, 2, 2, 1))
    generic = RamificationProfile(None, (1,) * 7)
    return [certificate(7, 0, 4 * branch.ramification, "u_t"),
            trigonal_certificate([branch] * 3, generic),
            hyperelliptic_certificate(branch, generic)]


# ---------------------------------------------------------------------------
# genus and irreducibility of a family member


def _poly_mod_p(P, p, var):
    """Ascending ints mod p of a univariate MultiPoly/Fraction-coefficient polynomial."""
    return [_mod(c, p) for c in P.univariate_coeffs(var)]


def _fs_certificate_mod_p(s0, t0, p):
    from .family import build_u, fs_specialized
    ctx, cubic = _sigma_cubic_mod(t0, p)
    roots = [r[0] for r in find_roots(ctx, cubic)]
    if len(roots) != 3 or len(ctx.poly_gcd(cubic, ctx.poly_deriv(cubic))) > 1:
        return None
    alpha, beta = fs_specialized(s0, t0)
    fs = RatFunc(alpha, beta, normalize=False)
    u = build_u(t0)
    try:
        u_branch = [fiber_profile(u, r, ctx) for r in roots]
        u_inf = fiber_profile(u, INF, ctx)
        f_prof = [fiber_profile(fs, r, ctx) for r in roots]
        f_inf = fiber_profile(fs, INF, ctx)
    except (PreconditionError, InputError):
        return None
    if any(pr.multiplicities != (2, 2, 2, 1) for pr in u_branch + [u_inf]):
        return None
    if any(pr.multiplicities != (2, 1) for pr in f_prof) or not f_inf.unramified:
        return None
    # the fourth critical point of f_s: W = a'b - ab' has degree <= 4
    a = ctx.poly(_poly_mod_p(alpha, p, "y"))
    b = ctx.poly(_poly_mod_p(beta, p, "y"))
    W = ctx.poly_sub(ctx.poly_mul(ctx.poly_deriv(a), b), ctx.poly_mul(a, ctx.poly_deriv(b)))
    for r in roots:
        P = ctx.poly_sub(a, ctx.poly_scale(b, ctx.elem(r)))
        double = ctx.poly_gcd(P, ctx.poly_deriv(P))
        quo, rem = ctx.poly_divmod(W, double)
        if rem:
            return None
        W = quo
    if len(W) != 2:
        return None
    y4 = ctx.neg(ctx.div(W[0], W[1]))
    bval = ctx.poly_eval(b, y4)
    if not any(bval):
        return None
    q = ctx.div(ctx.poly_eval(a, y4), bval)[0]
    if q in roots or fiber_profile(fs, q, ctx).multiplicities != (2, 1):
        return None
    u_q = fiber_profile(u, q, ctx)
    if not u_q.unramified:
        return None
    return trigonal_certificate(u_branch, u_q)


def _y_coefficients_mod_p(F, p):
    """F in (x, y) as {j: ascending ints in x} mod p."""
    ix, iy = F.variables.index("x"), F.variables.index("y")
    out = {}
    for e, c in F.terms.items():
        if any(k for i, k in enumerate(e) if i not in (ix, iy)):
            raise InputError("family member must be a polynomial in x and y")
        row = out.setdefault(e[iy], {})
        row[e[ix]] = (row.get(e[ix], 0) + _mod(c, p)) % p
    return {j: [row.get(i, 0) for i in range(max(row) + 1)] for j, row in out.items()}


def absolutely_irreducible_mod_p(F, p, tries=40, seed=0):
    """Sufficient test that F(x, y), cubic in y, is absolutely irreducible mod p.

    Needs trivial x-content, and points x0 in GF(p), x1 in GF(p^3) over which
    the cubic in y keeps its degree and has no root: a factorisation over the
    closure has a factor defined over GF(p^3) and would produce one.
    """
    coeffs = _y_coefficients_mod_p(F, p)
    if max(coeffs) != 3 or F.degree("y") != 3:
        return False
    ctx = make_field(p)
    polys = {j: ctx.poly(c) for j, c in coeffs.items()}
    g = []
    for f in polys.values():
        g = ctx.poly_gcd(g, f) if g else ctx.poly_monic(f)
    if len(g) > 1:
        return False
    rng = random.Random(seed)
    for k in (1, 3):
        K = ctx if k == 1 else FieldCtx(p, k, modulus=random_irreducible(p, k, seed))
        lifted = {j: [K.elem(c) for c in f] for j, f in coeffs.items()}
        for _ in range(tries):
            x0 = K.random_element(rng)
            ys = [K.poly_eval(lifted.get(j, []), x0) for j in range(4)]
            if not any(ys[3]):
                continue
            if count_roots(K, ys) == 0:
                break
        else:
            return False
    return True


def _total_degree_mod_p(F, p):
    return max((sum(e) for e, c in F.terms.items() if _mod(c, p)), default=-1)


def family_genus_certificate(s0, t0, F=None, min_prime=10007, attempts=6):
    """(p, GenusCertificate) for X_{s0,t0}, certified at a prime p > 10^4.

    At p the sigma cubic splits, u has the 2,2,2,1 fibres over its roots
    and infinity, f_s has index 2 over the roots and over one further value q
    with unramified u-fibre, and the defining polynomial passes the
    absolute irreducibility test.  Raises DegenerateError when no prime among
    the first suitable ones certifies genus 3.
    """
    from .family import family_polynomial
    s0, t0 = Fraction(s0), Fraction(t0)
    if F is None:
        F = family_polynomial(s0, t0).primitive()
    deg = F.degree()
    p = min_prime
    tried = 0
    while tried < attempts and p < min_prime + 200000:
        p += 1
        if not is_prime(p):
            continue
        try:
            if _total_degree_mod_p(F, p) != deg or _mod(t0, p) in (0, 1):
                continue
            _mod(s0, p)
            ctx, cubic = _sigma_cubic_mod(t0, p)
        except PreconditionError:
            continue
        if count_roots(ctx, cubic) != 3:
            continue
        tried += 1
        try:
            cert = _fs_certificate_mod_p(s0, t0, p)
        except PreconditionError:
            cert = None
        if cert is None or cert.genus != 3:
            continue
        if absolutely_irreducible_mod_p(F, p):
            return p, cert
    raise DegenerateError(f"(s, t) = ({s0}, {t0}) is degenerate: no genus-3 certificate")


# ---------------------------------------------------------------------------
# smoothness of plane quartics


def _form_terms(F):
    """{(i, j, l): int} for an integer ternary form (PlaneCurve or MultiPoly)."""
    from .curves import PlaneCurve
    if isinstance(F, PlaneCurve):
        return dict(F.form.terms)
    if isinstance(F, MultiPoly):
        G = F.embed(("x", "y", "z"))
        if any(Fraction(c).denominator != 1 for c in G.terms.values()):
            G = G.primitive()
        return {e: int(c) for e, c in G.terms.items()}
    return dict(F)


def _transform(terms, M, p):
    """Coefficients mod p of F(M (X, Y, Z)^T)."""
    ring = ("x", "y", "z")
    X = [MultiPoly.var(v, ring) for v in ring]
    lin = [sum((M[i][j] * X[j] for j in range(3)), MultiPoly.constant(0, ring))
           for i in range(3)]
    pw = [[MultiPoly.constant(1, ring)] for _ in range(3)]
    deg = max(sum(e) for e in terms)
    for i in range(3):
        for _ in range(deg):
            pw[i].append(pw[i][-1] * lin[i])
    out = {}
    for (a, b, c), coef in terms.items():
        if coef % p == 0:
            continue
        term = pw[0][a] * pw[1][b] * pw[2][c]
        for e, v in term.terms.items():
            out[e] = (out.get(e, 0) + coef * int(v)) % p
    return {e: v for e, v in out.items() if v}


def _partial(terms, i, p):
    out = {}
    for e, c in terms.items():
        if e[i]:
            f = list(e)
            f[i] -= 1
            v = c * e[i] % p
            if v:
                out[tuple(f)] = (out.get(tuple(f), 0) + v) % p
    return out


def _x_coefficients(ctx, terms):
    """Affine chart z = 1: [coefficient of x^i as a polynomial in y]."""
    deg = max((e[0] for e in terms), default=0)
    rows = [dict() for _ in range(deg + 1)]
    for (a, b, _), c in terms.items():
        rows[a][b] = (rows[a].get(b, 0) + c) % ctx.p
    return [ctx.poly([r.get(j, 0) for j in range(max(r, default=-1) + 1)]) for r in rows]


def _poly_det(ctx, M):
    """Determinant of a square matrix over GF(p)[y] by fraction-free elimination."""
    M = [list(r) for r in M]
    n = len(M)
    sign = 1
    prev = [ctx.one]
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ctx.poly_sub(ctx.poly_mul(M[k][k], M[i][j]),
                                   ctx.poly_mul(M[i][k], M[k][j]))
                M[i][j] = ctx.poly_divmod(num, prev)[0]
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else [ctx.neg(c) for c in det]


def _sylvester_resultant(ctx, f, g):
    """Res_x(f, g) for f, g given as x-coefficient lists over GF(p)[y]."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return [ctx.one]
    rows = []
    for i in range(n):
        rows.append([[]] * i + list(reversed(f)) + [[]] * (size - m - 1 - i))
    for i in range(m):
        rows.append([[]] * i + list(reversed(g)) + [[]] * (size - n - 1 - i))
    return _poly_det(ctx, rows)


def _gcd_many(ctx, polys):
    g = []
    for f in polys:
        g = ctx.poly_gcd(g, f) if g else (ctx.poly_monic(f) if f else [])
    return g


def _common_root_over(ctx, K, y0, parts):
    """Do the x-polynomials parts(x, y0) share a root over the closure of K?"""
    lifted = []
    for rows in parts:
        lifted.append(K.trim([K.poly_eval([K.elem(ctx.to_int(c)) for c in r], y0)
                              for r in rows]))
    nonzero = [f for f in lifted if f]
    if not nonzero:
        return True
    g = _gcd_many(K, nonzero)
    return len(g) > 1


def quartic_smooth_mod_p(F, p, seed=None):
    """True iff the plane curve F = 0 is smooth over the algebraic closure of GF(p).

    Works in coordinates where one partial derivative has a nonzero x^3
    coefficient, eliminates x by resultants on the chart z = 1, and checks
    every root of the gcd of the resultants (over its residue field) for a
    common zero of F and its partials; the line z = 0 is checked directly.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if p == 2:
        raise InputError("characteristic 2 is not supported")
    terms = {e: c % p for e, c in _form_terms(F).items() if c % p}
    if not terms:
        raise InputError(f"form vanishes mod {p}")
    ctx = make_field(p)
    rng = random.Random(p if seed is None else seed)
    for _ in range(400):
        M = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        if det % p == 0:
            continue
        G = _transform(terms, M, p)
        partials = [_partial(G, i, p) for i in range(3)]
        cubic_x = [i for i, d in enumerate(partials)
                   if d.get((max(sum(e) for e in G) - 1, 0, 0), 0)]
        if cubic_x:
            break
    else:
        # no partial has an x^3 term in any coordinates tried: all partials vanish
        return not any(any(d) for d in (_partial(terms, i, p) for i in range(3)))
    first = cubic_x[0]
    polys = [partials[first]] + [partials[i] for i in range(3) if i != first] + [G]
    parts = [_x_coefficients(ctx, d) if d else [] for d in polys]
    # points on z = 0: (1:0:0) is excluded by the choice of coordinates
    line = []
    for d in polys:
        rows = {}
        for (a, b, c), v in d.items():
            if c == 0:
                rows[a] = (rows.get(a, 0) + v) % p
        line.append(ctx.poly([rows.get(i, 0) for i in range(max(rows, default=-1) + 1)]))
    nonzero = [f for f in line if f]
    if not nonzero or len(_gcd_many(ctx, nonzero)) > 1:
        return False
    f1 = parts[0]
    res = []
    for other in parts[1:]:
        if not other:
            continue
        r = _sylvester_resultant(ctx, f1, other)
        if not r:
            # f1 shares a component with another equation: it meets the rest
            return False
        res.append(r)
    g = _gcd_many(ctx, res)
    if len(g) <= 1:
        return True
    sqf = ctx.poly_divmod(g, ctx.poly_gcd(g, ctx.poly_deriv(g)))[0]
    for h in irreducible_factors(ctx, sqf):
        k = len(h) - 1
        if k == 1:
            K, y0 = ctx, ctx.neg(h[0])
        else:
            K = FieldCtx(p, k, modulus=[c[0] for c in h])
            y0 = tuple(1 if i == 1 else 0 for i in range(k))
        if _common_root_over(ctx, K, y0, parts):
            return False
    return True


def singular_points_search(F, p, kmax=2):
    """Singular points of F = 0 found by exhaustive search over GF(p^k), k <= kmax.

    Points are returned as (k, (x, y, z)) with raw field elements, normalised so
    that the last nonzero coordinate is 1.
    """
    terms = {e: c % p for e, c in _form_terms(F).items() if c % p}
    if not terms:
        raise InputError(f"form vanishes mod {p}")
    polys = [terms] + [_partial(terms, i, p) for i in range(3)]
    found = []
    seen = set()
    for k in range(1, kmax + 1):
        K = make_field(p, k)
        elems = list(K.elements())
        evals = [_evaluator(K, d) for d in polys]
        candidates = [(x, y, K.one) for x in elems for y in elems]
        candidates += [(x, K.one, K.zero) for x in elems] + [(K.one, K.zero, K.zero)]
        for pt in candidates:
            if all(not any(ev(pt)) for ev in evals):
                key = tuple(K.to_int(c) for c in pt)
                if (k, key) not in seen:
                    seen.add((k, key))
                    found.append((k, pt))
    return found


def _evaluator(K, terms):
    items = [(e, K.elem(c)) for e, c in terms.items()]

    def ev(pt):
        acc = K.zero
        for (a, b, c), coef in items:
            v = coef
            for base, n in zip(pt, (a, b, c)):
                if n:
                    v = K.mul(v, K.pow(base, n))
            acc = K.add(acc, v)
        return acc
    return ev
