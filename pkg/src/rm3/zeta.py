"""Point counting on plane quartics over GF(p^nu) and the zeta numerator.

The counting kernel works on all affine lines y = const at once.  For each
y in GF(q) the quartic F(X, y, 1) is made monic in X, ``X^q mod f`` is
computed by square-and-shift, and the number of distinct roots is
``deg gcd(f, X^q - X)``.  Every step is a numpy operation over the whole
batch of y values, with field elements held as discrete logarithms.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CountingError, InputError, PreconditionError, VerificationError
from .exact import MultiPoly, count_real_roots
from .finitefield import LogTables, count_roots, is_prime, make_field

CHUNK = 1 << 15


@lru_cache(maxsize=8)
def _tables(p, k):
    return LogTables(make_field(p, k))


class _LogArith:
    """Vectorised GF(q) arithmetic on discrete logs with a zero sentinel."""

    def __init__(self, tables):
        Q = tables.order
        self.Q = Q
        self.Z = 2 * Q
        self.half = Q // 2
        idx = np.arange(4 * Q + 1, dtype=np.int64)
        self.modtab = np.where(idx < 2 * Q, idx % Q, 2 * Q).astype(np.int64)
        self.zech = tables.zech.astype(np.int64)
        self.log = tables.log

    def mul(self, a, b):
        return self.modtab[a + b]

    def add(self, a, b):
        d = np.remainder(b - a, self.Q)
        r = self.modtab[a + self.zech[d]]
        r = np.where(a == self.Z, b, r)
        return np.where(b == self.Z, a, r)

    def neg(self, a):
        return self.modtab[a + self.half]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.modtab[a - b + self.Q]


def _shifted_form(curve, p):
    """Coefficients mod p of F(x, y + a x, z + b x) with a nonzero x^4 term.

    The point (1:0:0) is then off the curve, so every point has y or z nonzero.
    """
    red = curve.reduce(p)
    deg = curve.degree
    F = MultiPoly(("x", "y", "z"), red)
    if red.get((deg, 0, 0), 0) % p:
        return red
    x, y, z = (MultiPoly.var(v, ("x", "y", "z")) for v in ("x", "y", "z"))
    for a in range(p):
        for b in range(p):
            if F.evaluate({"x": 1, "y": a, "z": b}) % p:
                G = F.subs({"y": y + a * x, "z": z + b * x}, ("x", "y", "z"))
                return {e: int(c) % p for e, c in G.terms.items() if int(c) % p}
    raise PreconditionError(f"form vanishes at every point (1:a:b) over GF({p})")


def _affine_counts(form, p, nu, ys, arith):
    """Distinct X-roots of F(X, y, 1) for each y-encoding in ``ys``."""
    A = arith
    Z, Q = A.Z, A.Q
    q = p ** nu
    deg = max(e[0] for e in form)
    if deg != 4:
        raise InputError("kernel expects a quartic")
    logy = A.log[ys].astype(np.int64)
    n = len(ys)
    # y^j as logs
    ypow = [np.zeros(n, dtype=np.int64)]
    for j in range(1, 5):
        ypow.append(np.where(logy == Z, Z, (j * logy) % Q))
    coef = [np.full(n, Z, dtype=np.int64) for _ in range(5)]
    for (i, j, _), c in form.items():
        lc = int(A.log[c % p])
        coef[i] = A.add(coef[i], A.mul(np.int64(lc), ypow[j]))
    lead = coef[4]
    m = [A.neg(A.div(coef[i], lead)) for i in range(4)]  # X^4 = sum m_i X^i
    two = np.int64(A.log[2 % p])
    zero = np.full(n, Z, dtype=np.int64)
    onev = np.zeros(n, dtype=np.int64)

    def reduce(s):
        for k in range(len(s) - 1, 3, -1):
            top = s[k]
            for i in range(4):
                s[k - 4 + i] = A.add(s[k - 4 + i], A.mul(top, m[i]))
        return s[:4]

    r = [zero, onev, zero, zero]
    for bit in bin(q)[3:]:
        r0, r1, r2, r3 = r
        s = [
            A.mul(r0, r0),
            A.mul(two, A.mul(r0, r1)),
            A.add(A.mul(two, A.mul(r0, r2)), A.mul(r1, r1)),
            A.mul(two, A.add(A.mul(r0, r3), A.mul(r1, r2))),
            A.add(A.mul(two, A.mul(r1, r3)), A.mul(r2, r2)),
            A.mul(two, A.mul(r2, r3)),
            A.mul(r3, r3),
        ]
        r = reduce(s)
        if bit == "1":
            r = reduce([zero] + r)
    h = [r[0], A.sub(r[1], onev), r[2], r[3], zero]
    f = [A.neg(x) for x in m] + [onev]
    return _gcd_degree(A, np.array(f), np.array(h))


def _degree(A, M):
    d = np.full(M.shape[1], -1, dtype=np.int64)
    for j in range(M.shape[0]):
        d = np.where(M[j] != A.Z, j, d)
    return d


def _gcd_degree(A, F, H):
    """Degree of gcd(F[:, i], H[:, i]) for every column (coefficient rows ascending)."""
    n = F.shape[1]
    cols = np.arange(n)
    dA, dB = _degree(A, F), _degree(A, H)
    Amat, Bmat = F.copy(), H.copy()
    for _ in range(16):
        active = dB >= 0
        if not active.any():
            break
        swap = active & (dA < dB)
        if swap.any():
            Amat[:, swap], Bmat[:, swap] = Bmat[:, swap], Amat[:, swap].copy()
            dA[swap], dB[swap] = dB[swap], dA[swap].copy()
        lcA = Amat[dA.clip(0), cols]
        lcB = Bmat[dB.clip(0), cols]
        c = A.neg(A.div(lcA, lcB))
        shift = dA - dB
        for j in range(Amat.shape[0]):
            src = j - shift
            val = Bmat[src.clip(0, Amat.shape[0] - 1), cols]
            val = np.where((src >= 0) & active, val, A.Z)
            Amat[j] = np.where(active, A.add(Amat[j], A.mul(c, val)), Amat[j])
        dA = _degree(A, Amat)
    else:
        raise AssertionError("gcd loop did not terminate")
    return dA


def count_points(curve, p, nu=1, threads=1, check_smooth=True):
    """Number of projective points of the curve over GF(p^nu)."""
    if not is_prime(p) or p < 3:
        raise InputError(f"{p} is not an odd prime")
    if not 1 <= nu <= 4:
        raise InputError("nu must be in 1..4")
    if curve.degree != 4:
        raise InputError("point counting is implemented for plane quartics")
    if check_smooth:
        from .geometry import quartic_smooth_mod_p
        if not quartic_smooth_mod_p(curve.form, p):
            raise PreconditionError(f"singular reduction at p={p}")
    form = _shifted_form(curve, p)
    ctx = make_field(p, nu)
    arith = _LogArith(_tables(p, nu))
    q = ctx.q
    chunks = [np.arange(s, min(s + CHUNK, q), dtype=np.int64) for s in range(0, q, CHUNK)]

    def work(ys):
        return int(_affine_counts(form, p, nu, ys, arith).sum())

    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            affine = sum(pool.map(work, chunks))
    else:
        affine = sum(work(ys) for ys in chunks)
    # line z = 0: points (x:1:0); (1:0:0) is off the curve after the shift
    inf = [0] * 5
    for (i, j, l), c in form.items():
        if l == 0:
            inf[i] = (inf[i] + c) % p
    return affine + count_roots(ctx, inf)


def count_points_naive(curve, p, nu=1):
    """Exhaustive evaluation over P^2(GF(p^nu)) with coordinate arithmetic."""
    ctx = make_field(p, nu)
    red = curve.reduce(p)
    k, q = ctx.k, ctx.q
    # all elements as coordinate vectors (q, k)
    digits = np.array([ctx.from_int(i) for i in range(q)], dtype=np.int64).reshape(q, k)
    red_rows = np.array(ctx._red, dtype=np.int64).reshape(-1, k) if k > 1 else None

    def vmul(a, b):
        prod = np.zeros(a.shape[:-1] + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                prod[..., i + j] += a[..., i] * b[..., j]
        out = prod[..., :k] % p
        for j in range(k, 2 * k - 1):
            out = (out + prod[..., j:j + 1] % p * red_rows[j - k]) % p
        return out % p

    def vpow(a, e):
        out = np.zeros_like(a)
        out[..., 0] = 1
        for _ in range(e):
            out = vmul(out, a)
        return out

    xp = [vpow(digits, e) for e in range(5)]

    def evaluate(xpows, yvec, zvec):
        total = np.zeros(xpows[0].shape, dtype=np.int64)
        for (i, j, l), c in red.items():
            mono = vmul(xpows[i], vmul(vpow(yvec, j), vpow(zvec, l)))
            total = (total + c * mono) % p
        return ~total.any(axis=-1)

    one = np.zeros((1, k), dtype=np.int64)
    one[0, 0] = 1
    zero = np.zeros((1, k), dtype=np.int64)
    count = 0
    for y in range(q):
        yv = digits[y:y + 1]
        count += int(evaluate(xp, yv, one).sum())
    count += int(evaluate(xp, one, zero).sum())
    count += int(evaluate([vpow(one, e) for e in range(5)], zero, zero).sum())
    return count


def weil_bound_ok(p, nu, N):
    d = N - p ** nu - 1
    return d * d <= 36 * p ** nu


@dataclass(frozen=True)
class ZetaNumerator:
    """h_p(x) = 1 + a x + b x^2 + c x^3 + p b x^4 + p^2 a x^5 + p^3 x^6."""

    p: int
    a: int
    b: int
    c: int

    def coefficients(self):
        p, a, b, c = self.p, self.a, self.b, self.c
        return [1, a, b, c, p * b, p * p * a, p ** 3]

    @property
    def trace(self):
        return -self.a

    def power_sums(self, n):
        """s_1..s_n of the Frobenius eigenvalues."""
        h = self.coefficients()
        e = [(-1) ** i * h[i] if i < len(h) else 0 for i in range(n + 1)]
        s = [0]
        for m in range(1, n + 1):
            v = sum((-1) ** (i - 1) * e[i] * s[m - i] for i in range(1, m))
            v += (-1) ** (m - 1) * m * e[m]
            s.append(v)
        return s[1:]

    def predicted_counts(self, n):
        p = self.p
        return [p ** (m + 1) + 1 - s for m, s in enumerate(self.power_sums(n))]

    def real_weil_polynomial(self):
        """Ascending coefficients of Y^3 + a Y^2 + (b - 3p) Y + (c - 2pa)."""
        p, a, b, c = self.p, self.a, self.b, self.c
        return [c - 2 * p * a, b - 3 * p, a, 1]


def satisfies_weil(h):
    """All roots of the real Weil polynomial are real and of size at most 2 sqrt(p).

    Checked exactly: the polynomial whose roots are the squares y_i^2 must have
    all its roots in [0, 4p], counted by Sturm sequences.
    """
    p = h.p
    if h.a * h.a > 36 * p or abs(h.b) > 15 * p or h.c * h.c > 400 * p ** 3:
        return False
    c0, c1, c2, _ = h.real_weil_polynomial()
    # R(Y) = Y*(Y^2 + c1) + (c2*Y^2 + c0) = Y*A(Y^2) + B(Y^2)
    # psi(W) = W*A(W)^2 - B(W)^2 has the squares of R's roots as roots
    A = [Fraction(c1), Fraction(1)]
    B = [Fraction(c0), Fraction(c2)]
    A2 = [A[0] * A[0], 2 * A[0] * A[1], A[1] * A[1]]
    psi = [Fraction(0)] + A2
    B2 = [B[0] * B[0], 2 * B[0] * B[1], B[1] * B[1]]
    psi = [x - (B2[i] if i < 3 else 0) for i, x in enumerate(psi)]
    from .exact import squarefree_part
    distinct = len(squarefree_part(psi)) - 1
    return count_real_roots(psi, 0, 4 * p) == distinct


def newton_assemble(p, counts):
    """Zeta numerator from N_1, N_2, N_3 via Newton's identities."""
    counts = list(counts)
    if len(counts) < 3:
        raise InputError("need N_1, N_2, N_3")
    for nu, N in enumerate(counts[:3], start=1):
        if not weil_bound_ok(p, nu, N):
            raise CountingError(f"N_{nu} = {N} violates the Weil bound for p={p}")
    s1, s2, s3 = (p ** nu + 1 - N for nu, N in enumerate(counts[:3], start=1))
    e1 = Fraction(s1)
    e2 = (e1 * s1 - s2) / 2
    e3 = (e2 * s1 - e1 * s2 + s3) / 3
    if any(x.denominator != 1 for x in (e1, e2, e3)):
        raise CountingError(f"non-integral symmetric functions from counts {counts}")
    h = ZetaNumerator(p, -int(e1), int(e2), -int(e3))
    if not satisfies_weil(h):
        raise CountingError(f"counts {counts} give a non-Weil polynomial at p={p}")
    return h


def verify_functional_equation(h, n4=None):
    """Palindromic shape of h and, when given, agreement with N_4."""
    p = h.p
    coeffs = h.coefficients()
    for k in range(4):
        if coeffs[6 - k] * p ** k != coeffs[k] * p ** 3:
            raise VerificationError(f"coefficient {k} breaks the functional equation")
    if n4 is not None:
        predicted = h.predicted_counts(4)[3]
        if predicted != n4:
            raise VerificationError(f"N_4 = {n4} but the numerator predicts {predicted}")
    return True


def zeta_numerator(curve, p, threads=1, nu_max=3):
    """Counts N_1..N_nu_max and the assembled numerator."""
    from .geometry import quartic_smooth_mod_p
    if not quartic_smooth_mod_p(curve.form, p):
        raise PreconditionError(f"singular reduction at p={p}")
    counts = [count_points(curve, p, nu, threads=threads, check_smooth=False)
              for nu in range(1, nu_max + 1)]
    return counts, newton_assemble(p, counts[:3])


def default_threads():
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity")
               else os.cpu_count() or 1)
