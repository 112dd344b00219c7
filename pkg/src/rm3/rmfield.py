"""The ring O_K = Z[t]/(t^3 + t^2 - 2t - 1) and real-multiplication factors.

``t`` is 2cos(2 pi/7) under the first embedding; the Galois generator is
t -> t^2 - 2.  A zeta numerator with real multiplication by O_K factors as
g(x) g^s(x) g^{s^2}(x) with g(x) = 1 + alpha x + p x^2, and
:func:`rm_factor` recovers alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import AmbiguityError, InputError, RMFailure
from .exact import MultiPoly, count_real_roots, squarefree_part
from .zeta import ZetaNumerator

MINPOLY = (-1, -2, 1, 1)  # ascending: t^3 + t^2 - 2t - 1


class OKElem:
    """u + v t + w t^2; coefficients may be ints, numpy arrays or polynomials."""

    __slots__ = ("u", "v", "w")

    def __init__(self, u=0, v=0, w=0):
        self.u, self.v, self.w = u, v, w

    @classmethod
    def t(cls):
        return cls(0, 1, 0)

    def coords(self):
        return (self.u, self.v, self.w)

    def _other(self, other):
        if isinstance(other, OKElem):
            return other
        return OKElem(other, 0, 0)

    def __add__(self, other):
        o = self._other(other)
        return OKElem(self.u + o.u, self.v + o.v, self.w + o.w)

    __radd__ = __add__

    def __neg__(self):
        return OKElem(-self.u, -self.v, -self.w)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        c0 = self.u * o.u
        c1 = self.u * o.v + self.v * o.u
        c2 = self.u * o.w + self.v * o.v + self.w * o.u
        c3 = self.v * o.w + self.w * o.v
        c4 = self.w * o.w
        # t^3 = 1 + 2t - t^2, t^4 = -1 - t + 3t^2
        return OKElem(c0 + c3 - c4, c1 + 2 * c3 - c4, c2 - c3 + 3 * c4)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = OKElem(1, 0, 0)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._other(other)
        return self.coords() == o.coords()

    def __hash__(self):
        return hash(self.coords())

    def __repr__(self):
        return f"OKElem({self.u}, {self.v}, {self.w})"

    def __str__(self):
        return format_ok(self)

    def sigma(self):
        return galois_sigma(self)

    def conjugates(self):
        s1 = galois_sigma(self)
        return [self, s1, galois_sigma(s1)]

    def trace(self):
        return 3 * self.u - self.v + 5 * self.w

    def norm(self):
        a, b, c = self.conjugates()
        return (a * b * c).u

    def charpoly(self):
        """(e1, e2, e3) of the conjugates: Z^3 - e1 Z^2 + e2 Z - e3."""
        a, b, c = self.conjugates()
        e2 = (a * b + a * c + b * c).u
        return self.trace(), e2, self.norm()

    def embeddings(self):
        return [self.u + self.v * r + self.w * r * r for r in EMBEDDING_ROOTS]


def ok_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise InputError(f"unknown operation {op!r}")


def galois_sigma(a):
    """Image under t -> t^2 - 2, using (t^2 - 2)^2 = 3 - t - t^2."""
    return OKElem(a.u - 2 * a.v + 3 * a.w, -a.w, a.v - a.w)


EMBEDDING_ROOTS = tuple(2 * math.cos(2 * math.pi * k / 7) for k in (1, 2, 3))


def format_ok(a):
    parts = []
    for c, mono in ((a.u, ""), (a.v, "t"), (a.w, "t^2")):
        if not c:
            continue
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([first] + [f"{s} {b}" for s, b in parts[1:]])


@lru_cache(maxsize=1)
def matching_relations():
    """Check by symbolic expansion how h's coefficients depend on the conjugates.

    With g_i = 1 + A_i x + P x^2 the product g_1 g_2 g_3 has x, x^2, x^3
    coefficients E1, E2 + 3P and E3 + 2P E1 (E_k elementary symmetric in
    A_i).  Returns the inverse map as a function (p, a, b, c) -> (e1, e2, e3).
    """
    names = ("X", "A1", "A2", "A3", "P")
    X, A1, A2, A3, P = (MultiPoly.var(v, names) for v in names)
    prod = MultiPoly.constant(1, names)
    for A in (A1, A2, A3):
        prod = prod * (1 + A * X + P * X ** 2)
    co = prod.coefficients("X")
    E1 = A1 + A2 + A3
    E2 = A1 * A2 + A1 * A3 + A2 * A3
    E3 = A1 * A2 * A3
    expected = {1: E1, 2: E2 + 3 * P, 3: E3 + 2 * P * E1, 4: P * E2 + 3 * P ** 2,
                5: P ** 2 * E1, 6: P ** 3}
    for k, val in expected.items():
        if co[k] != val:
            raise AssertionError(f"x^{k} coefficient relation fails")
    return lambda p, a, b, c: (a, b - 3 * p, c - 2 * p * a)


def expand_factor(alpha, p):
    """Zeta numerator prod_i (1 + sigma^i(alpha) x + p x^2)."""
    e1, e2, e3 = alpha.charpoly()
    return ZetaNumerator(p, e1, e2 + 3 * p, e3 + 2 * p * e1)


def _weil_cubic_ok(e, p):
    """Roots of Z^3 - e1 Z^2 + e2 Z - e3 are real with |root| <= 2 sqrt(p)."""
    e1, e2, e3 = e
    # Z^3 + e2 Z = Z*A(Z^2), -e1 Z^2 - e3 = B(Z^2); squares of roots solve W A^2 - B^2
    A = [Fraction(e2), Fraction(1)]
    B = [Fraction(-e3), Fraction(-e1)]
    psi = [Fraction(0), A[0] ** 2, 2 * A[0] * A[1], A[1] ** 2]
    for i, v in enumerate([B[0] ** 2, 2 * B[0] * B[1], B[1] ** 2]):
        psi[i] -= v
    return count_real_roots(psi, 0, 4 * p) == len(squarefree_part(psi)) - 1


@dataclass(frozen=True)
class RMFactor:
    p: int
    alpha: OKElem

    def g(self):
        """Coefficients (1, alpha, p) of g_p."""
        return (1, self.alpha, self.p)

    def __str__(self):
        return f"1 + ({format_ok(self.alpha)}) x + {self.p} x^2"


def canonical(alpha):
    """Lexicographically smallest coordinate triple among the conjugates."""
    return min(alpha.conjugates(), key=OKElem.coords)


def coordinate_bounds(p):
    """Integer bounds on |u|, |v|, |w| when every embedding lies in [-2 sqrt p, 2 sqrt p]."""
    r = EMBEDDING_ROOTS
    E = [[1.0, x, x * x] for x in r]
    det = (E[0][0] * (E[1][1] * E[2][2] - E[1][2] * E[2][1])
           - E[0][1] * (E[1][0] * E[2][2] - E[1][2] * E[2][0])
           + E[0][2] * (E[1][0] * E[2][1] - E[1][1] * E[2][0]))
    inv = [[0.0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [k for k in range(3) if k != j]
            cols = [k for k in range(3) if k != i]
            minor = (E[rows[0]][cols[0]] * E[rows[1]][cols[1]]
                     - E[rows[0]][cols[1]] * E[rows[1]][cols[0]])
            inv[i][j] = (-1) ** (i + j) * minor / det
    bound = 2 * math.sqrt(p)
    # one unit of slack absorbs floating-point error; candidates are checked exactly
    return [int(bound * sum(abs(x) for x in row)) + 1 for row in inv]


def rm_factor(h):
    """alpha in O_K with prod sigma^i(1 + alpha x + p x^2) = h, canonicalised."""
    if not isinstance(h, ZetaNumerator):
        raise InputError("rm_factor expects a ZetaNumerator")
    p = h.p
    e1, e2, e3 = matching_relations()(p, h.a, h.b, h.c)
    if not _weil_cubic_ok((e1, e2, e3), p):
        raise RMFailure(f"numerator at p={p} violates the Weil bounds")
    _, bv, bw = coordinate_bounds(p)
    found = set()
    for v in range(-bv, bv + 1):
        for w in range(-bw, bw + 1):
            num = e1 + v - 5 * w
            if num % 3:
                continue
            alpha = OKElem(num // 3, v, w)
            if alpha.charpoly() == (e1, e2, e3):
                found.add(canonical(alpha))
    if not found:
        raise RMFailure(f"no alpha in O_K reproduces h at p={p}")
    if len(found) > 1:
        raise AmbiguityError(f"{len(found)} non-conjugate solutions at p={p}",
                             sorted(found, key=OKElem.coords))
    return RMFactor(p, found.pop())


def verify_table_row(p, computed, table_alpha, table_trace):
    """Computed alpha is conjugate to the table entry and the trace column is -e1."""
    if computed.p != p:
        return False
    if not isinstance(table_alpha, OKElem):
        table_alpha = OKElem(*table_alpha)
    conjugate = canonical(table_alpha) == canonical(computed.alpha)
    return conjugate and table_trace == -computed.alpha.trace()
