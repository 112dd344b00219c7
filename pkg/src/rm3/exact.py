"""Exact arithmetic: sparse multivariate polynomials and rational functions over Q.

A :class:`MultiPoly` is a map from exponent vectors to nonzero rational
coefficients over an ordered tuple of variable names.  Coefficients are
stored as ``int`` when integral and as :class:`fractions.Fraction`
otherwise.  The monomial order is graded lexicographic with the first
variable largest.

:class:`RatFunc` keeps numerator and denominator coprime, with the
denominator an integer polynomial of content 1 whose leading coefficient is
positive.  That form is unique, so equality is structural.

Text format (parse/format round-trip)::

    x^4 + 345/4*x^3*y - 16038/7*x^3*z   # comment

``*`` is optional between factors, parentheses and integer powers of
parenthesised expressions are accepted on input, and a single ``=`` reads
as ``lhs - rhs``.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .errors import DegenerateError, InputError, StructureError

Rational = Fraction

DEFAULT_VARIABLES = ("x", "y", "z", "m", "n", "p", "s", "t")


def _num(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"unsupported coefficient {c!r}")


def _key(e):
    return (sum(e), e)


def _addexp(e1, e2):
    return tuple([a + b for a, b in zip(e1, e2)])


class MultiPoly:
    """Sparse polynomial with rational coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise StructureError(f"repeated variable in {variables}")
        n = len(variables)
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise StructureError(f"exponent {e} does not match {variables}")
                c = _num(c)
                if c:
                    clean[e] = c
        self.variables = variables
        self.terms = clean

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, variables=()):
        variables = tuple(variables)
        c = _num(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name, variables=None):
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise StructureError(f"{name} not in {variables}")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {e: 1})

    @classmethod
    def from_coeffs(cls, var, coeffs, variables=None):
        """Univariate polynomial ``sum coeffs[i] * var**i``; coefficients may be polys."""
        variables = tuple(variables) if variables is not None else (var,)
        X = cls.var(var, variables)
        out = cls.constant(0, variables)
        power = cls.constant(1, variables)
        for c in coeffs:
            out = out + power * c
            power = power * X
        return out

    # -- basic predicates -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return Fraction(self.terms.get((0,) * len(self.variables), 0))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise StructureError(
                    f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _num(v) if isinstance(v, Fraction) else v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = _num(other)
            if not other:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables,
                                  {e: _num(c * other) for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return MultiPoly._raw(self.variables, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, MultiPoly):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return RatFunc(self._lift(other), self)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r}, variables={self.variables})"

    def __str__(self):
        return format_poly(self)

    # -- structure --------------------------------------------------------

    def _index(self, var):
        try:
            return self.variables.index(var)
        except ValueError:
            raise StructureError(f"{var} not among {self.variables}") from None

    def degree(self, var=None):
        """Degree in ``var``, or total degree when ``var`` is None; -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def leading_term(self):
        e = max(self.terms, key=_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1] if self.terms else 0

    def coefficients(self, var):
        """Map ``k -> coefficient of var**k`` (polynomials in the same ring)."""
        i = self._index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            out.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MultiPoly._raw(self.variables, t) for k, t in out.items()}

    def coefficient(self, var, k):
        return self.coefficients(var).get(k, MultiPoly.constant(0, self.variables))

    def univariate_coeffs(self, var=None):
        """Ascending rational coefficients of a polynomial in one variable."""
        used = self.used_variables()
        if var is None:
            if len(used) > 1:
                raise StructureError(f"not univariate: {used}")
            var = used[0] if used else self.variables[0] if self.variables else None
        if any(v != var for v in used):
            raise StructureError(f"not univariate in {var}: {used}")
        if not self.terms:
            return []
        i = self._index(var)
        out = [Fraction(0)] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            out[e[i]] = Fraction(c)
        return out

    def used_variables(self):
        n = len(self.variables)
        used = [False] * n
        for e in self.terms:
            for i in range(n):
                if e[i]:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def embed(self, variables):
        """Same polynomial in a larger (or reordered) variable list."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = [v for v in self.used_variables() if v not in variables]
        if missing:
            raise StructureError(f"cannot drop used variables {missing}")
        pos = [self.variables.index(v) if v in self.variables else -1 for v in variables]
        terms = {}
        for e, c in self.terms.items():
            terms[tuple(e[j] if j >= 0 else 0 for j in pos)] = c
        return MultiPoly._raw(variables, terms)

    def diff(self, var):
        i = self._index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = _num(c * e[i])
        return MultiPoly._raw(self.variables, out)

    def content(self):
        """Positive rational c with self/c an integer polynomial of content 1."""
        if not self.terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        return Fraction(abs(reduce(gcd, nums)), reduce(lcm, dens))

    def primitive(self):
        """Integer polynomial of content 1 with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self * (1 / c)

    def monic(self):
        return self * (1 / Fraction(self.leading_coefficient()))

    # -- evaluation -------------------------------------------------------

    def specialize(self, bindings):
        """Substitute rationals for some variables.

        Returns a polynomial in the remaining variables, or a Fraction when
        every variable is bound.
        """
        bindings = {v: Fraction(val) for v, val in bindings.items()}
        for v in bindings:
            self._index(v)
        keep = [i for i, v in enumerate(self.variables) if v not in bindings]
        bound = [(i, bindings[v]) for i, v in enumerate(self.variables) if v in bindings]
        terms = {}
        for e, c in self.terms.items():
            val = Fraction(c)
            for i, x in bound:
                if e[i]:
                    val *= x ** e[i]
            if val:
                k = tuple(e[i] for i in keep)
                terms[k] = terms.get(k, 0) + val
        newvars = tuple(self.variables[i] for i in keep)
        result = MultiPoly(newvars, terms)
        if not newvars:
            return result.constant_value()
        return result

    def evaluate(self, bindings):
        value = self.specialize(bindings)
        if isinstance(value, MultiPoly):
            raise StructureError(f"unbound variables {value.used_variables()}")
        return value

    def subs(self, mapping, variables=None):
        """Substitute polynomials or rational functions for variables."""
        return substitute(self, mapping, variables)

    def reduce_mod(self, p):
        """Coefficients mod p as ``{exp: int}``; denominators must be prime to p."""
        out = {}
        for e, c in self.terms.items():
            c = Fraction(c)
            if c.denominator % p == 0:
                raise DegenerateError(f"coefficient {c} has denominator divisible by {p}")
            r = c.numerator * pow(c.denominator, -1, p) % p
            if r:
                out[e] = r
        return out


def _mul_terms(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for e2, c2 in b.items():
        for e1, c1 in a.items():
            e = tuple([x + y for x, y in zip(e1, e2)])
            out[e] = get(e, 0) + c1 * c2
    return {e: _num(c) if isinstance(c, Fraction) else c for e, c in out.items() if c}


def poly_arith(a, b, op):
    """``op`` in {'add', 'sub', 'mul'}; operands must share a variable list."""
    if not isinstance(a, MultiPoly) or not isinstance(b, MultiPoly):
        raise StructureError("poly_arith expects two MultiPoly operands")
    if a.variables != b.variables:
        raise StructureError(f"variable lists differ: {a.variables} vs {b.variables}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InputError(f"unknown operation {op!r}")


def common_ring(*items):
    """Variable tuple containing every variable of the given polynomials."""
    out = []
    for it in items:
        for v in getattr(it, "variables", ()):
            if v not in out:
                out.append(v)
    return tuple(out)


# ---------------------------------------------------------------------------
# gcd over Z[x1..xn] on raw {exponent: int} dictionaries


_MOD = 2147483647


def _is_const(a):
    return len(a) == 1 and not any(next(iter(a)))


def _icontent(a):
    return abs(reduce(gcd, a.values()))


def _lt(a):
    return max(a, key=_key)


def _zdiv(a, b):
    """Exact quotient a/b in Z[x]; raises ArithmeticError when inexact."""
    if not b:
        raise ZeroDivisionError
    if _is_const(b):
        c = next(iter(b.values()))
        out = {}
        for e, v in a.items():
            q, r = divmod(v, c)
            if r:
                raise ArithmeticError("inexact integer division")
            out[e] = q
        return out
    eb = _lt(b)
    cb = b[eb]
    rem = dict(a)
    quo = {}
    while rem:
        er = _lt(rem)
        cr = rem[er]
        d = tuple(x - y for x, y in zip(er, eb))
        if min(d) < 0:
            raise ArithmeticError("inexact polynomial division")
        q, r = divmod(cr, cb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quo[d] = q
        for e, v in b.items():
            k = tuple(x + y for x, y in zip(e, d))
            nv = rem.get(k, 0) - q * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return quo


def _zsub(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _zscale(a, c):
    return {e: v * c for e, v in a.items()} if c else {}


def _zpow(a, n, nv):
    out = {(0,) * nv: 1}
    for _ in range(n):
        out = _mul_terms(out, a)
    return out


def _split(a, i):
    """Coefficients of a with respect to variable i: list indexed by degree."""
    d = max(e[i] for e in a)
    out = [{} for _ in range(d + 1)]
    for e, c in a.items():
        out[e[i]][e[:i] + (0,) + e[i + 1:]] = c
    return out


def _join(cs, i):
    out = {}
    for k, c in enumerate(cs):
        for e, v in c.items():
            out[e[:i] + (k,) + e[i + 1:]] = v
    return out


def _trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _prem(A, B, i, nv):
    dA, dB = len(A) - 1, len(B) - 1
    k = dA - dB + 1
    lcB = B[-1]
    R = [dict(c) for c in A]
    while len(R) - 1 >= dB and R:
        lcR = R[-1]
        s = len(R) - 1 - dB
        R = [_mul_terms(c, lcB) for c in R]
        for j, c in enumerate(B):
            R[j + s] = _zsub(R[j + s], _mul_terms(c, lcR))
        _trim(R)
        k -= 1
    if k > 0 and R:
        f = _zpow(lcB, k, nv)
        R = [_mul_terms(c, f) for c in R]
    return R


def _content_in(cs, nv):
    g = {}
    for c in cs:
        g = _zgcd(g, c, nv)
        if _is_const(g) and abs(next(iter(g.values()))) == 1:
            break
    return g


def _normalize_sign(a):
    if a and a[_lt(a)] < 0:
        return {e: -c for e, c in a.items()}
    return a


def _subresultant_gcd(A, B, i, nv):
    """Primitive gcd of two primitive polynomials given as coefficient lists in var i."""
    if len(A) < len(B):
        A, B = B, A
    one = {(0,) * nv: 1}
    g, h = one, one
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B, i, nv)
        if not R:
            break
        if len(R) == 1:
            return one
        A = B
        den = _mul_terms(g, _zpow(h, delta, nv))
        B = [_zdiv(c, den) for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = _zdiv(_zpow(g, delta, nv), _zpow(h, delta - 1, nv))
    cont = _content_in(B, nv)
    return _join([_zdiv(c, cont) for c in B], i)


def _eval_univariate_mod(a, i, point):
    """Reduce a to a dense univariate polynomial in var i, other vars at ``point`` mod _MOD."""
    d = max(e[i] for e in a)
    out = [0] * (d + 1)
    for e, c in a.items():
        v = c % _MOD
        for j, x in enumerate(e):
            if j != i and x:
                v = v * pow(point[j], x, _MOD) % _MOD
        out[e[i]] = (out[e[i]] + v) % _MOD
    return out


def _gcd_mod_degree(f, g):
    while g and g[-1] == 0:
        g.pop()
    while f and f[-1] == 0:
        f.pop()
    while g:
        inv = pow(g[-1], -1, _MOD)
        while len(f) >= len(g):
            c = f[-1] * inv % _MOD
            s = len(f) - len(g)
            for j, v in enumerate(g):
                f[j + s] = (f[j + s] - c * v) % _MOD
            while f and f[-1] == 0:
                f.pop()
        f, g = g, f
    return len(f) - 1


def _gcd_degree_bound(a, b, i, nv, rng):
    """Upper bound for deg_i gcd(a, b) from one modular specialization (None if unlucky)."""
    point = [rng.randrange(1, _MOD) for _ in range(nv)]
    fa = _eval_univariate_mod(a, i, point)
    fb = _eval_univariate_mod(b, i, point)
    if fa[-1] == 0 or fb[-1] == 0:
        return None
    return _gcd_mod_degree(fa, fb)


def _zgcd(a, b, nv):
    """gcd in Z[x1..xn] including integer content, leading coefficient positive."""
    if not a:
        return _normalize_sign(dict(b))
    if not b:
        return _normalize_sign(dict(a))
    ca, cb = _icontent(a), _icontent(b)
    g0 = gcd(ca, cb)
    if _is_const(a) or _is_const(b):
        return {(0,) * nv: g0}
    ma = [min(e[j] for e in a) for j in range(nv)]
    mb = [min(e[j] for e in b) for j in range(nv)]
    mono = tuple(min(x, y) for x, y in zip(ma, mb))
    a = {tuple(x - y for x, y in zip(e, ma)): c // ca for e, c in a.items()}
    b = {tuple(x - y for x, y in zip(e, mb)): c // cb for e, c in b.items()}
    head = {mono: g0}
    va = {j for j in range(nv) if any(e[j] for e in a)}
    vb = {j for j in range(nv) if any(e[j] for e in b)}
    if not va or not vb or not (va & vb):
        return head
    if va != vb:
        # a variable present in only one operand cannot divide the gcd
        j = min(va ^ vb)
        if j in va:
            g = _content_in(_split(a, j), nv)
            rest = _zgcd(g, b, nv)
        else:
            g = _content_in(_split(b, j), nv)
            rest = _zgcd(a, g, nv)
        return _normalize_sign(_mul_terms(head, rest))
    rng = random.Random(len(a) * 1000003 + len(b))
    bounds = {}
    for j in sorted(va):
        bd = None
        for _ in range(3):
            bd = _gcd_degree_bound(a, b, j, nv, rng)
            if bd is not None:
                break
        bounds[j] = bd
        if bd == 0:
            # gcd is free of x_j, hence divides every x_j-coefficient of a
            g = _content_in(_split(a, j), nv)
            rest = _zgcd(g, b, nv) if not _is_const(g) else {(0,) * nv: 1}
            return _normalize_sign(_mul_terms(head, rest))
    i = min(va, key=lambda j: (bounds[j] if bounds[j] is not None else 99,
                               max(max(e[j] for e in a), max(e[j] for e in b))))
    A, B = _split(a, i), _split(b, i)
    contA, contB = _content_in(A, nv), _content_in(B, nv)
    cg = _zgcd(contA, contB, nv)
    if not _is_const(contA):
        A = [_zdiv(c, contA) for c in A]
    if not _is_const(contB):
        B = [_zdiv(c, contB) for c in B]
    G = _subresultant_gcd(A, B, i, nv)
    return _normalize_sign(_mul_terms(_mul_terms(head, cg), G))


def _integer_terms(P):
    den = reduce(lcm, (Fraction(c).denominator for c in P.terms.values()), 1)
    return {e: int(c * den) for e, c in P.terms.items()}


def poly_gcd(a, b):
    """Greatest common divisor over Q, primitive with positive leading coefficient.

    ``poly_gcd(0, 0)`` is the zero polynomial.
    """
    if a.variables != b.variables:
        raise StructureError(f"variable lists differ: {a.variables} vs {b.variables}")
    nv = len(a.variables)
    g = _zgcd(_integer_terms(a), _integer_terms(b), nv)
    if not g:
        return MultiPoly._raw(a.variables, {})
    c = _icontent(g)
    return MultiPoly._raw(a.variables, {e: v // c for e, v in g.items()})


def exact_div(a, b):
    """Quotient a/b when b divides a exactly over Q; ArithmeticError otherwise."""
    if a.variables != b.variables:
        raise StructureError("variable lists differ")
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return a
    ia, ib = a.primitive(), b.primitive()
    try:
        q = _zdiv(ia.terms, ib.terms)
    except ArithmeticError:
        raise ArithmeticError("polynomial does not divide exactly") from None
    scale = Fraction(a.leading_coefficient()) / ia.leading_coefficient() / (
        Fraction(b.leading_coefficient()) / ib.leading_coefficient())
    return MultiPoly._raw(a.variables, q) * scale




def squarefree_decomposition(f, var=None):
    """Yun's algorithm over Q: list of (factor, multiplicity) with f = c * prod factor**mult."""
    if var is None:
        used = f.used_variables()
        if len(used) != 1:
            raise StructureError("squarefree_decomposition needs a univariate polynomial")
        var = used[0]
    if f.degree(var) <= 0:
        return []
    df = f.diff(var)
    a0 = poly_gcd(f, df)
    b = exact_div(f, a0)
    c = exact_div(df, a0)
    d = c - b.diff(var)
    out = []
    i = 1
    while b.degree(var) > 0:
        a = poly_gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.diff(var)
        if a.degree(var) > 0:
            out.append((a, i))
        i += 1
    return out


def resultant(f, g, var):
    """Resultant with respect to ``var`` via the Sylvester determinant (Bareiss)."""
    if f.variables != g.variables:
        raise StructureError("variable lists differ")
    m, n = f.degree(var), g.degree(var)
    if m < 0 or n < 0:
        return MultiPoly.constant(0, f.variables)
    if m == 0 and n == 0:
        return MultiPoly.constant(1, f.variables)
    fc = f.coefficients(var)
    gc = g.coefficients(var)
    zero = MultiPoly.constant(0, f.variables)
    size = m + n
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + (m - k)] = fc.get(k, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + (n - k)] = gc.get(k, zero)
        rows.append(row)
    return _bareiss_det(rows, f.variables)


def _bareiss_det(M, variables):
    M = [list(r) for r in M]
    n = len(M)
    sign = 1
    prev = MultiPoly.constant(1, variables)
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((r for r in range(k + 1, n) if M[r][k]), None)
            if swap is None:
                return MultiPoly.constant(0, variables)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = exact_div(num, prev) if num else num
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Quotient of two polynomials over Q in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, normalize=True):
        if not isinstance(num, MultiPoly):
            if isinstance(den, MultiPoly):
                num = MultiPoly.constant(num, den.variables)
            else:
                raise StructureError("RatFunc needs at least one MultiPoly")
        if not isinstance(den, MultiPoly):
            den = MultiPoly.constant(den, num.variables)
        if num.variables != den.variables:
            raise StructureError(f"variable lists differ: {num.variables} vs {den.variables}")
        if not den:
            raise DegenerateError("rational function with zero denominator")
        if normalize:
            num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den

    @classmethod
    def var(cls, name, variables=None):
        X = MultiPoly.var(name, variables)
        return cls(X, MultiPoly.constant(1, X.variables), normalize=False)

    @classmethod
    def constant(cls, c, variables=()):
        return cls(MultiPoly.constant(c, variables), MultiPoly.constant(1, variables))

    @property
    def variables(self):
        return self.num.variables

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.variables != self.variables:
                raise StructureError(
                    f"variable lists differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise StructureError(
                    f"variable lists differ: {self.variables} vs {other.variables}")
            return RatFunc(other, MultiPoly.constant(1, self.variables), normalize=False)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatFunc(MultiPoly.constant(other, self.variables),
                           MultiPoly.constant(1, self.variables), normalize=False)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer exponent required")
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n, normalize=False)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def is_polynomial(self):
        return self.den.is_constant()

    def diff(self, var):
        return RatFunc(self.num.diff(var) * self.den - self.num * self.den.diff(var),
                       self.den * self.den)

    def embed(self, variables):
        return RatFunc(self.num.embed(variables), self.den.embed(variables), normalize=False)

    def specialize(self, bindings):
        """Substitute rationals; a vanishing denominator raises DegenerateError."""
        den = self.den.specialize(bindings)
        if (isinstance(den, MultiPoly) and not den) or (not isinstance(den, MultiPoly) and den == 0):
            shown = ", ".join(f"{k}={v}" for k, v in bindings.items())
            raise DegenerateError(f"denominator vanishes at {shown}")
        num = self.num.specialize(bindings)
        if isinstance(den, MultiPoly):
            return RatFunc(num, den)
        return num / den

    def evaluate(self, bindings):
        value = self.specialize(bindings)
        if isinstance(value, RatFunc):
            raise StructureError(f"unbound variables remain in {value}")
        return value

    def subs(self, mapping, variables=None):
        return substitute(self, mapping, variables)

    def compose(self, var, g):
        return ratfunc_compose(self, g, var)

    def same_as(self, other):
        """Equality by cross-multiplication; valid for unreduced operands."""
        other = self._lift(other)
        return self.num * other.den == other.num * self.den


def _reduce_fraction(num, den):
    if not num:
        return num, MultiPoly.constant(1, num.variables)
    if den.is_constant():
        c = den.constant_value()
        return num * (1 / c), MultiPoly.constant(1, num.variables)
    if not num.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = exact_div(num, g)
            den = exact_div(den, g)
    pden = den.primitive()
    scale = Fraction(den.leading_coefficient()) / pden.leading_coefficient()
    return num * (1 / scale), pden


def substitute(f, mapping, variables=None, normalize=True):
    """Simultaneous substitution of polynomials/rational functions for variables.

    The result lives in ``variables`` when given, otherwise in the remaining
    variables of ``f`` followed by the new variables of the substituted values.
    With ``normalize=False`` a rational result is left unreduced, which is
    enough for identity checks by cross-multiplication.
    """
    if isinstance(f, RatFunc):
        num = substitute(f.num, mapping, variables, normalize)
        den = substitute(f.den, mapping, variables, normalize)
        if isinstance(num, MultiPoly):
            num = RatFunc(num, MultiPoly.constant(1, num.variables), normalize=False)
        if isinstance(den, MultiPoly):
            den = RatFunc(den, MultiPoly.constant(1, den.variables), normalize=False)
        if not den.num:
            raise DegenerateError("substitution makes the denominator identically zero")
        return RatFunc(num.num * den.den, num.den * den.num, normalize=normalize)
    for v in mapping:
        f._index(v)
    if variables is None:
        out = [v for v in f.variables if v not in mapping]
        for val in mapping.values():
            for v in getattr(val, "variables", ()):
                if v not in out:
                    out.append(v)
        variables = tuple(out)
    variables = tuple(variables)

    def lift(val):
        if isinstance(val, RatFunc):
            return val.num.embed(variables), val.den.embed(variables)
        if isinstance(val, MultiPoly):
            return val.embed(variables), None
        return MultiPoly.constant(val, variables), None

    subs_idx = []
    for i, v in enumerate(f.variables):
        if v in mapping:
            n, d = lift(mapping[v])
            subs_idx.append((i, n, d, max((e[i] for e in f.terms), default=0)))
    rational = any(d is not None for _, _, d, _ in subs_idx)
    keep = [(i, variables.index(v)) for i, v in enumerate(f.variables) if v not in mapping]
    for i, v in enumerate(f.variables):
        if v not in mapping and v not in variables:
            if any(e[i] for e in f.terms):
                raise StructureError(f"variable {v} missing from target ring")

    npow, dpow = {}, {}
    one = MultiPoly.constant(1, variables)

    def power(cache, key, base, k):
        if (key, k) not in cache:
            cache[(key, k)] = base ** k if k else one
        return cache[(key, k)]

    total = MultiPoly.constant(0, variables)
    nvar = len(variables)
    for e, c in f.terms.items():
        mono = [0] * nvar
        for i, j in keep:
            mono[j] += e[i]
        term = MultiPoly._raw(variables, {tuple(mono): c})
        for i, n, d, deg in subs_idx:
            term = term * power(npow, i, n, e[i])
            if d is not None:
                term = term * power(dpow, i, d, deg - e[i])
        total = total + term
    if not rational:
        return total
    den = one
    for i, n, d, deg in subs_idx:
        if d is not None:
            den = den * power(dpow, i, d, deg)
    return RatFunc(total, den, normalize=normalize)


def ratfunc_compose(f, g, var=None):
    """``f`` with ``var`` replaced by ``g``; ``var`` defaults to f's only variable."""
    if var is None:
        used = f.num.used_variables() + tuple(
            v for v in f.den.used_variables() if v not in f.num.used_variables())
        if len(used) != 1:
            raise StructureError("compose needs the substitution variable for multivariate f")
        var = used[0]
    result = substitute(f, {var: g})
    if isinstance(result, MultiPoly):
        result = RatFunc(result, MultiPoly.constant(1, result.variables), normalize=False)
    return result


def specialize(f, bindings):
    return f.specialize(bindings)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text, variables):
    names = sorted(variables, key=len, reverse=True)
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if not m or m.end() == pos:
                break
            pos = m.end()
            num, ident, op = m.groups()
            if num is not None:
                tokens.append(("num", int(num)))
            elif ident is not None:
                k = 0
                while k < len(ident):
                    if ident[k].isdigit():
                        j = k
                        while j < len(ident) and ident[j].isdigit():
                            j += 1
                        tokens.append(("num", int(ident[k:j])))
                        k = j
                        continue
                    for name in names:
                        if ident.startswith(name, k):
                            tokens.append(("var", name))
                            k += len(name)
                            break
                    else:
                        raise InputError(f"unknown variable in {ident!r}")
            else:
                if op not in "+-*/^()=":
                    raise InputError(f"unexpected character {op!r}")
                tokens.append(("op", op))
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise InputError(f"expected {op!r}, got {tok[1]!r}")

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        sign = 1
        while self.peek() in (("op", "+"), ("op", "-")):
            if self.take()[1] == "-":
                sign = -sign
        value = self.power()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                value = value * self.power()
            elif (kind, val) == ("op", "/"):
                self.take()
                d = self.power()
                if not d.is_constant() or not d:
                    raise InputError("division by a non-constant or zero")
                value = value * (1 / d.constant_value())
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                value = value * self.power()
            else:
                break
        return value * sign

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise InputError("exponent must be a non-negative integer")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.constant(val, self.variables)
        if kind == "var":
            return MultiPoly.var(val, self.variables)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise InputError(f"unexpected token {val!r}")


def parse_poly(text, variables=None):
    """Parse the repository polynomial text format.

    Without ``variables`` the ring is the default names that occur, in the
    order x, y, z, m, n, p, s, t.
    """
    pool = tuple(variables) if variables is not None else DEFAULT_VARIABLES
    tokens = _tokenize(text, pool)
    if not tokens:
        raise InputError("empty polynomial text")
    if variables is None:
        seen = {val for kind, val in tokens if kind == "var"}
        pool = tuple(v for v in DEFAULT_VARIABLES if v in seen)
    parser = _Parser(tokens, pool)
    value = parser.expr()
    if parser.peek() == ("op", "="):
        parser.take()
        value = value - parser.expr()
    if parser.i != len(tokens):
        raise InputError(f"trailing input near token {parser.peek()[1]!r}")
    return value


def _format_coeff(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(P):
    if not P.terms:
        return "0"
    pieces = []
    for e in sorted(P.terms, key=_key, reverse=True):
        c = Fraction(P.terms[e])
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(P.variables, e) if k)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (ascending Fraction lists)


def _utrim(f):
    f = [Fraction(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def upoly_divmod(f, g):
    f, g = _utrim(f), _utrim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    while len(r) >= len(g) and r:
        c = r[-1] / g[-1]
        s = len(r) - len(g)
        q[s] = c
        for i, v in enumerate(g):
            r[s + i] -= c * v
        r = _utrim(r)
    return q, r


def upoly_gcd(f, g):
    """Monic gcd over Q."""
    f, g = _utrim(f), _utrim(g)
    while g:
        f, g = g, upoly_divmod(f, g)[1]
    return [c / f[-1] for c in f] if f else f


def upoly_deriv(f):
    return _utrim([i * c for i, c in enumerate(f)][1:])


def upoly_eval(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def squarefree_part(f):
    f = _utrim(f)
    g = upoly_gcd(f, upoly_deriv(f))
    return upoly_divmod(f, g)[0] if len(g) > 1 else [c / f[-1] for c in f]


def sturm_sequence(f):
    seq = [_utrim(f), upoly_deriv(f)]
    while seq[-1]:
        r = upoly_divmod(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return seq[:-1]


def _sign_changes(seq, x):
    signs = [s for s in (upoly_eval(f, x) for f in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(f, lo, hi):
    """Number of distinct real roots of f in the closed interval [lo, hi]."""
    f = squarefree_part(f)
    if len(f) <= 1:
        return 0
    lo, hi = Fraction(lo), Fraction(hi)
    seq = sturm_sequence(f)
    n = _sign_changes(seq, lo) - _sign_changes(seq, hi)
    return n + (1 if upoly_eval(f, lo) == 0 else 0)
