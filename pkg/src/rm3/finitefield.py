"""Finite fields GF(p^k), k <= 4, and univariate polynomial arithmetic over them.

Field elements are tuples of ``k`` residues (power-basis coordinates with
respect to the modulus).  Polynomials over a field are lists of elements in
ascending degree with no trailing zeros; the zero polynomial is ``[]``.

:class:`LogTables` provides exp/log/Zech tables over integer encodings
``sum c_i p^i`` for the vectorised point-counting kernel.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import numpy as np

from .errors import InputError

MAX_DEGREE = 4
# residue fields built from an explicit modulus may be larger
MAX_MODULUS_DEGREE = 24


def is_prime(n):
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """GF(p^k) as GF(p)[X]/(modulus)."""

    def __init__(self, p, k=1, modulus=None):
        if not isinstance(p, int) or p < 3 or not is_prime(p):
            raise InputError(f"{p} is not an odd prime")
        limit = MAX_DEGREE if modulus is None else MAX_MODULUS_DEGREE
        if not 1 <= k <= limit:
            raise InputError(f"extension degree must be in 1..{limit}, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        if modulus is None:
            modulus = _smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InputError("modulus must be monic of degree k")
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        # X^(k+j) as power-basis vectors, for reduction
        self._red = []
        v = [(-c) % p for c in modulus[:k]]
        for _ in range(k - 1):
            self._red.append(tuple(v))
            carry = v[-1]
            v = [0] + v[:-1]
            v = [(a + carry * b) % p for a, b in zip(v, [(-c) % p for c in modulus[:k]])]
        self._red.append(tuple(v))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- element arithmetic on raw tuples ----------------------------------

    def elem(self, value):
        """Coerce an int, a coefficient sequence or a FieldElem to a raw element."""
        if isinstance(value, FieldElem):
            return value.coeffs
        if isinstance(value, int):
            return ((value % self.p),) + (0,) * (self.k - 1)
        value = tuple(int(c) % self.p for c in value)
        if len(value) != self.k:
            raise InputError(f"element needs {self.k} coordinates")
        return value

    def __call__(self, value):
        return FieldElem(self, self.elem(value))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def scale(self, a, c):
        p = self.p
        return tuple(x * c % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = prod[:k]
        for j in range(k, 2 * k - 1):
            c = prod[j]
            if c:
                red = self._red[j - k]
                for i in range(k):
                    out[i] += c * red[i]
        return tuple(v % p for v in out)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return (pow(a[0], -1, self.p),)
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a, times=1):
        for _ in range(times % self.k if self.k > 1 else 0):
            a = self.pow(a, self.p)
        return a

    def is_zero(self, a):
        return not any(a)

    def to_int(self, a):
        out = 0
        for c in reversed(a):
            out = out * self.p + c
        return out

    def from_int(self, n):
        out = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            out.append(r)
        return tuple(out)

    def elements(self):
        """All q elements in integer-encoding order."""
        for digits in itertools.product(range(self.p), repeat=self.k):
            yield tuple(reversed(digits))

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def generator(self):
        """A primitive element (smallest in integer encoding)."""
        fac = prime_factors(self.q - 1)
        for n in range(1, self.q):
            g = self.from_int(n)
            if all(self.pow(g, (self.q - 1) // r) != self.one for r in fac):
                return g
        raise AssertionError("no primitive element")

    def embed_prime(self, c):
        return self.elem(c)

    # -- polynomials: ascending lists of raw elements ----------------------

    def poly(self, coeffs):
        """Polynomial from ints/elements, trimmed."""
        return self.trim([self.elem(c) for c in coeffs])

    def trim(self, f):
        f = list(f)
        while f and not any(f[-1]):
            f.pop()
        return f

    def poly_add(self, f, g):
        if len(f) < len(g):
            f, g = g, f
        out = list(f)
        for i, c in enumerate(g):
            out[i] = self.add(out[i], c)
        return self.trim(out)

    def poly_sub(self, f, g):
        return self.poly_add(f, [self.neg(c) for c in g])

    def poly_mul(self, f, g):
        if not f or not g:
            return []
        out = [self.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if any(a):
                for j, b in enumerate(g):
                    out[i + j] = self.add(out[i + j], self.mul(a, b))
        return self.trim(out)

    def poly_scale(self, f, c):
        return self.trim([self.mul(a, c) for a in f])

    def poly_divmod(self, f, g):
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(f)
        dg = len(g) - 1
        if len(r) - 1 < dg:
            return [], self.trim(r)
        inv = self.inv(g[-1])
        quo = [self.zero] * (len(r) - dg)
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if not any(c):
                continue
            c = self.mul(c, inv)
            quo[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] = self.sub(r[i - dg + j], self.mul(c, g[j]))
        return self.trim(quo), self.trim(r[:dg])

    def poly_mod(self, f, g):
        return self.poly_divmod(f, g)[1]

    def poly_monic(self, f):
        if not f:
            return f
        return self.poly_scale(f, self.inv(f[-1]))

    def poly_gcd(self, f, g):
        f, g = self.trim(f), self.trim(g)
        while g:
            f, g = g, self.poly_mod(f, g)
        return self.poly_monic(f)

    def poly_powmod(self, f, e, m):
        result = [self.one]
        base = self.poly_mod(f, m)
        while e:
            if e & 1:
                result = self.poly_mod(self.poly_mul(result, base), m)
            e >>= 1
            if e:
                base = self.poly_mod(self.poly_mul(base, base), m)
        return result

    def poly_deriv(self, f):
        return self.trim([self.scale(c, i) for i, c in enumerate(f)][1:])

    def poly_eval(self, f, x):
        acc = self.zero
        for c in reversed(f):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_pth_root(self, f):
        """g with g^p = f, for f whose derivative vanishes."""
        p = self.p
        if any(any(c) for i, c in enumerate(f) if i % p):
            raise InputError("polynomial is not a p-th power")
        return self.trim([self.frobenius(f[i], self.k - 1) for i in range(0, len(f), p)])

    def x_power_q(self, f):
        """X^q mod f."""
        return self.poly_powmod([self.zero, self.one], self.q, f)


@lru_cache(maxsize=None)
def make_field(p, k=1):
    """Field context with the lexicographically smallest monic irreducible modulus."""
    return FieldCtx(p, k)


def _is_irreducible(p, f):
    """Rabin's test for a monic polynomial given as ascending int coefficients."""
    base = FieldCtx.__new__(FieldCtx)
    base.p, base.k, base.q = p, 1, p
    base.modulus, base.zero, base.one, base._red = (0, 1), (0,), (1,), []
    poly = [(c,) for c in f]
    k = len(f) - 1
    X = [(0,), (1,)]

    def frob_power(j):
        return base.poly_powmod(X, p ** j, poly)

    if base.poly_sub(frob_power(k), X):
        return False
    for r in prime_factors(k):
        h = base.poly_sub(frob_power(k // r), X)
        if len(base.poly_gcd(poly, h)) > 1:
            return False
    return True


def _smallest_irreducible(p, k):
    if k == 1:
        return (0, 1)
    for top in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(top)) + (1,)
        if _is_irreducible(p, coeffs):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


def random_irreducible(p, k, seed=0):
    """A monic irreducible polynomial of degree k found by seeded random search.

    Much faster than the lexicographic search for large p, where whole
    families such as X^3 + c can be reducible.
    """
    rng = random.Random(seed)
    while True:
        coeffs = tuple(rng.randrange(p) for _ in range(k)) + (1,)
        if k == 1 or _is_irreducible(p, coeffs):
            return coeffs


class FieldElem:
    """Element of GF(p^k) with operator overloading."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = ctx.elem(coeffs) if not isinstance(coeffs, tuple) else coeffs

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise InputError("elements of different fields")
            return other.coeffs
        return self.ctx.elem(other)

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.coeffs, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.coeffs, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self._other(other), self.coeffs))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.coeffs, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.div(self.coeffs, self._other(other)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.coeffs))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.coeffs, e))

    def __eq__(self, other):
        try:
            return self.coeffs == self._other(other)
        except InputError:
            return False

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FieldElem({self.coeffs}, p={self.ctx.p}, k={self.ctx.k})"


# ---------------------------------------------------------------------------
# root counting


def _as_poly(ctx, f):
    f = ctx.trim([ctx.elem(c) for c in f])
    if not f:
        raise InputError("zero polynomial")
    return f


def count_roots(ctx, f):
    """Number of distinct roots of f in GF(q)."""
    f = ctx.poly_monic(_as_poly(ctx, f))
    if len(f) == 1:
        return 0
    if len(f) == 2:
        return 1
    xq = ctx.x_power_q(f)
    return len(ctx.poly_gcd(f, ctx.poly_sub(xq, [ctx.zero, ctx.one]))) - 1


def squarefree_decomposition(ctx, f):
    """List of (g, m): monic squarefree pairwise coprime g with f = c * prod g^m."""
    f = ctx.poly_monic(_as_poly(ctx, f))
    if len(f) == 1:
        return []
    out = {}
    df = ctx.poly_deriv(f)
    if not df:
        for g, m in squarefree_decomposition(ctx, ctx.poly_pth_root(f)):
            out[m * ctx.p] = g
        return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])
    c = ctx.poly_gcd(f, df)
    w = ctx.poly_divmod(f, c)[0]
    i = 1
    while len(w) > 1:
        y = ctx.poly_gcd(w, c)
        fac = ctx.poly_divmod(w, y)[0]
        if len(fac) > 1:
            out[i] = fac
        i += 1
        w = y
        c = ctx.poly_divmod(c, y)[0]
    pairs = [(g, m) for m, g in out.items()]
    if len(c) > 1:
        pairs += [(g, m * ctx.p) for g, m in squarefree_decomposition(ctx, ctx.poly_pth_root(c))]
    return sorted(pairs, key=lambda t: t[1])


def count_roots_with_multiplicity_profile(ctx, f):
    """Multiplicities of the distinct roots of f lying in GF(q), descending."""
    out = []
    for g, m in squarefree_decomposition(ctx, f):
        out += [m] * count_roots(ctx, g)
    return tuple(sorted(out, reverse=True))


def squarefree_profile(ctx, f):
    """Multiplicities of all roots of f over the algebraic closure, descending."""
    out = []
    for g, m in squarefree_decomposition(ctx, f):
        out += [m] * (len(g) - 1)
    return tuple(sorted(out, reverse=True))


def find_roots(ctx, f, seed=0):
    """Distinct roots of f in GF(q), sorted by integer encoding (Cantor-Zassenhaus)."""
    f = ctx.poly_monic(_as_poly(ctx, f))
    if len(f) == 1:
        return []
    g = ctx.poly_gcd(f, ctx.poly_sub(ctx.x_power_q(f), [ctx.zero, ctx.one]))
    rng = random.Random(seed)
    roots = []
    stack = [g]
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d == 0:
            continue
        if d == 1:
            roots.append(ctx.neg(h[0]))
            continue
        while True:
            a = ctx.random_element(rng)
            s = ctx.poly_powmod([a, ctx.one], (ctx.q - 1) // 2, h)
            s = ctx.poly_sub(s, [ctx.one])
            split = ctx.poly_gcd(h, s)
            if 1 < len(split) < len(h):
                stack.append(split)
                stack.append(ctx.poly_divmod(h, split)[0])
                break
    return sorted(roots, key=ctx.to_int)


def irreducible_factors(ctx, f, seed=0):
    """Monic irreducible factors of a squarefree f, sorted by degree then encoding.

    Distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
    splitting.
    """
    f = ctx.poly_monic(_as_poly(ctx, f))
    rng = random.Random(seed)
    out = []
    xpow = [ctx.zero, ctx.one]
    d = 0
    rest = f
    while len(rest) > 1:
        d += 1
        if 2 * d > len(rest) - 1:
            out.append((len(rest) - 1, rest))
            break
        xpow = ctx.poly_powmod(xpow, ctx.q, rest)
        part = ctx.poly_gcd(rest, ctx.poly_sub(xpow, [ctx.zero, ctx.one]))
        if len(part) > 1:
            out.append((d, part))
            rest = ctx.poly_divmod(rest, part)[0]
            xpow = ctx.poly_mod(xpow, rest) if len(rest) > 1 else xpow
    factors = []
    for d, part in out:
        factors += _equal_degree_split(ctx, part, d, rng)
    return sorted(factors, key=lambda g: (len(g), [ctx.to_int(c) for c in reversed(g)]))


def _equal_degree_split(ctx, f, d, rng):
    if len(f) - 1 == d:
        return [f]
    e = (ctx.q ** d - 1) // 2
    while True:
        a = [ctx.random_element(rng) for _ in range(len(f) - 1)] + [ctx.one]
        s = ctx.poly_sub(ctx.poly_powmod(a, e, f), [ctx.one])
        g = ctx.poly_gcd(f, s)
        if 1 < len(g) < len(f):
            return (_equal_degree_split(ctx, g, d, rng)
                    + _equal_degree_split(ctx, ctx.poly_divmod(f, g)[0], d, rng))


# ---------------------------------------------------------------------------
# log tables for the vectorised kernel


class LogTables:
    """Discrete-log representation of GF(q)^* with respect to a primitive element.

    ``exp[i]`` is the integer encoding of g^i for 0 <= i < q-1, ``log`` inverts
    it with ``log[0] = zero_log`` (a sentinel equal to 2(q-1)), and
    ``zech[i] = log(1 + g^i)``.
    """

    def __init__(self, ctx):
        self.ctx = ctx
        p, k, q = ctx.p, ctx.k, ctx.q
        order = q - 1
        self.order = order
        self.zero_log = 2 * order
        g = ctx.generator()
        self.generator = g
        # multiplication by g as a matrix acting on row vectors
        M = np.array([ctx.mul(tuple(int(i == j) for i in range(k)), g) for j in range(k)],
                     dtype=np.int64)
        vecs = np.zeros((1, k), dtype=np.int64)
        vecs[0, 0] = 1
        step = M.copy()
        while len(vecs) < order:
            vecs = np.concatenate([vecs, vecs @ step % p])
            step = step @ step % p
        vecs = vecs[:order]
        weights = p ** np.arange(k, dtype=np.int64)
        self.exp = vecs @ weights
        log = np.full(q, self.zero_log, dtype=np.int64)
        log[self.exp] = np.arange(order, dtype=np.int64)
        if (log[1:] == self.zero_log).any():
            raise AssertionError("generator is not primitive")
        self.log = log
        plus_one = vecs.copy()
        plus_one[:, 0] = (plus_one[:, 0] + 1) % p
        self.zech = log[plus_one @ weights]

    def log_of(self, a):
        return int(self.log[self.ctx.to_int(self.ctx.elem(a))])

    def elem_of(self, i):
        if i >= self.zero_log:
            return self.ctx.zero
        return self.ctx.from_int(int(self.exp[i % self.order]))
