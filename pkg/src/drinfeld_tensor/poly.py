"""The polynomial ring A = F_q[theta].

PolyA values are immutable; coefficients are F_q element codes stored
constant-term first with no trailing zeros.  Large products over prime
fields go through numpy convolution, everything else is schoolbook.
"""

import re
from functools import lru_cache
from itertools import product

import numpy as np

from .fields import FiniteField, FqElem, GF

NEG_INF = float("-inf")
_NP_THRESHOLD = 48


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _np_mul(a, b, p):
    x = np.array(a, dtype=np.int64)
    y = np.array(b, dtype=np.int64)
    # keep partial sums inside int64
    if min(len(a), len(b)) * (p - 1) ** 2 < 2 ** 62:
        return (np.convolve(x, y) % p).tolist()
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(a):
        if v:
            for j, w in enumerate(b):
                out[i + j] = (out[i + j] + v * w) % p
    return out


def coeff_mul(F, a, b):
    if not a or not b:
        return []
    if F.m == 1:
        p = F.p
        if len(a) > _NP_THRESHOLD and len(b) > _NP_THRESHOLD:
            return _trim(_np_mul(a, b, p))
        out = [0] * (len(a) + len(b) - 1)
        for i, v in enumerate(a):
            if v:
                for j, w in enumerate(b):
                    out[i + j] += v * w
        return _trim([x % p for x in out])
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F._add, F._mul
    for i, v in enumerate(a):
        if v:
            row = mul[v]
            for j, w in enumerate(b):
                if w:
                    out[i + j] = add[out[i + j]][row[w]]
    return _trim(out)


def coeff_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if F.m == 1:
        p = F.p
        for i, w in enumerate(b):
            out[i] = (out[i] + w) % p
    else:
        add = F._add
        for i, w in enumerate(b):
            out[i] = add[out[i]][w]
    return _trim(out)


def coeff_scale(F, a, c):
    if c == 0:
        return []
    if F.m == 1:
        p = F.p
        return [x * c % p for x in a]
    row = F._mul[c]
    return [row[x] for x in a]


def coeff_neg(F, a):
    return [F.neg(x) for x in a]


def coeff_divmod(F, a, b):
    """Quotient and remainder of coefficient lists (b nonzero)."""
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    inv = F.inv(b[-1])
    if F.m == 1 and db > _NP_THRESHOLD and len(a) - db > _NP_THRESHOLD:
        p = F.p
        r = np.array(a, dtype=np.int64)
        bb = np.array(b, dtype=np.int64)
        qd = len(a) - 1 - db
        quo = np.zeros(qd + 1, dtype=np.int64)
        for k in range(qd, -1, -1):
            c = int(r[k + db]) * inv % p
            if c:
                quo[k] = c
                r[k:k + db + 1] = (r[k:k + db + 1] - c * bb) % p
        return _trim(quo.tolist()), _trim(r[:db].tolist())
    r = list(a)
    qd = len(a) - 1 - db
    quo = [0] * (qd + 1)
    if F.m == 1:
        p = F.p
        for k in range(qd, -1, -1):
            c = r[k + db] * inv % p
            if c:
                quo[k] = c
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - c * b[j]) % p
    else:
        for k in range(qd, -1, -1):
            c = F.mul(r[k + db], inv)
            if c:
                quo[k] = c
                for j in range(db + 1):
                    r[k + j] = F.sub(r[k + j], F.mul(c, b[j]))
    return _trim(quo), _trim(r[:db])


class PolyA:
    """Element of F_q[theta]."""

    __slots__ = ("F", "c", "_h")

    def __init__(self, F, coeffs=(), _trusted=False):
        self.F = F
        if _trusted:
            self.c = coeffs
        else:
            self.c = tuple(_trim([F.coerce(x) for x in coeffs]))
        self._h = None

    # construction helpers
    @staticmethod
    def _mk(F, lst):
        return PolyA(F, tuple(_trim(list(lst))), True)

    def zero(self):
        return PolyA(self.F, (), True)

    def one(self):
        return PolyA(self.F, (1,), True)

    def _lift(self, o):
        if isinstance(o, PolyA):
            return o
        if isinstance(o, int):
            v = self.F.from_int(o)
            return PolyA(self.F, (v,) if v else (), True)
        if isinstance(o, FqElem):
            return PolyA(self.F, (o.v,) if o.v else (), True)
        return None

    # basic accessors
    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    deg = property(degree)

    def lc(self):
        return self.c[-1] if self.c else 0

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == (1,)

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def is_constant(self):
        return len(self.c) <= 1

    def constant(self):
        return self.c[0] if self.c else 0

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def coeffs(self):
        return list(self.c)

    def monic(self):
        if not self.c:
            return self
        return PolyA(self.F, tuple(coeff_scale(self.F, self.c, self.F.inv(self.c[-1]))), True)

    # arithmetic
    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return PolyA(self.F, tuple(coeff_add(self.F, self.c, o.c)), True)

    __radd__ = __add__

    def __neg__(self):
        return PolyA(self.F, tuple(coeff_neg(self.F, self.c)), True)

    def __sub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o2 = self._lift(o)
        if o2 is None:
            return NotImplemented
        if len(o2.c) == 1:
            return PolyA(self.F, tuple(coeff_scale(self.F, self.c, o2.c[0])), True)
        return PolyA(self.F, tuple(coeff_mul(self.F, self.c, o2.c)), True)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by the F_q element with code c."""
        return PolyA(self.F, tuple(coeff_scale(self.F, self.c, c)), True)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = self.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def __divmod__(self, o):
        o = self._lift(o)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = coeff_divmod(self.F, self.c, o.c)
        return PolyA(self.F, tuple(q), True), PolyA(self.F, tuple(r), True)

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def exact_div(self, o):
        q, r = divmod(self, o)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, o):
        return (o % self).is_zero()

    def shift(self, k):
        """Multiply by theta^k (k >= 0)."""
        if not self.c:
            return self
        return PolyA(self.F, (0,) * k + self.c, True)

    def __eq__(self, o):
        if isinstance(o, PolyA):
            return self.c == o.c and self.F == o.F
        o2 = self._lift(o) if isinstance(o, (int, FqElem)) else None
        return o2 is not None and self.c == o2.c

    def __ne__(self, o):
        return not self == o

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.c)
        return self._h

    def sort_key(self):
        return (len(self.c), self.c)

    def __lt__(self, o):
        return self.sort_key() < o.sort_key()

    # calculus and twisting
    def twist(self, n=1):
        """theta -> theta^(q^n); F_q coefficients are fixed by the q-Frobenius."""
        if n < 0:
            raise ValueError("negative twists are not supported on A")
        if n == 0 or len(self.c) <= 1:
            return self
        Q = self.F.q ** n
        out = [0] * ((len(self.c) - 1) * Q + 1)
        for i, v in enumerate(self.c):
            out[i * Q] = v
        return PolyA(self.F, tuple(out), True)

    def derivative(self):
        F = self.F
        out = [F.mul(F.from_int(i), v) for i, v in enumerate(self.c)][1:]
        return PolyA(F, tuple(_trim(out)), True)

    def __call__(self, x):
        """Horner evaluation at x (F_q code, FqElem, PolyA or any ring element)."""
        if isinstance(x, int):
            F = self.F
            r = 0
            for v in reversed(self.c):
                r = F.add(F.mul(r, x), v)
            return r
        if isinstance(x, FqElem):
            return FqElem(self.F, self(x.v))
        r = x.zero()
        for v in reversed(self.c):
            r = r * x + v
        return r

    def compose(self, g):
        return self(g)

    def gcd(self, o):
        a, b = self, o
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, o):
        """(g, s, t) with g = s*self + t*o, g monic."""
        r0, r1 = self, o
        s0, s1 = self.one(), self.zero()
        t0, t1 = self.zero(), self.one()
        while not r1.is_zero():
            qq, rr = divmod(r0, r1)
            r0, r1 = r1, rr
            s0, s1 = s1, s0 - qq * s1
            t0, t1 = t1, t0 - qq * t1
        if r0.is_zero():
            return r0, s0, t0
        u = self.F.inv(r0.lc())
        return r0.scale(u), s0.scale(u), t0.scale(u)

    def powmod(self, n, m):
        r = self.one() % m
        b = self % m
        while n:
            if n & 1:
                r = (r * b) % m
            n >>= 1
            if n:
                b = (b * b) % m
        return r

    def to_string(self, var="theta"):
        if not self.c:
            return "0"
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            v = self.c[i]
            if not v:
                continue
            if i == 0:
                terms.append(f"{v}")
            else:
                mon = var if i == 1 else f"{var}^{i}"
                terms.append(mon if v == 1 else f"{v}*{mon}")
        return "+".join(terms)

    def __repr__(self):
        return self.to_string()


@lru_cache(maxsize=None)
def PolyRing(F):
    return _PolyRing(F)


class _PolyRing:
    """Convenience constructors for A = F_q[theta]."""

    def __init__(self, F):
        self.F = F
        self.zero = PolyA(F, (), True)
        self.one = PolyA(F, (1,), True)
        self.theta = PolyA(F, (0, 1), True)

    def __call__(self, x):
        if isinstance(x, PolyA):
            return x
        if isinstance(x, int):
            return self.one * x
        if isinstance(x, FqElem):
            return PolyA(self.F, (x.v,) if x.v else (), True)
        if isinstance(x, str):
            return parse_poly(self.F, x)
        return PolyA(self.F, list(x))

    def monomial(self, i, c=1):
        return PolyA(self.F, (0,) * i + (self.F.coerce(c),), True) if self.F.coerce(c) else self.zero

    def monics(self, d):
        """All monic polynomials of degree d, in (lexicographic) coefficient order."""
        for tail in product(range(self.F.q), repeat=d):
            yield PolyA(self.F, tuple(reversed(tail)) + (1,), True)

    def random(self, rng, dmax, monic=False):
        d = rng.randint(0, dmax)
        c = [rng.randrange(self.F.q) for _ in range(d + 1)]
        if monic:
            c[-1] = 1
        return PolyA(self.F, c)

    def irreducibles(self, d_max):
        return enumerate_monic_irreducibles(self.F, d_max)


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:(theta|t|x)(?:\^(\d+))?)?$")


def parse_poly(F, s):
    """Parse text such as '2*theta^3+1' (coefficients are F_q element codes)."""
    s = s.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial text")
    toks = re.findall(r"[+-]?[^+-]+", s)
    acc = {}
    for tok in toks:
        sign = -1 if tok[0] == "-" else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {tok!r}")
        c = int(m.group(1)) if m.group(1) is not None else 1
        if F.m > 1 and not 0 <= c < F.q:
            raise ValueError(f"coefficient {c} is not an F_{F.q} code")
        code = F.from_int(c) if F.m == 1 else c
        if sign < 0:
            code = F.neg(code)
        e = 0 if m.group(2) is None else int(m.group(3) or 1)
        acc[e] = F.add(acc.get(e, 0), code)
    out = [0] * (max(acc) + 1)
    for e, v in acc.items():
        out[e] = v
    return PolyA(F, out)


def _prime_divisors(n):
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


def is_irreducible(f):
    """Rabin's distinct-degree test."""
    d = f.degree()
    if d < 1:
        return False
    if d == 1:
        return True
    F = f.F
    th = PolyA(F, (0, 1), True)
    # theta^(q^k) mod f by repeated q-th powers
    def frob_power(k):
        x = th
        for _ in range(k):
            x = x.powmod(F.q, f)
        return x
    if not ((frob_power(d) - th) % f).is_zero():
        return False
    for ell in _prime_divisors(d):
        g = (frob_power(d // ell) - th).gcd(f)
        if not g.is_one():
            return False
    return True


def is_irreducible_exhaustive(f):
    """Cross-check by trial division with every monic of degree <= d/2."""
    d = f.degree()
    if d < 1:
        return False
    R = PolyRing(f.F)
    for e in range(1, d // 2 + 1):
        for g in R.monics(e):
            if (f % g).is_zero():
                return False
    return True


def mobius(n):
    res, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            res = -res
        d += 1
    if n > 1:
        res = -res
    return res


def irreducible_count(q, d):
    return sum(mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0) // d


_IRR_CACHE = {}


def irreducibles_of_degree(F, d):
    key = (F, d)
    if key not in _IRR_CACHE:
        if d <= 2 or F.q ** d > 200000:
            out = [f for f in PolyRing(F).monics(d) if is_irreducible(f)]
        else:
            out = _sieve_degree(F, d)
        if d <= 4 and F.q ** d <= 4096:
            assert all(is_irreducible_exhaustive(f) for f in out[:50])
        assert len(out) == irreducible_count(F.q, d)
        _IRR_CACHE[key] = out
    return _IRR_CACHE[key]


def _sieve_degree(F, d):
    # a monic of degree d is reducible iff it is g*h with g prime, deg g <= d/2
    R = PolyRing(F)
    reducible = set()
    for e in range(1, d // 2 + 1):
        for g in irreducibles_of_degree(F, e):
            for h in R.monics(d - e):
                reducible.add((g * h).c)
    return [f for f in R.monics(d) if f.c not in reducible]


def enumerate_monic_irreducibles(F, d_max):
    """Monic irreducibles of degree <= d_max, sorted by (degree, coefficients)."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    out = []
    for d in range(1, d_max + 1):
        out.extend(irreducibles_of_degree(F, d))
    return out


def factor(a):
    """Factor a monic polynomial as a sorted list of (prime, exponent)."""
    if a.is_zero():
        raise ValueError("cannot factor 0")
    if not a.is_monic():
        raise ValueError("factor expects a monic polynomial")
    out = []
    rest = a
    d = 1
    while rest.degree() >= 2 * d:
        for f in irreducibles_of_degree(a.F, d):
            e = 0
            while True:
                qq, rr = divmod(rest, f)
                if not rr.is_zero():
                    break
                rest = qq
                e += 1
            if e:
                out.append((f, e))
        d += 1
    if rest.degree() >= 1:
        out.append((rest, 1))
    merged = {}
    for f, e in out:
        merged[f] = merged.get(f, 0) + e
    return sorted(merged.items(), key=lambda t: t[0].sort_key())
