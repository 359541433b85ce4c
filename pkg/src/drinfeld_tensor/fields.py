"""Finite fields F_q, q = p^m.

Elements are coded as integers 0 <= x < q.  For m = 1 the code is the
residue itself; for m > 1 the code of sum d_i y^i (y a root of the
defining modulus) is sum d_i p^i, i.e. the base-p digit expansion.
Extension fields use precomputed addition/multiplication tables, which
is plenty for the desk-scale q this library targets.
"""

from functools import lru_cache


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_mulmod_p(a, b, mod, p):
    # a, b: digit lists (constant first) of length m; mod: monic of degree m
    m = len(mod) - 1
    out = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for k in range(len(out) - 1, m - 1, -1):
        c = out[k]
        if c:
            for j in range(m + 1):
                out[k - m + j] = (out[k - m + j] - c * mod[j]) % p
    return out[:m]


def _irreducible_over_p(mod, p):
    # brute force: no monic factor of degree 1..m//2
    m = len(mod) - 1
    from itertools import product
    for d in range(1, m // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            r = list(mod)
            for k in range(len(r) - 1, d - 1, -1):
                c = r[k]
                if c:
                    for j in range(d + 1):
                        r[k - d + j] = (r[k - d + j] - c * g[j]) % p
            if not any(r[:d]):
                return False
    return True


def default_modulus(p, m):
    """First monic irreducible of degree m over F_p in lexicographic order."""
    from itertools import product
    for tail in product(range(p), repeat=m):
        mod = list(reversed(tail)) + [1]
        if mod[0] and _irreducible_over_p(mod, p):
            return mod
    raise FieldError("no irreducible modulus found")


class FiniteField:
    """The field with q = p^m elements."""

    def __init__(self, p, m=1, modulus=None):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if m < 1:
            raise FieldError("m must be positive")
        self.p = p
        self.m = m
        self.q = p ** m
        self.is_prime_field = m == 1
        if m == 1:
            self.modulus = None
            self._inv = [0] + [pow(x, p - 2, p) for x in range(1, p)]
        else:
            if modulus is None:
                modulus = default_modulus(p, m)
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not _irreducible_over_p(modulus, p):
                raise FieldError("modulus is not irreducible over F_p")
            if self.q > 1024:
                raise FieldError("extension fields limited to q <= 1024")
            self.modulus = tuple(modulus)
            self._build_tables()

    def _digits(self, x):
        d = []
        for _ in range(self.m):
            d.append(x % self.p)
            x //= self.p
        return d

    def _code(self, digits):
        x = 0
        for c in reversed(digits):
            x = x * self.p + c
        return x

    def _build_tables(self):
        q, p = self.q, self.p
        digs = [self._digits(x) for x in range(q)]
        self._add = [[self._code([(a + b) % p for a, b in zip(digs[x], digs[y])])
                      for y in range(q)] for x in range(q)]
        self._neg = [self._code([(-a) % p for a in digs[x]]) for x in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for x in range(q):
            for y in range(x, q):
                v = self._code(_poly_mulmod_p(digs[x], digs[y], self.modulus, p))
                self._mul[x][y] = v
                self._mul[y][x] = v
        self._inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self._mul[x][y] == 1:
                    self._inv[x] = y
                    break

    # arithmetic on integer codes
    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def from_int(self, n):
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    def coerce(self, x):
        """Ints in [0, q) are element codes; other ints go through Z -> F_p."""
        if isinstance(x, FqElem):
            return x.v
        if isinstance(x, int):
            return x if 0 <= x < self.q else self.from_int(x)
        raise TypeError(f"cannot coerce {x!r} into F_{self.q}")

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def digits(self, x):
        """Base-p digit list of an element code (the JSON encoding)."""
        return self._digits(x) if self.m > 1 else [x]

    def from_digits(self, digits):
        digits = [int(d) % self.p for d in digits]
        if len(digits) > self.m:
            raise FieldError("too many digits for F_q element")
        return self._code(digits + [0] * (self.m - len(digits)))

    def __call__(self, x):
        return FqElem(self, self.coerce(x))

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.q})"


def GF(p, m=1, modulus=None):
    return _gf(p, m, tuple(modulus) if modulus else None)


@lru_cache(maxsize=None)
def _gf(p, m, modulus):
    return FiniteField(p, m, list(modulus) if modulus else None)


class FqElem:
    """A boxed element of F_q; twist-invariant, used as a generic ring element."""

    __slots__ = ("F", "v")

    def __init__(self, F, v):
        self.F = F
        self.v = v

    def _c(self, o):
        if isinstance(o, FqElem):
            return o.v
        if isinstance(o, int):
            return self.F.from_int(o)
        return NotImplemented

    def __add__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.add(self.v, o))

    __radd__ = __add__

    def __sub__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.sub(self.v, o))

    def __rsub__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.sub(o, self.v))

    def __mul__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.mul(self.v, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FqElem(self.F, self.F.neg(self.v))

    def __truediv__(self, o):
        o = self._c(o)
        return NotImplemented if o is NotImplemented else FqElem(self.F, self.F.div(self.v, o))

    def __pow__(self, n):
        return FqElem(self.F, self.F.pow(self.v, n))

    def inverse(self):
        return FqElem(self.F, self.F.inv(self.v))

    def __eq__(self, o):
        o = self._c(o)
        return False if o is NotImplemented else self.v == o

    def __hash__(self):
        return hash(self.v)

    def is_zero(self):
        return self.v == 0

    def zero(self):
        return FqElem(self.F, 0)

    def one(self):
        return FqElem(self.F, 1)

    def twist(self, n=1):
        return self

    def __repr__(self):
        return f"{self.v}"
