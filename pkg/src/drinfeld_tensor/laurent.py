"""Truncated Laurent series in 1/theta: elements of K_inf = F_q((1/theta)).

A value stores a top exponent v and coefficients c[k] of theta^(v-k).
Absolute precision M means every coefficient of theta^j with j >= -M is
known; prec None marks an exact (finite) value.  Precision rules:

    add:     min(M_a, M_b)
    mul:     min(M_a - deg b, M_b - deg a)
    invert:  M_a + 2 deg a

where a series that is zero to precision M counts as degree -(M+1).
"""


from .poly import PolyA, coeff_mul, _trim


class PrecisionError(ArithmeticError):
    pass


def _minp(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Laurent:
    __slots__ = ("F", "v", "c", "prec")

    def __init__(self, F, v, coeffs, prec=None):
        self.F = F
        coeffs = list(coeffs)
        # strip leading zeros
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        coeffs = coeffs[i:]
        v = v - i
        if prec is not None and coeffs:
            keep = v + prec + 1
            coeffs = coeffs[:max(keep, 0)]
        coeffs = _trim(coeffs)
        if not coeffs:
            v = None
        self.v = v
        self.c = tuple(coeffs)
        self.prec = prec

    # constructors
    @staticmethod
    def zero(F, prec=None):
        return Laurent(F, 0, (), prec)

    @staticmethod
    def one(F):
        return Laurent(F, 0, (1,))

    @staticmethod
    def from_poly(a, prec=None):
        return Laurent(a.F, a.degree() if not a.is_zero() else 0, reversed(a.c), prec)

    @staticmethod
    def monomial(F, e, coef=1, prec=None):
        return Laurent(F, e, (coef,), prec)

    @staticmethod
    def from_ratk(x, prec):
        """Expand num/den to absolute precision prec."""
        num = Laurent.from_poly(x.num)
        if x.den.is_one():
            return num.with_prec(prec)
        dn = x.num.degree() if not x.num.is_zero() else 0
        inv = Laurent.from_poly(x.den).inverse(prec + dn)
        return (num * inv).with_prec(prec)

    # accessors
    def is_zero(self):
        return not self.c

    def degree(self):
        if not self.c:
            return float("-inf")
        return self.v

    def _deff(self):
        if self.c:
            return self.v
        if self.prec is None:
            return float("-inf")
        return -(self.prec + 1)

    def sign(self):
        if not self.c:
            raise PrecisionError("sign of a series that is zero to precision")
        return self.c[0]

    def coeff(self, j):
        """Coefficient of theta^j."""
        if self.prec is not None and j < -self.prec:
            raise PrecisionError(f"coefficient of theta^{j} beyond precision {self.prec}")
        if not self.c:
            return 0
        k = self.v - j
        return self.c[k] if 0 <= k < len(self.c) else 0

    def exponents(self):
        if not self.c:
            return []
        return [self.v - k for k in range(len(self.c))]

    def with_prec(self, prec):
        """Reduce precision (never increases it)."""
        return Laurent(self.F, self.v if self.c else 0, self.c, _minp(self.prec, prec))

    # arithmetic
    def _lift(self, o):
        if isinstance(o, Laurent):
            return o
        if isinstance(o, PolyA):
            return Laurent.from_poly(o)
        if isinstance(o, int):
            v = self.F.from_int(o)
            return Laurent(self.F, 0, (v,))
        from .ratfunc import RatK
        if isinstance(o, RatK):
            return Laurent.from_ratk(o, self.prec if self.prec is not None else 64)
        return None

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        prec = _minp(self.prec, o.prec)
        if not self.c:
            return o.with_prec(prec)
        if not o.c:
            return self.with_prec(prec)
        top = max(self.v, o.v)
        low = min(self.v - len(self.c) + 1, o.v - len(o.c) + 1)
        if prec is not None:
            low = max(low, -prec)
        n = top - low + 1
        if n <= 0:
            return Laurent(self.F, 0, (), prec)
        out = [0] * n
        F = self.F
        for src in (self, o):
            off = top - src.v
            for k, x in enumerate(src.c):
                i = off + k
                if i < n and x:
                    out[i] = F.add(out[i], x)
        return Laurent(F, top, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.F, self.v if self.c else 0, [self.F.neg(x) for x in self.c], self.prec)

    def __sub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        if (not self.c and self.prec is None) or (not o.c and o.prec is None):
            return Laurent(self.F, 0, ())
        da, db = self._deff(), o._deff()
        prec = None
        if self.prec is not None:
            prec = self.prec - db
        if o.prec is not None:
            prec = _minp(prec, o.prec - da)
        if not self.c or not o.c:
            return Laurent(self.F, 0, (), prec)
        top = self.v + o.v
        a, b = self.c, o.c
        if prec is not None:
            keep = top + prec + 1
            if keep <= 0:
                return Laurent(self.F, 0, (), prec)
            a, b = a[:keep], b[:keep]
        out = coeff_mul(self.F, list(a), list(b))
        return Laurent(self.F, top, out, prec)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by the F_q element with code c."""
        return Laurent(self.F, self.v if self.c else 0, [self.F.mul(c, x) for x in self.c], self.prec)

    def inverse(self, prec=None):
        if not self.c:
            raise PrecisionError("inverting a series that is zero to precision")
        out_prec = None if self.prec is None else self.prec + 2 * self.v
        if prec is not None:
            out_prec = prec if out_prec is None else min(out_prec, prec)
        if out_prec is None:
            if len(self.c) == 1:
                return Laurent(self.F, -self.v, (self.F.inv(self.c[0]),))
            raise PrecisionError("exact inverse of a non-monomial needs a target precision")
        n = out_prec - self.v + 1
        if n <= 0:
            return Laurent(self.F, 0, (), out_prec)
        F = self.F
        a = list(self.c[:n]) + [0] * max(0, n - len(self.c))
        b = [0] * n
        b0 = F.inv(a[0])
        b[0] = b0
        if F.m == 1:
            p = F.p
            for k in range(1, n):
                s = 0
                for i in range(1, k + 1):
                    ai = a[i]
                    if ai:
                        s += ai * b[k - i]
                b[k] = (-s * b0) % p
        else:
            for k in range(1, n):
                s = 0
                for i in range(1, k + 1):
                    if a[i]:
                        s = F.add(s, F.mul(a[i], b[k - i]))
                b[k] = F.neg(F.mul(s, b0))
        return Laurent(F, -self.v, b, out_prec)

    def __truediv__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        if o.prec is None and len(o.c) > 1:
            if self.prec is None:
                raise PrecisionError("exact quotient needs a target precision; use inverse(prec)")
            return self * o.inverse(self.prec + o.v + self._deff())
        return self * o.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = Laurent.one(self.F)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def derivative(self):
        """d/dtheta, termwise; known one step further than the input."""
        F = self.F
        prec = None if self.prec is None else self.prec + 1
        if not self.c:
            return Laurent(F, 0, (), prec)
        out = [F.mul(F.from_int(self.v - k), x) for k, x in enumerate(self.c)]
        return Laurent(F, self.v - 1, out, prec)

    def agrees(self, o, to_exponent):
        """True when self - o has degree <= to_exponent (within known precision)."""
        d = self - o
        return d.degree() <= to_exponent

    def residual_degree(self, o):
        d = self - o
        if d.is_zero():
            return -(d.prec + 1) if d.prec is not None else None
        return d.degree()

    def nearest_polynomial(self):
        """Split into principal part (a PolyA) and tail of negative degree."""
        from .poly import PolyA
        F = self.F
        if not self.c or self.v < 0:
            return PolyA(F, ()), self
        poly = [0] * (self.v + 1)
        tail = []
        for k, x in enumerate(self.c):
            e = self.v - k
            if e >= 0:
                poly[e] = x
            else:
                tail.append(x)
        return PolyA(F, poly), Laurent(F, -1, tail, self.prec)

    def __eq__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self.c == o.c and self.v == o.v and self.prec == o.prec

    def __repr__(self):
        if not self.c:
            body = "0"
        else:
            terms = []
            for k, x in enumerate(self.c[:8]):
                if x:
                    terms.append(f"{x}*theta^{self.v - k}")
            body = " + ".join(terms) + (" + ..." if len(self.c) > 8 else "")
        return f"{body} + O(theta^{-(self.prec + 1)})" if self.prec is not None else body
