"""Elements of K with denominators built from the brackets [i] = theta^(q^i) - theta.

Exponential and logarithm coefficients of t-modules over A, and the
logarithm coefficients of rank-2 Drinfeld modules, only ever divide by
products of brackets.  Keeping the denominator as an exponent vector
avoids gcd computations on polynomials of degree q^m; cancellation is
attempted by cheap sparse division by the binomials [i].

Useful facts: [i]^(1) = [i]^q and d/dtheta [i] = -1.
"""

from .poly import PolyA, coeff_mul, _trim
from .ratfunc import RatK


def _bracket_mul(F, c, i, k=1):
    """Multiply the coefficient list c by [i]^k."""
    Q = F.q ** i
    for _ in range(k):
        if not c:
            return c
        out = [0] * (len(c) + Q)
        for j, v in enumerate(c):
            if v:
                out[j + Q] = F.add(out[j + Q], v)
                out[j + 1] = F.sub(out[j + 1], v)
        c = _trim(out)
    return c


def _bracket_div(F, c, i):
    """Exact quotient of c by [i], or None when [i] does not divide c."""
    if not c:
        return c
    Q = F.q ** i
    n = len(c) - 1
    if n < Q:
        return None
    # divide by theta^Q - theta = theta (theta^(Q-1) - 1)
    if c[0]:
        return None
    r = list(c[1:])
    # r / (theta^(Q-1) - 1), top-down
    s = Q - 1
    quo = [0] * (len(r) - s)
    for k in range(len(r) - 1, s - 1, -1):
        v = r[k]
        if v:
            quo[k - s] = v
            r[k - s] = F.add(r[k - s], v)
            r[k] = 0
    if any(r[:s]):
        return None
    return _trim(quo)


class BracketFrac:
    __slots__ = ("F", "num", "den")

    def __init__(self, num, den=None, reduce=True):
        # num: PolyA; den: dict i -> exponent (i >= 1)
        self.F = num.F
        den = {i: e for i, e in (den or {}).items() if e > 0}
        c = list(num.c)
        if reduce and c and den:
            for i in sorted(den):
                while den.get(i, 0) > 0:
                    qt = _bracket_div(self.F, c, i)
                    if qt is None:
                        break
                    c = qt
                    den[i] -= 1
                    if den[i] == 0:
                        del den[i]
        if not c:
            den = {}
        self.num = PolyA(self.F, tuple(c), True)
        self.den = den

    @staticmethod
    def from_poly(a):
        return BracketFrac(a, None, False)

    @staticmethod
    def bracket_inverse(F, i, k=1):
        return BracketFrac(PolyA(F, (1,), True), {i: k}, False)

    def zero(self):
        return BracketFrac(self.num.zero(), None, False)

    def one(self):
        return BracketFrac(self.num.one(), None, False)

    def _lift(self, o):
        if isinstance(o, BracketFrac):
            return o
        if isinstance(o, PolyA):
            return BracketFrac(o, None, False)
        if isinstance(o, int):
            return BracketFrac(self.num.one() * o, None, False)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def den_degree(self):
        q = self.F.q
        return sum(e * q ** i for i, e in self.den.items())

    def degree(self):
        if self.num.is_zero():
            return float("-inf")
        return self.num.degree() - self.den_degree()

    def _raise_to(self, den):
        c = list(self.num.c)
        for i, e in den.items():
            k = e - self.den.get(i, 0)
            if k:
                c = _bracket_mul(self.F, c, i, k)
        return c

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        den = dict(self.den)
        for i, e in o.den.items():
            if e > den.get(i, 0):
                den[i] = e
        a = self._raise_to(den)
        b = o._raise_to(den)
        s = PolyA(self.F, a, True) + PolyA(self.F, b, True)
        return BracketFrac(s, den)

    __radd__ = __add__

    def __neg__(self):
        return BracketFrac(-self.num, self.den, False)

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
        den = dict(self.den)
        for i, e in o.den.items():
            den[i] = den.get(i, 0) + e
        n = PolyA(self.F, tuple(coeff_mul(self.F, list(self.num.c), list(o.num.c))), True)
        return BracketFrac(n, den, bool(self.den) and bool(o.den))

    __rmul__ = __mul__

    def scale(self, c):
        return BracketFrac(self.num.scale(c), self.den, False)

    def div_bracket(self, i, k=1):
        den = dict(self.den)
        den[i] = den.get(i, 0) + k
        return BracketFrac(self.num, den, False)

    def __truediv__(self, o):
        """Division by nonzero F_q constants only (use div_bracket for [i])."""
        o = self._lift(o)
        if o is None or o.den or not o.num.is_constant() or o.is_zero():
            raise ArithmeticError("BracketFrac division needs a unit or a bracket")
        return self.scale(self.F.inv(o.num.c[0]))

    def __pow__(self, n):
        r = self.one()
        for _ in range(n):
            r = r * self
        return r

    def twist(self, n=1):
        if n < 0:
            raise ValueError("negative twists are not supported on K")
        if n == 0:
            return self
        Q = self.F.q ** n
        return BracketFrac(self.num.twist(n), {i: e * Q for i, e in self.den.items()}, False)

    def derivative(self):
        """d/dtheta; uses d[i] = -1 so d([i]^-e) = e [i]^(-e-1)."""
        out = BracketFrac(self.num.derivative(), self.den, True)
        F = self.F
        for i, e in self.den.items():
            c = F.from_int(e)
            if c:
                den = dict(self.den)
                den[i] += 1
                out = out + BracketFrac(self.num.scale(c), den, False)
        return out

    def den_poly(self):
        d = [1]
        for i, e in sorted(self.den.items()):
            d = _bracket_mul(self.F, d, i, e)
        return PolyA(self.F, tuple(d), True)

    def to_ratk(self):
        return RatK(self.num, self.den_poly())

    def __eq__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        den = dict(self.den)
        for i, e in o.den.items():
            if e > den.get(i, 0):
                den[i] = e
        return self._raise_to(den) == o._raise_to(den)

    def __hash__(self):
        return hash(self.to_ratk())

    def to_laurent(self, prec):
        """Expand in K_inf to absolute precision prec.

        1/[i] = theta^(-q^i) (1 - theta^(1-q^i))^(-1), so only the top
        prec + deg coefficients of the numerator are ever needed.
        """
        from .laurent import Laurent
        F = self.F
        if self.is_zero():
            return Laurent.zero(F, prec)
        v = self.degree()
        R = prec + v  # relative depth needed
        if R < 0:
            return Laurent.zero(F, prec)
        top = list(reversed(self.num.c))[:R + 1]
        series = top
        q = F.q
        for i, e in self.den.items():
            g = q ** i - 1
            # (1 - x)^(-e) with x = theta^(-g): coefficients binom(e+k-1, k)
            inv = [0] * (R + 1)
            b = 1
            k = 0
            while k * g <= R:
                inv[k * g] = F.from_int(b)
                k += 1
                b = b * (e + k - 1) // k
            series = coeff_mul(F, series, inv)[:R + 1]
        return Laurent(F, v, series, prec)

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        d = "*".join(f"[{i}]^{e}" if e > 1 else f"[{i}]" for i, e in sorted(self.den.items()))
        return f"({self.num})/({d})"
