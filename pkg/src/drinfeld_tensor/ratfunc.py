"""The rational function field K = F_q(theta), eagerly reduced."""

from .fields import FqElem
from .poly import PolyA


class RatK:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = num.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            g = num.gcd(den)
            if not g.is_one() and not num.is_zero():
                num, den = num.exact_div(g), den.exact_div(g)
            if num.is_zero():
                den = den.one()
            lc = den.lc()
            if lc != 1:
                u = num.F.inv(lc)
                num, den = num.scale(u), den.scale(u)
        self.num = num
        self.den = den

    @property
    def F(self):
        return self.num.F

    @staticmethod
    def from_poly(a):
        return RatK(a, a.one(), True)

    def zero(self):
        return RatK(self.num.zero(), self.num.one(), True)

    def one(self):
        return RatK(self.num.one(), self.num.one(), True)

    def _lift(self, o):
        if isinstance(o, RatK):
            return o
        if isinstance(o, PolyA):
            return RatK(o, o.one(), True)
        if isinstance(o, (int, FqElem)):
            return RatK(self.num.one() * o, self.num.one(), True)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.is_one()

    def degree(self):
        return self.num.degree() - self.den.degree()

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatK(self.num + o.num, self.den)
        return RatK(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatK(-self.num, self.den, True)

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
        # cross-cancel before multiplying keeps the operands small
        g1 = self.num.gcd(o.den) if not self.num.is_zero() else o.den
        g2 = o.num.gcd(self.den) if not o.num.is_zero() else self.den
        n = self.num.exact_div(g1) * o.num.exact_div(g2)
        d = self.den.exact_div(g2) * o.den.exact_div(g1)
        return RatK(n, d) if n.is_zero() else RatK(n, d, d.lc() == 1)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in K")
        return RatK(self.den, self.num)

    def __truediv__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self._lift(o) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatK(self.num ** n, self.den ** n, True)

    def __eq__(self, o):
        o2 = self._lift(o)
        if o2 is None:
            return NotImplemented
        return self.num == o2.num and self.den == o2.den

    def __hash__(self):
        return hash((self.num, self.den))

    def twist(self, n=1):
        return RatK(self.num.twist(n), self.den.twist(n), True)

    def derivative(self):
        return RatK(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def to_laurent(self, prec):
        from .laurent import Laurent
        return Laurent.from_ratk(self, prec)

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num})/({self.den})"
