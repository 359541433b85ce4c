"""Rational functions in t over A, i.e. elements of K(t) with A-integral numerator and denominator.

Numerator and denominator are tuples of PolyA coefficients in t (constant
term first).  No gcd reduction is done: the recursions that produce these
values keep the denominator in a known product form, and equality is
tested by cross-multiplication.
"""

from .poly import PolyA
from .ratfunc import RatK


def _tp_trim(c):
    c = list(c)
    while c and c[-1].is_zero():
        c.pop()
    return tuple(c)


def _tp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _tp_trim(out)


def _tp_neg(a):
    return tuple(-x for x in a)


def _tp_mul(a, b):
    if not a or not b:
        return ()
    z = a[0].zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _tp_trim(out)


def _tp_eval(a, x, zero):
    r = zero
    for c in reversed(a):
        r = r * x + c
    return r


class BivarRat:
    __slots__ = ("F", "num", "den")

    def __init__(self, F, num, den=None):
        self.F = F
        one = PolyA(F, (1,), True)
        num = _tp_trim(num)
        den = _tp_trim(den) if den is not None else (one,)
        if not den:
            raise ZeroDivisionError("zero denominator in K(t)")
        if not num:
            den = (one,)
        else:
            # monic in t: scale by the inverse of an F_q leading coefficient when possible
            lc = den[-1]
            if lc.is_constant() and lc.c != (1,):
                u = F.inv(lc.c[0])
                num = tuple(c.scale(u) for c in num)
                den = tuple(c.scale(u) for c in den)
        self.num = num
        self.den = den

    @staticmethod
    def const(a):
        """Embed a PolyA."""
        return BivarRat(a.F, (a,))

    @staticmethod
    def t(F):
        return BivarRat(F, (PolyA(F, (), True), PolyA(F, (1,), True)))

    @staticmethod
    def t_minus(c):
        """The linear polynomial t - c for c in A."""
        return BivarRat(c.F, (-c, c.one()))

    def zero(self):
        return BivarRat(self.F, ())

    def one(self):
        return BivarRat(self.F, (PolyA(self.F, (1,), True),))

    def _lift(self, o):
        if isinstance(o, BivarRat):
            return o
        if isinstance(o, PolyA):
            return BivarRat(self.F, (o,))
        if isinstance(o, int):
            return BivarRat(self.F, (PolyA(self.F, (self.F.from_int(o),)),))
        return None

    def is_zero(self):
        return not self.num

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return BivarRat(self.F, _tp_add(self.num, o.num), self.den)
        n = _tp_add(_tp_mul(self.num, o.den), _tp_mul(o.num, self.den))
        return BivarRat(self.F, n, _tp_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return BivarRat(self.F, _tp_neg(self.num), self.den)

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
        return BivarRat(self.F, _tp_mul(self.num, o.num), _tp_mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in K(t)")
        return BivarRat(self.F, self.den, self.num)

    def __truediv__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return _tp_mul(self.num, o.den) == _tp_mul(o.num, self.den)

    def __hash__(self):
        return 0

    def twist(self, n=1):
        """theta -> theta^(q^n) on coefficients; t is fixed."""
        if n < 0:
            raise ValueError("negative twists are not supported on K(t)")
        return BivarRat(self.F, tuple(c.twist(n) for c in self.num), tuple(c.twist(n) for c in self.den))

    @staticmethod
    def _dt(a):
        F = a[0].F if a else None
        return _tp_trim([c.scale(F.from_int(i)) for i, c in enumerate(a)][1:]) if a else ()

    @staticmethod
    def _dtheta(a):
        return _tp_trim([c.derivative() for c in a])

    def _quot_rule(self, dn, dd):
        n = _tp_add(_tp_mul(dn, self.den), _tp_neg(_tp_mul(self.num, dd)))
        return BivarRat(self.F, n, _tp_mul(self.den, self.den))

    def hyperderivative(self, variable="t"):
        """First hyperderivative in t or theta (the formal partial derivative)."""
        if variable == "t":
            return self._quot_rule(self._dt(self.num), self._dt(self.den))
        if variable == "theta":
            return self._quot_rule(self._dtheta(self.num), self._dtheta(self.den))
        raise ValueError("variable must be 't' or 'theta'")

    def evaluate(self, x):
        """Substitute t = x (a PolyA or RatK); returns a RatK."""
        if isinstance(x, PolyA):
            x = RatK.from_poly(x)
        z = RatK.from_poly(PolyA(self.F, (), True))
        n = _tp_eval([RatK.from_poly(c) for c in self.num], x, z)
        d = _tp_eval([RatK.from_poly(c) for c in self.den], x, z)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return n / d

    def at_theta(self):
        return self.evaluate(PolyA(self.F, (0, 1), True))

    def __repr__(self):
        def s(a):
            return " + ".join(f"({c})*t^{i}" for i, c in enumerate(a) if not c.is_zero()) or "0"
        return f"[{s(self.num)}] / [{s(self.den)}]"
