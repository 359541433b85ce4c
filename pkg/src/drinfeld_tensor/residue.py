"""Residue fields F_f = A/fA for monic irreducible f."""

from .fields import FqElem
from .poly import PolyA, is_irreducible


class ResidueField:
    def __init__(self, f, check=True):
        if not f.is_monic() or f.degree() < 1:
            raise ValueError("modulus must be monic of positive degree")
        if check and not is_irreducible(f):
            raise ValueError(f"{f} is not irreducible")
        self.f = f
        self.F = f.F
        self.d = f.degree()
        self.size = self.F.q ** self.d
        # images of the basis theta^i under the q-Frobenius, as coefficient lists
        tq = PolyA(self.F, (0, 1), True).powmod(self.F.q, f)
        imgs = []
        x = PolyA(self.F, (1,), True)
        for i in range(self.d):
            imgs.append(list(x.c) + [0] * (self.d - len(x.c)))
            x = (x * tq) % f
        self._frob = imgs

    def __call__(self, a):
        if isinstance(a, Residue):
            return a
        if isinstance(a, int):
            a = PolyA(self.F, (self.F.from_int(a),))
        elif isinstance(a, FqElem):
            a = PolyA(self.F, (a.v,))
        return Residue(self, a % self.f)

    @property
    def theta(self):
        return self(PolyA(self.F, (0, 1), True))

    def zero(self):
        return Residue(self, PolyA(self.F, (), True))

    def one(self):
        return Residue(self, PolyA(self.F, (1,), True))

    def from_vector(self, vec):
        return Residue(self, PolyA(self.F, list(vec)))

    def elements(self):
        from itertools import product
        for digs in product(range(self.F.q), repeat=self.d):
            yield self.from_vector(digs)

    def random(self, rng):
        return self.from_vector([rng.randrange(self.F.q) for _ in range(self.d)])

    def frobenius_vec(self, vec):
        """Apply x -> x^q to a coefficient vector (F_q-linear)."""
        F = self.F
        out = [0] * self.d
        for i, a in enumerate(vec):
            if a:
                row = self._frob[i]
                for j, b in enumerate(row):
                    if b:
                        out[j] = F.add(out[j], F.mul(a, b))
        return out

    def __eq__(self, o):
        return isinstance(o, ResidueField) and self.f == o.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"F_({self.f})"


class Residue:
    __slots__ = ("K", "a")

    def __init__(self, K, a):
        self.K = K
        self.a = a

    def _lift(self, o):
        if isinstance(o, Residue):
            return o
        if isinstance(o, (int, FqElem, PolyA)):
            return self.K(o)
        return None

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return Residue(self.K, self.a + o.a)

    __radd__ = __add__

    def __neg__(self):
        return Residue(self.K, -self.a)

    def __sub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return Residue(self.K, self.a - o.a)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return Residue(self.K, (self.a * o.a) % self.K.f)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Residue(self.K, self.a.powmod(n, self.K.f))

    def inverse(self):
        g, s, _ = self.a.xgcd(self.K.f)
        if not g.is_one():
            raise ZeroDivisionError("non-invertible residue")
        return Residue(self.K, s % self.K.f)

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __eq__(self, o):
        o = self._lift(o)
        return o is not None and self.a == o.a

    def __hash__(self):
        return hash(self.a)

    def is_zero(self):
        return self.a.is_zero()

    def zero(self):
        return self.K.zero()

    def one(self):
        return self.K.one()

    def vector(self):
        return list(self.a.c) + [0] * (self.K.d - len(self.a.c))

    def twist(self, n=1):
        """x -> x^(q^n); negative n uses x^(q^(n mod d)) since x^(q^d) = x."""
        n %= self.K.d
        v = self.vector()
        for _ in range(n):
            v = self.K.frobenius_vec(v)
        return Residue(self.K, PolyA(self.K.F, v))

    def __repr__(self):
        return f"[{self.a}]"
