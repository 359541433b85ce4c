"""Twisted polynomial rings Mat_l(R)[tau] and Mat_l(R)[sigma].

tau B = B^(1) tau and sigma B = B^(-1) sigma.  Coefficients are l x l
matrices (lists of rows) whose entries support +, *, is_zero and twist(n).
The sigma side needs entries that accept negative twists (F_f, F_q).
"""

from .linalg import matadd, matmul, mat_twist, transpose, is_zero_matrix, identity


class TwistError(ValueError):
    pass


def _z(ring_elem):
    return ring_elem.zero()


class TwistedPoly:
    __slots__ = ("side", "coeffs", "ell", "_zero", "_one")

    def __init__(self, coeffs, side="tau", zero=None, one=None):
        if side not in ("tau", "sigma"):
            raise ValueError("side must be 'tau' or 'sigma'")
        coeffs = [[list(r) for r in M] for M in coeffs]
        if not coeffs and zero is None:
            raise ValueError("empty twisted polynomial needs explicit zero/one")
        self.ell = len(coeffs[0]) if coeffs else None
        self._zero = zero if zero is not None else _z(coeffs[0][0][0])
        self._one = one if one is not None else self._zero.one()
        while coeffs and is_zero_matrix(coeffs[-1]):
            coeffs.pop()
        self.side = side
        self.coeffs = coeffs

    @staticmethod
    def scalar(coeffs, side="tau"):
        """From a list of ring elements (the l = 1 case)."""
        z = coeffs[0].zero()
        return TwistedPoly([[[c]] for c in coeffs], side, z, z.one())

    @property
    def sign(self):
        return 1 if self.side == "tau" else -1

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        n = self.ell or 1
        return [[self._zero] * n for _ in range(n)]

    def constant_term(self):
        return self.coefficient(0)

    def _check(self, o):
        if not isinstance(o, TwistedPoly):
            raise TypeError("expected TwistedPoly")
        if o.side != self.side:
            raise TwistError("side mismatch")
        if self.ell and o.ell and self.ell != o.ell:
            raise TwistError("dimension mismatch")

    def __add__(self, o):
        self._check(o)
        n = max(len(self.coeffs), len(o.coeffs))
        return TwistedPoly([matadd(self.coefficient(i), o.coefficient(i)) for i in range(n)],
                           self.side, self._zero, self._one)

    def __neg__(self):
        return TwistedPoly([[[-x for x in r] for r in M] for M in self.coeffs], self.side, self._zero, self._one)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        self._check(o)
        if self.is_zero() or o.is_zero():
            return TwistedPoly([], self.side, self._zero, self._one)
        out = [None] * (len(self.coeffs) + len(o.coeffs) - 1)
        s = self.sign
        for i, A in enumerate(self.coeffs):
            if is_zero_matrix(A):
                continue
            for j, B in enumerate(o.coeffs):
                if is_zero_matrix(B):
                    continue
                P = matmul(A, mat_twist(B, s * i) if i else B)
                out[i + j] = P if out[i + j] is None else matadd(out[i + j], P)
        n = self.ell or o.ell
        z = [[self._zero] * n for _ in range(n)]
        return TwistedPoly([M if M is not None else z for M in out], self.side, self._zero, self._one)

    def scale_left(self, M):
        return TwistedPoly([matmul(M, C) for C in self.coeffs], self.side, self._zero, self._one)

    def __pow__(self, n):
        r = TwistedPoly([identity(self.ell, self._zero, self._one)], self.side, self._zero, self._one)
        for _ in range(n):
            r = r * self
        return r

    def evaluate(self, x):
        """beta(x) = sum B_i x^(i) for a column vector x (list)."""
        s = self.sign
        out = [self._zero] * self.ell
        for i, B in enumerate(self.coeffs):
            xi = [v.twist(s * i) for v in x] if i else list(x)
            for r in range(self.ell):
                acc = out[r]
                for c in range(self.ell):
                    b = B[r][c]
                    if not b.is_zero():
                        acc = acc + b * xi[c]
                out[r] = acc
        return out

    def twist(self, n=1):
        return TwistedPoly([mat_twist(M, n) for M in self.coeffs], self.side, self._zero, self._one)

    def __eq__(self, o):
        if not isinstance(o, TwistedPoly) or o.side != self.side or len(o.coeffs) != len(self.coeffs):
            return False
        return all(a == b for A, B in zip(self.coeffs, o.coeffs) for ra, rb in zip(A, B) for a, b in zip(ra, rb))

    def __repr__(self):
        v = "tau" if self.side == "tau" else "sigma"
        return " + ".join(f"{M}*{v}^{i}" for i, M in enumerate(self.coeffs)) or "0"


def ore_star(beta):
    """(sum B_i tau^i)^* = sum (B_i^(-i))^T sigma^i, and back."""
    s = beta.sign
    new_side = "sigma" if beta.side == "tau" else "tau"
    out = []
    for i, B in enumerate(beta.coeffs):
        try:
            Bt = mat_twist(B, -s * i) if i else B
        except ValueError as e:
            raise TwistError("ore_star needs coefficients closed under inverse twists") from e
        out.append(transpose(Bt))
    return TwistedPoly(out, new_side, beta._zero, beta._one)
