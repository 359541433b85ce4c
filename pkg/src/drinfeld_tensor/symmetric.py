"""Elementary, complete and Schur polynomials, evaluated root-free.

S_k for k = (k_1, ..., k_{n-1}) is the Schur polynomial of the partition
lambda_i = k_i + ... + k_{n-1}, lambda_n = 0, computed by Jacobi-Trudi
det(h_{lambda_i - i + j}).  The bialternant quotient is kept as an oracle.
"""

import random
from itertools import product

from .linalg import det, det_gauss
from .poly import PolyA, PolyRing
from .ratfunc import RatK


class SchurIndex:
    __slots__ = ("n", "k")

    def __init__(self, n, k):
        k = tuple(k)
        if n < 2 or len(k) != n - 1 or any(x < 0 for x in k):
            raise ValueError(f"bad Schur index n={n}, k={k}")
        self.n = n
        self.k = k

    @staticmethod
    def from_partition(lam):
        """Drop lambda_n (use schur_lambda for lambda_n > 0)."""
        lam = list(lam)
        n = len(lam)
        return SchurIndex(n, [lam[i] - lam[i + 1] for i in range(n - 1)])

    def partition(self):
        lam = []
        s = 0
        for x in reversed(self.k):
            s += x
            lam.append(s)
        return list(reversed(lam)) + [0]

    def weight(self):
        return sum((i + 1) * x for i, x in enumerate(self.k))

    def reversed(self):
        return SchurIndex(self.n, tuple(reversed(self.k)))

    def __eq__(self, o):
        return isinstance(o, SchurIndex) and (self.n, self.k) == (o.n, o.k)

    def __hash__(self):
        return hash((self.n, self.k))

    def __repr__(self):
        return f"S{self.k}"


def indices_of_weight(n, w):
    """All k = (k_1..k_{n-1}) with k_1 + 2k_2 + ... = w."""
    out = []

    def rec(i, rem, acc):
        if i == n - 1:
            if rem == 0:
                out.append(tuple(acc))
            return
        for x in range(rem // (i + 1) + 1):
            rec(i + 1, rem - (i + 1) * x, acc + [x])

    rec(0, w, [])
    return out


def elementary_from_monic(coeffs):
    """e_0..e_n of the roots of a monic polynomial given constant term first."""
    n = len(coeffs) - 1
    one = coeffs[-1]
    e = [one]
    for i in range(1, n + 1):
        c = coeffs[n - i]
        e.append(c if i % 2 == 0 else -c)
    return e


def elementary_from_values(xs):
    """e_i of explicit values: coefficients of prod (1 + x_i T)."""
    one = xs[0].one()
    e = [one]
    for x in xs:
        new = e + [x.zero()]
        for i in range(len(e), 0, -1):
            new[i] = new[i] + x * e[i - 1]
        e = new
    return e


def complete_h(e, m_max):
    """h_0..h_{m_max} from sum h_i T^i * sum (-1)^i e_i T^i = 1."""
    n = len(e) - 1
    h = [e[0]]
    for m in range(1, m_max + 1):
        s = e[0].zero()
        for i in range(1, min(m, n) + 1):
            t = e[i] * h[m - i]
            s = s + t if i % 2 else s - t
        h.append(s)
    return h


def _h(h, i, zero):
    if i < 0:
        return zero
    if i >= len(h):
        raise IndexError(f"need h_{i}; only {len(h)} values supplied")
    return h[i]


def schur_lambda_jt(lam, h):
    """s_lambda = det(h_{lambda_i - i + j}) for any partition."""
    lam = [x for x in lam]
    while lam and lam[-1] == 0:
        lam.pop()
    zero, one = h[0].zero(), h[0].one()
    m = len(lam)
    if m == 0:
        return one
    M = [[_h(h, lam[i] - i + j, zero) for j in range(m)] for i in range(m)]
    return det(M, zero, one)


def schur_jacobi_trudi(idx, h):
    return schur_lambda_jt(idx.partition(), h)


def schur_bialternant_oracle(lam_or_idx, xs):
    """V(x)^{-1} det(x_j^{lambda_i + n - i}) over a field (RatK values)."""
    lam = lam_or_idx.partition() if isinstance(lam_or_idx, SchurIndex) else list(lam_or_idx)
    n = len(xs)
    if len(lam) != n:
        raise ValueError("partition length must equal the number of variables")
    if n > 4:
        raise ValueError("bialternant oracle is limited to n <= 4")
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j]:
                raise ZeroDivisionError("repeated variable values")
    num = det_gauss([[x ** (lam[i] + n - 1 - i) for x in xs] for i in range(n)])
    den = det_gauss([[x ** (n - 1 - i) for x in xs] for i in range(n)])
    return num / den


# ---- truncated power series in T (lists, constant first) ----

def _ps_mul(a, b, W):
    z = a[0].zero()
    out = [z] * (W + 1)
    for i, x in enumerate(a[:W + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[:W + 1 - i]):
            out[i + j] = out[i + j] + x * y
    return out


def _geom(c, step, W, one):
    """(1 - c T^step)^{-1} truncated at T^W."""
    z = one.zero()
    out = [z] * (W + 1)
    p = one
    for k in range(0, W // step + 1):
        out[k * step] = p
        p = p * c
    return out


def _prod_geoms(cs, W, one):
    z = one.zero()
    res = [one] + [z] * W
    for c in cs:
        res = _ps_mul(res, _geom(c, 1, W, one), W)
    return res


def _prod(xs, one):
    p = one
    for x in xs:
        p = p * x
    return p


class _SchurEval:
    """Memoized S_k values at fixed variable values."""

    def __init__(self, xs, max_weight):
        self.xs = xs
        self.n = len(xs)
        self.h = complete_h(elementary_from_values(xs), max_weight + self.n + 1)
        self.memo = {}

    def S(self, k):
        k = tuple(k)
        if k not in self.memo:
            self.memo[k] = schur_jacobi_trudi(SchurIndex(self.n, k), self.h)
        return self.memo[k]


def _pad(k, n):
    return tuple(k) + (0,) * (n - 1 - len(k))


def lhs_cauchy(xs, ys, W):
    one = xs[0].one()
    return _prod_geoms([x * y for x in xs for y in ys], W, one)


def rhs_cauchy(xs, ys, W):
    n = len(xs)
    one = xs[0].one()
    Sx, Sy = _SchurEval(xs, W), _SchurEval(ys, W)
    z = one.zero()
    s = [z] * (W + 1)
    for w in range(W + 1):
        for k in indices_of_weight(n, w):
            s[w] = s[w] + Sx.S(k) * Sy.S(k)
    return _ps_mul(_geom(_prod(xs, one) * _prod(ys, one), n, W, one), s, W)


def rhs_cauchy_rect(xs, ys, W):
    """n < l: sum over (k_1..k_n) of S_k(x) S_k'(y) X^{k_n} T^{k_1 + ... + n k_n}."""
    n, l = len(xs), len(ys)
    if not n < l:
        raise ValueError("rectangular Cauchy needs n < l")
    one = xs[0].one()
    X = _prod(xs, one)
    Sy = _SchurEval(ys, W)
    Sx = _SchurEval(xs, W) if n >= 2 else None
    z = one.zero()
    s = [z] * (W + 1)
    for w in range(W + 1):
        for kk in indices_of_weight(n + 1, w):
            k, kn = kk[:n - 1], kk[n - 1]
            sx = Sx.S(k) if Sx else (one if not k else None)
            s[w] = s[w] + sx * Sy.S(_pad(kk, l)) * X ** kn
    return s


def lhs_littlewood_sym(xs, W):
    one = xs[0].one()
    n = len(xs)
    return _prod_geoms([xs[i] * xs[j] for i in range(n) for j in range(i, n)], W, one)


def rhs_littlewood_sym(xs, W, halve=True):
    """(1 - X^2 T^n)^{-1} sum_{k all even} S_k T^{wt(k)/2}; halve=False uses T^{wt(k)}."""
    n = len(xs)
    one = xs[0].one()
    S = _SchurEval(xs, 2 * W)
    z = one.zero()
    s = [z] * (W + 1)
    for w in range(2 * W + 1):
        e = w // 2 if halve else w
        if e > W:
            continue
        for k in indices_of_weight(n, w):
            if all(x % 2 == 0 for x in k):
                s[e] = s[e] + S.S(k)
    X = _prod(xs, one)
    return _ps_mul(_geom(X * X, n, W, one), s, W)


def lhs_littlewood_alt(xs, W):
    one = xs[0].one()
    n = len(xs)
    return _prod_geoms([xs[i] * xs[j] for i in range(n) for j in range(i + 1, n)], W, one)


def rhs_littlewood_alt(xs, W):
    """(1 - X T^{n/2})^{-eps} sum_{k_i = 0 for odd i} S_k T^{k_2 + 2k_4 + ...}."""
    n = len(xs)
    one = xs[0].one()
    S = _SchurEval(xs, 2 * W)
    z = one.zero()
    s = [z] * (W + 1)
    for w in range(0, 2 * W + 1, 2):
        for k in indices_of_weight(n, w):
            if all(x == 0 for i, x in enumerate(k) if (i + 1) % 2):
                s[w // 2] = s[w // 2] + S.S(k)
    if n % 2 == 0:
        return _ps_mul(_geom(_prod(xs, one), n // 2, W, one), s, W)
    return s


def reorder_check(xs, W):
    """X^{|k|} S_k(1/x) = S_{reversed k}(x) for all k of weight <= W (values in K)."""
    n = len(xs)
    one = xs[0].one()
    X = _prod(xs, one)
    inv = [one / x for x in xs]
    S, Si = _SchurEval(xs, W), _SchurEval(inv, W)
    for w in range(W + 1):
        for k in indices_of_weight(n, w):
            if X ** sum(k) * Si.S(k) != S.S(tuple(reversed(k))):
                return False
    return True


def slambda_check(xs, W):
    """s_lambda = X^{lambda_n} S_{lambda_1 - lambda_2, ...} for partitions with |lambda| <= W + n."""
    n = len(xs)
    one = xs[0].one()
    X = _prod(xs, one)
    S = _SchurEval(xs, W + n)
    for w in range(W + 1):
        for k in indices_of_weight(n, w):
            lam0 = SchurIndex(n, k).partition()
            for ln in range(0, 2):
                lam = [x + ln for x in lam0]
                if schur_lambda_jt(lam, S.h) != X ** ln * S.S(k):
                    return False
    return True


def _random_values(R, rng, n, distinct=True, nonzero=False):
    while True:
        xs = [R.random(rng, 2) for _ in range(n)]
        if nonzero and any(x.is_zero() for x in xs):
            continue
        if distinct and len(set(xs)) < n:
            continue
        return xs


SUITES = ("cauchy", "cauchy_rect", "littlewood_sym", "littlewood_alt", "reorder", "slambda")


def identity_suite(which, n, W, trials=50, F=None, seed=0):
    """Check one identity family on seeded random specializations in F_q[theta]."""
    from .fields import GF
    if not 2 <= n <= 4 or W > 8:
        raise ValueError("identity_suite guard: 2 <= n <= 4 and W <= 8")
    if which not in SUITES:
        raise ValueError(f"unknown suite {which}")
    F = F or GF(5)
    R = PolyRing(F)
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        if which == "cauchy":
            xs, ys = _random_values(R, rng, n, False), _random_values(R, rng, n, False)
            ok = lhs_cauchy(xs, ys, W) == rhs_cauchy(xs, ys, W)
        elif which == "cauchy_rect":
            xs, ys = _random_values(R, rng, n, False), _random_values(R, rng, n + 1, False)
            ok = lhs_cauchy(xs, ys, W) == rhs_cauchy_rect(xs, ys, W)
        elif which == "littlewood_sym":
            xs = _random_values(R, rng, n, False)
            ok = lhs_littlewood_sym(xs, W) == rhs_littlewood_sym(xs, W)
        elif which == "littlewood_alt":
            xs = _random_values(R, rng, n, False)
            ok = lhs_littlewood_alt(xs, W) == rhs_littlewood_alt(xs, W)
        elif which == "reorder":
            xs = [RatK.from_poly(x) for x in _random_values(R, rng, n, False, True)]
            ok = reorder_check(xs, W)
        else:
            xs = _random_values(R, rng, n, False)
            ok = slambda_check(xs, W)
        failures += not ok
    return {"suite": which, "n": n, "W": W, "trials": trials, "seed": seed, "failures": failures,
            "pass": failures == 0}


def jt_vs_bialternant(n, max_weight, trials=50, F=None, seed=0):
    """Jacobi-Trudi against the bialternant quotient at distinct random values."""
    from .fields import GF
    F = F or GF(5)
    R = PolyRing(F)
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        xs = [RatK.from_poly(x) for x in _random_values(R, rng, n, True)]
        S = _SchurEval(xs, max_weight)
        for w in range(max_weight + 1):
            for k in indices_of_weight(n, w):
                if S.S(k) != schur_bialternant_oracle(SchurIndex(n, k), xs):
                    bad += 1
    return {"n": n, "max_weight": max_weight, "trials": trials, "mismatches": bad, "pass": bad == 0}
