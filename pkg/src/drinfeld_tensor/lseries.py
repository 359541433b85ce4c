"""mu, nu and bold-mu, and the L-series built from them.

Conventions.  For an irreducible monic f with Frobenius polynomial P_f,
    sum_m mu(f^m) X^m = 1 / Q_f^vee(fX),   sum_m nu(f^m) X^m = 1 / Q_f(X),
and bold-mu(f^k_1, ..., f^k_{r-1}) = S_k(alpha) f^(k_1 + ... + k_{r-1}) where
alpha are the roots of P_f^vee.  With h_m(alpha) f^m = mu(f^m), Jacobi-Trudi
gives det(mu(f^(lambda_i - i + j))) = S_k(alpha) f^|lambda|, so the
determinant is divided exactly by f^(|lambda| - |k|).

Series in K_inf are summed over tuples of monic polynomials, grouped into
prime-power local terms.  Every local term of a bold-mu series has degree
at most -eps * W * deg f (W the index weight), which certifies the tail.
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np

from .laurent import Laurent
from .poly import PolyA, factor, enumerate_monic_irreducibles, irreducible_count
from .ratfunc import RatK
from .symmetric import schur_lambda_jt
from .frobenius import (frob_charpoly, frob_charpoly_fast, dualize_reciprocal, chi, chi_bar,
                        tensor_structure_charpoly)


class LSeriesError(RuntimeError):
    pass


class GuardError(OverflowError):
    pass


# ---- power series helpers (lists, constant term first) ----

def _ps_mul(a, b, n):
    z = a[0].zero()
    out = [z] * n
    for i, x in enumerate(a[:n]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[:n - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def ps_inverse_newton(c, n):
    """First n coefficients of 1/c for c with constant term 1, by Newton doubling."""
    one = c[0].one()
    if c[0] != one:
        raise ValueError("Newton inversion expects constant term 1")
    g = [one]
    k = 1
    while k < n:
        k = min(2 * k, n)
        cg = _ps_mul(c, g, k)
        e = [-x for x in cg]
        e[0] = e[0] + one + one
        g = _ps_mul(g, e, k)
    return g[:n]


def ps_inverse(c, n):
    """First n coefficients of 1/c for c with invertible constant term (RatK or unit)."""
    inv0 = c[0].inverse() if hasattr(c[0], "inverse") else None
    out = [inv0]
    for m in range(1, n):
        s = c[0].zero()
        for i in range(1, min(m, len(c) - 1) + 1):
            if not c[i].is_zero():
                s = s + c[i] * out[m - i]
        out.append(-(s * inv0))
    return out


# ---- mu, nu, bold mu ----

def _sign_chi(phi, f):
    """(-1)^r chi(f) as a field code."""
    F = phi.F
    x = chi(phi, f)
    return F.neg(x) if phi.r % 2 else x


class MuTable:
    """Memo of P_f, mu, nu and bold-mu values for one Drinfeld module."""

    def __init__(self, phi, fast=True):
        self.phi = phi
        self.r = phi.r
        self.F = phi.F
        self.fast = fast
        self._P = {}
        self._mu = {}
        self._nu = {}
        self._bm = {}

    def charpoly(self, f):
        P = self._P.get(f)
        if P is None:
            if self.fast and self.r <= 2:
                P = frob_charpoly_fast(self.phi, f)
            else:
                P = frob_charpoly(self.phi, f, check=False, verify=not self.fast)
            self._P[f] = P
        return P

    def mu(self, f, m):
        if m < 0:
            return f.zero()
        lst = self._mu.get(f)
        if lst is None or len(lst) <= m:
            lst = mu_by_recursion(self.charpoly(f), max(m, 2 * len(lst or [0])))
            self._mu[f] = lst
        return lst[m]

    def nu(self, f, m):
        if m < 0:
            return f.zero()
        lst = self._nu.get(f)
        if lst is None or len(lst) <= m:
            lst = nu_by_recursion(self.charpoly(f), max(m, 2 * len(lst or [0])))
            self._nu[f] = lst
        return lst[m]

    def boldmu_prime(self, f, k):
        k = tuple(k)
        if len(k) != self.r - 1:
            raise ValueError(f"index must have r-1 = {self.r - 1} entries")
        key = (f, k)
        v = self._bm.get(key)
        if v is None:
            v = _boldmu_prime(self, f, k)
            self._bm[key] = v
        return v

    def boldmu(self, *args):
        return boldmu(self, *args)


def mu_by_inversion(P, m_max):
    """mu(f^0..f^m_max) from 1/Q_f^vee(fX), Newton inversion in A[[X]]."""
    Qvf = dualize_reciprocal(P)["Q_dual_fX"]
    return ps_inverse_newton(Qvf, m_max + 1)


def mu_by_recursion(P, m_max):
    """mu(f^n) = mu(f) mu(f^(n-1)) - (-1)^r chi sum_{j=2}^{r-1} c_j f^(j-1) mu(f^(n-j))
    - (-1)^r chi f^(r-1) mu(f^(n-r)), with mu(f^0) = 1 and mu = 0 off A_+."""
    r, f = P.r, P.f
    F = f.F
    s = _sign_chi(P.phi, f)
    one = f.one()
    mu1 = P.c(1).scale(F.neg(s))
    lower = [(j, (P.c(j) * f ** (j - 1)).scale(s)) for j in range(2, r)]
    top = (f ** (r - 1)).scale(s)
    out = [one]
    for n in range(1, m_max + 1):
        v = mu1 * out[n - 1]
        for j, cj in lower:
            if n - j >= 0 and not cj.is_zero():
                v = v - cj * out[n - j]
        if n - r >= 0 and r >= 2:
            v = v - top * out[n - r]
        out.append(v)
    return out


def nu_by_inversion(P, m_max):
    Q = dualize_reciprocal(P)["Q"]
    return ps_inverse_newton(Q, m_max + 1)


def nu_by_recursion(P, m_max):
    """nu(f^n) = nu(f) nu(f^(n-1)) - sum_{j=2}^{r-1} c_(r-j) nu(f^(n-j)) - (-1)^r chi_bar f nu(f^(n-r))."""
    r, f = P.r, P.f
    F = f.F
    one = f.one()
    cb = chi_bar(P.phi, f)
    top = f.scale(F.neg(cb) if r % 2 else cb)
    nu1 = -P.c(r - 1)
    lower = [(j, P.c(r - j)) for j in range(2, r)]
    out = [one]
    for n in range(1, m_max + 1):
        v = nu1 * out[n - 1]
        for j, c in lower:
            if n - j >= 0 and not c.is_zero():
                v = v - c * out[n - j]
        if n - r >= 0 and r >= 2:
            v = v - top * out[n - r]
        out.append(v)
    return out


def mu_prime_powers(phi, f, m_max, P=None):
    """mu(f^0..f^m_max); inversion and recursion must agree exactly."""
    P = P or frob_charpoly(phi, f)
    a = mu_by_inversion(P, m_max)
    b = mu_by_recursion(P, m_max)
    if a != b:
        raise LSeriesError(f"mu inversion and recursion disagree at f={f}")
    return a


def nu_prime_powers(phi, f, m_max, P=None):
    P = P or frob_charpoly(phi, f)
    a = nu_by_inversion(P, m_max)
    b = nu_by_recursion(P, m_max)
    if a != b:
        raise LSeriesError(f"nu inversion and recursion disagree at f={f}")
    return a


def _partition(k):
    lam = []
    s = 0
    for x in reversed(k):
        s += x
        lam.append(s)
    return list(reversed(lam))


def boldmu_degree_bound_ok(r, degs, value):
    """r deg(value) <= sum (r-i) deg a_i."""
    if value.is_zero():
        return True
    return r * value.degree() <= sum((r - i) * d for i, d in enumerate(degs, start=1))


def _boldmu_prime(table, f, k):
    r = table.r
    if any(x < 0 for x in k):
        raise ValueError("negative index")
    lam = _partition(k)
    if not lam or lam[0] == 0:
        return f.one()
    h = [table.mu(f, m) for m in range(lam[0] + len(lam))]
    D = schur_lambda_jt(lam, h)
    excess = sum(lam) - sum(k)
    v = D.exact_div(f ** excess) if excess else D
    if not boldmu_degree_bound_ok(r, [x * f.degree() for x in k], v):
        raise LSeriesError(f"degree bound fails for bold mu at f={f}, k={k}")
    return v


def boldmu_prime(phi, f, k, table=None):
    table = table or MuTable(phi)
    return table.boldmu_prime(f, k)


def boldmu(table, *args):
    """bold mu(a_1, ..., a_{r-1}) for monic a_i, multiplicatively over primes."""
    r = table.r
    if len(args) != r - 1:
        raise ValueError(f"need r-1 = {r - 1} arguments")
    if any(not a.is_monic() for a in args):
        raise ValueError("arguments must be monic")
    exps = {}
    for i, a in enumerate(args):
        if a.degree() == 0:
            continue
        for f, e in factor(a):
            exps.setdefault(f, [0] * (r - 1))[i] += e
    one = args[0].one() if args else None
    v = one
    for f, k in exps.items():
        v = v * table.boldmu_prime(f, k)
    if not boldmu_degree_bound_ok(r, [a.degree() for a in args], v):
        raise LSeriesError("degree bound fails for bold mu")
    return v


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for x in range(total + 1):
        for rest in _compositions(total - x, parts - 1):
            yield (x,) + rest


def boldmu_relation_checks(phi, f, bound, table=None):
    """Check the Pieri-type product formulas for bold mu at the prime f.

    general: mu(f^k) bmu(f^k_1..) = sum over m_0+..+m_{r-1} = k, m_i <= k_i of
             bmu(f^(k_1+m_0-m_1), ..) chi^(m_{r-1}) f^(k-m_0), all k, k_i <= bound.
    e_j:     bmu(f^k,1..) bmu(e_j) = bmu(f^k e_1 + e_j) + f bmu(f^(k-1) e_1 + e_(j+1)),
             the last term being chi f bmu(f^(k-1),1..) when j = r-1.
    """
    r = phi.r
    if r < 2:
        raise ValueError("relations need r >= 2")
    table = table or MuTable(phi)
    F = phi.F
    c = chi(phi, f)
    n = r - 1
    results = {"general": [], "explicit": []}
    for k in range(bound + 1):
        for ks in product(range(bound + 1), repeat=n):
            lhs = table.mu(f, k) * table.boldmu_prime(f, ks)
            rhs = f.zero()
            for ms in _compositions(k, r):
                if any(ms[i] > ks[i - 1] for i in range(1, r)):
                    continue
                new = tuple(ks[i] + ms[i] - ms[i + 1] for i in range(n))
                term = table.boldmu_prime(f, new) * f ** (k - ms[0])
                rhs = rhs + term.scale(F.pow(c, ms[r - 1]))
            results["general"].append((k, ks, lhs == rhs))
    for k in range(1, bound + 1):
        for j in range(1, r):
            ej = tuple(1 if i == j - 1 else 0 for i in range(n))
            base = tuple(k if i == 0 else 0 for i in range(n))
            lhs = table.boldmu_prime(f, base) * table.boldmu_prime(f, ej)
            first = tuple(base[i] + ej[i] for i in range(n))
            lower = tuple(k - 1 if i == 0 else 0 for i in range(n))
            if j < r - 1:
                second = tuple(lower[i] + (1 if i == j else 0) for i in range(n))
                rhs = table.boldmu_prime(f, first) + table.boldmu_prime(f, second) * f
            else:
                rhs = table.boldmu_prime(f, first) + (table.boldmu_prime(f, lower) * f).scale(c)
            results["explicit"].append((k, j, lhs == rhs))
    results["pass"] = all(x[-1] for x in results["general"]) and all(x[-1] for x in results["explicit"])
    return results


# ---- series specifications ----

KINDS = ("goss_dual", "twisted_zeta", "conv_equal_rank", "conv_unequal_rank", "sym_twiddle", "alt_hat")


class SeriesSpec:
    """One L-series together with its precision M and cutoff D (None = automatic).

    Tail exponents eps (block of weighted degree W has degree <= -eps W):
        goss_dual          s + 1/r
        twisted_zeta       s
        conv_equal_rank    s + 2/r
        conv_unequal_rank  s + 1/r + 1/l
        sym_twiddle        s + 2/r
        alt_hat            s/2 + 1/r   (W counts slot i with weight i)
    For twisted_zeta, chi is an F_q code c with chi(a) = c^deg(a).
    """

    def __init__(self, kind, s=0, phi=None, psi=None, chi=None, M=10, D=None):
        if kind not in KINDS:
            raise ValueError(f"unknown series kind {kind}")
        if s < 0:
            raise ValueError("s must be >= 0")
        self.kind, self.s, self.phi, self.psi, self.M = kind, s, phi, psi, M
        self.chi = chi
        if kind == "twisted_zeta":
            if chi is None:
                self.chi = 1
            if phi is None:
                raise ValueError("use zeta_spec for a twisted zeta without a module")
        else:
            if phi is None:
                raise ValueError(f"{kind} needs a Drinfeld module")
            if not phi.everywhere_good:
                raise ValueError("phi must have everywhere good reduction")
        r = phi.r if phi is not None else None
        if kind == "conv_equal_rank":
            if psi is None or psi.r != r or r < 2:
                raise ValueError("conv_equal_rank needs r = l >= 2")
        if kind == "conv_unequal_rank":
            if psi is None or not (2 <= r < psi.r):
                raise ValueError("conv_unequal_rank needs 2 <= r < l")
        if kind in ("sym_twiddle", "alt_hat"):
            if r < 2:
                raise ValueError(f"{kind} needs r >= 2")
            if phi.F.p == 2:
                raise ValueError(f"{kind} needs p != 2")
        if self.eps() <= 0:
            raise ValueError(f"divergent series: eps = {self.eps()}")
        self.D = D if D is not None else self.auto_D()

    @property
    def F(self):
        if self.phi is not None:
            return self.phi.F
        return self._F

    def eps(self):
        s = Fraction(self.s)
        k = self.kind
        if k == "twisted_zeta":
            return s
        r = self.phi.r
        if k == "goss_dual":
            return s + Fraction(1, r)
        if k in ("conv_equal_rank", "sym_twiddle"):
            return s + Fraction(2, r)
        if k == "conv_unequal_rank":
            return s + Fraction(1, r) + Fraction(1, self.psi.r)
        return s / 2 + Fraction(1, r)

    def auto_D(self):
        return math.ceil(Fraction(self.M) / self.eps())

    def with_D(self, D):
        out = SeriesSpec.__new__(SeriesSpec)
        out.__dict__.update(self.__dict__)
        out.D = D
        return out

    def describe(self):
        return {"kind": self.kind, "s": self.s, "M": self.M, "D": self.D, "eps": str(self.eps())}


def zeta_spec(F, s, chi_code=1, M=10, D=None):
    spec = SeriesSpec.__new__(SeriesSpec)
    spec.kind, spec.s, spec.phi, spec.psi, spec.M = "twisted_zeta", s, None, None, M
    spec.chi = chi_code
    spec._F = F
    if s <= 0:
        raise ValueError("divergent series: eps = 0")
    spec.D = D if D is not None else spec.auto_D()
    return spec


# ---- local terms ----

class _Local:
    """Nonzero exponent vectors at a prime and their terms, for one series kind."""

    def __init__(self, spec):
        self.spec = spec
        self.M = spec.M
        k = spec.kind
        self.tables = []
        if spec.phi is not None:
            self.tables.append(MuTable(spec.phi))
        if spec.psi is not None:
            self.tables.append(MuTable(spec.psi))
        if k in ("goss_dual", "twisted_zeta"):
            self.nvars = 1
        elif k == "conv_unequal_rank":
            self.nvars = spec.phi.r
        else:
            self.nvars = spec.phi.r - 1
        self._vecs = {}
        self._terms = {}
        self._inv = {}
        self.eps = spec.eps()

    def weight(self, v):
        return sum(i * x for i, x in enumerate(v, start=1))

    def allowed(self, v):
        if self.spec.kind == "alt_hat":
            return all(x == 0 for i, x in enumerate(v, start=1) if i % 2)
        return True

    def vectors(self, d):
        """(W, bound, v) for all allowed v != 0 with eps*W*d <= M, sorted by W."""
        out = self._vecs.get(d)
        if out is not None:
            return out
        wmax = math.floor(Fraction(self.M) / (self.eps * d))
        out = []
        for w in range(1, wmax + 1):
            for v in _weighted(self.nvars, w):
                if self.allowed(v):
                    out.append((w * d, -self.eps * w * d, v))
        self._vecs[d] = out
        return out

    def inv_fpow(self, f, e, prec):
        key = (f, e, prec)
        x = self._inv.get(key)
        if x is None:
            x = Laurent.from_poly(f ** e).inverse(prec)
            self._inv[key] = x
        return x

    def numerator(self, f, v):
        """(A-numerator, f-exponent of the denominator)."""
        spec = self.spec
        s = spec.s
        kind = spec.kind
        w = self.weight(v)
        tot = sum(v)
        if kind == "twisted_zeta":
            m = v[0]
            return f.one().scale(spec.F.pow(spec.chi, m * f.degree())), m * s
        T = self.tables[0]
        if kind == "goss_dual":
            return T.mu(f, v[0]), v[0] * (s + 1)
        if kind == "conv_equal_rank":
            return T.boldmu_prime(f, v) * self.tables[1].boldmu_prime(f, v), 2 * tot + s * w
        if kind == "conv_unequal_rank":
            r, l = spec.phi.r, spec.psi.r
            a = T.boldmu_prime(f, v[:r - 1])
            b = self.tables[1].boldmu_prime(f, tuple(v) + (0,) * (l - 1 - r))
            c = chi(spec.phi, f)
            return (a * b).scale(spec.F.pow(c, v[r - 1])), 2 * tot + s * w
        if kind == "sym_twiddle":
            return T.boldmu_prime(f, tuple(2 * x for x in v)), 2 * tot + s * w
        if kind == "alt_hat":
            return T.boldmu_prime(f, v), tot + s * (w // 2)
        raise ValueError(kind)

    def term(self, f, v):
        key = (f, v)
        t = self._terms.get(key)
        if t is None:
            num, e = self.numerator(f, v)
            if num.is_zero():
                t = Laurent.zero(f.F, self.M)
            else:
                t = Laurent.from_poly(num) * self.inv_fpow(f, e, self.M + num.degree())
                t = t.with_prec(self.M)
            self._terms[key] = t
        return t

    def factor(self, f):
        """Full local factor 1 + sum_v term(f, v) at precision M."""
        acc = Laurent.one(f.F).with_prec(self.M)
        for _, _, v in self.vectors(f.degree()):
            acc = acc + self.term(f, v)
        return acc


def _weighted(n, w):
    """All v in N^n with sum i v_i = w."""
    out = []

    def rec(i, rem, acc):
        if i == n:
            if rem == 0:
                out.append(tuple(acc))
            return
        for x in range(rem // (i + 1) + 1):
            rec(i + 1, rem - (i + 1) * x, acc + [x])

    rec(0, w, [])
    return out


def _prime_list(F, dmax):
    if dmax < 1:
        return []
    return enumerate_monic_irreducibles(F, dmax)


# ---- twisted zeta by blocks ----

def _tables(F):
    if F.m == 1:
        return None
    return (np.array(F._add, dtype=np.int64), np.array(F._mul, dtype=np.int64), np.array(F._neg, dtype=np.int64))


def power_sum_block(F, d, k, R, guard=3 ** 14):
    """Coefficients x^0..x^R of sum over b in F_q^d of (1 + b_1 x + ... + b_d x^d)^(-k).

    If d > R the truncated summand depends only on b_1..b_R, so each value
    is counted q^(d-R) times and the block vanishes.
    """
    if R < 0:
        return []
    if d > R:
        return [0] * (R + 1)
    q = F.q
    if q ** d > guard:
        raise GuardError(f"block q^{d} exceeds guard {guard}")
    n = q ** d
    B = np.array(list(product(range(q), repeat=d)), dtype=np.int64).reshape(n, d)
    T = _tables(F)
    p = F.p

    def mul(a, b):
        return (a * b) % p if T is None else T[1][a, b]

    def add(a, b):
        return (a + b) % p if T is None else T[0][a, b]

    def neg(a):
        return (-a) % p if T is None else T[2][a]

    L = R + 1
    u = np.zeros((n, L), dtype=np.int64)
    u[:, 0] = 1
    for j in range(1, L):
        s = np.zeros(n, dtype=np.int64)
        for i in range(1, min(j, d) + 1):
            s = add(s, mul(B[:, i - 1], u[:, j - i]))
        u[:, j] = neg(s)
    w = u.copy()
    for _ in range(k - 1):
        nw = np.zeros_like(w)
        for j in range(L):
            s = np.zeros(n, dtype=np.int64)
            for i in range(j + 1):
                s = add(s, mul(w[:, i], u[:, j - i]))
            nw[:, j] = s
        w = nw
    if T is None:
        return [int(x) for x in (w.sum(axis=0) % p)]
    acc = w
    while acc.shape[0] > 1:
        if acc.shape[0] % 2:
            acc = np.vstack([acc, np.zeros((1, L), dtype=np.int64)])
        h = acc.shape[0] // 2
        acc = T[0][acc[:h], acc[h:]]
    return [int(x) for x in acc[0]]


def zeta_blocks(F, k, chi_code, M, D):
    """Sum over monic a with deg a <= D of chi(a)/a^k at absolute precision M."""
    acc = Laurent.zero(F, M)
    used = []
    for d in range(0, D + 1):
        R = M - d * k
        if R < 0:
            break
        coeffs = power_sum_block(F, d, k, R)
        c = F.pow(chi_code, d)
        if any(coeffs):
            blk = Laurent(F, -d * k, [F.mul(c, x) for x in coeffs], M)
            acc = acc + blk
        used.append(d)
    return acc, used


# ---- Dirichlet sums and Euler products ----

def _dfs_sum(loc, primes, D, M):
    F = loc.spec.F
    acc = Laurent.one(F).with_prec(M)
    stats = {"terms": 1, "pruned": 0}

    def rec(start, budget, prefix, pdeg):
        for j in range(start, len(primes)):
            f = primes[j]
            d = f.degree()
            if d > budget or pdeg - loc.eps * d < -M:
                break
            for W, bound, v in loc.vectors(d):
                if W > budget:
                    break
                if pdeg + bound < -M:
                    stats["pruned"] += 1
                    break
                t = loc.term(f, v)
                if t.is_zero():
                    continue
                newp = (prefix * t).with_prec(M)
                if newp.is_zero():
                    continue
                nonlocal acc
                acc = acc + newp
                stats["terms"] += 1
                rec(j + 1, budget - W, newp, newp.degree())

    rec(0, D, Laurent.one(F).with_prec(M), 0)
    return acc, stats


PRIME_GUARD = 20000


def dirichlet_sum(spec, prime_degree_max=None, info=False, _loc=None, prime_guard=PRIME_GUARD):
    """The series at s, summed over tuples of total weighted degree <= D, precision M.

    Refuses (GuardError) when more than prime_guard primes would be needed.
    """
    M, D = spec.M, spec.D
    F = spec.F
    if spec.kind == "twisted_zeta" and prime_degree_max is None:
        val, used = zeta_blocks(F, spec.s, spec.chi, M, D)
        return (val, {"method": "blocks", "degrees": used}) if info else val
    loc = _loc or _Local(spec)
    dmax = min(D, math.floor(Fraction(M) / loc.eps))
    if prime_degree_max is not None:
        dmax = min(dmax, prime_degree_max)
    need = sum(irreducible_count(F.q, d) for d in range(1, dmax + 1))
    if need > prime_guard:
        raise GuardError(f"{spec.kind} at M={M} needs the {need} primes of degree <= {dmax}; "
                         f"guard is {prime_guard}")
    primes = _prime_list(F, dmax)
    val, stats = _dfs_sum(loc, primes, D if prime_degree_max is None else 10 ** 9, M)
    stats.update(method="prime-power search", primes=len(primes))
    return (val, stats) if info else val


def euler_product(spec, d_max):
    """Product of the local factors over primes of degree <= d_max, precision M."""
    F = spec.F
    M = spec.M
    acc = Laurent.one(F).with_prec(M)
    if d_max < 1:
        return acc
    loc = _Local(spec)
    for f in _prime_list(F, d_max):
        acc = (acc * loc.factor(f)).with_prec(M)
    return acc


def cutoff_stability(spec, extra=2):
    """dirichlet_sum at D and D + extra agree through precision M."""
    a = dirichlet_sum(spec)
    b = dirichlet_sum(spec.with_D(spec.D + extra))
    return {"D": spec.D, "D2": spec.D + extra, "equal": a == b, "value": a}


# ---- per-prime factorization identities, as series in u = f^(-s) ----

def _ratk(a):
    return RatK.from_poly(a)


def _u_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _geom_u(c, step, W, one):
    """(1 - c u^step)^(-1) through u^W."""
    z = one - one
    out = [z] * (W + 1)
    p = one
    for i in range(0, W + 1, step):
        out[i] = p
        p = p * c
    return out


def euler_factor_identity_check(kind, phi, psi=None, f=None, W=8, table_phi=None, table_psi=None):
    """Q^vee_{E,f}(u)^(-1) against the zeta factor times the bold-mu sum, through u^W."""
    if W > 10:
        raise GuardError("W must be <= 10")
    F = phi.F
    r = phi.r
    Tp = table_phi or MuTable(phi)
    P1 = Tp.charpoly(f)
    one = _ratk(f.one())
    zero = one - one
    finv = one / _ratk(f)
    cp = chi(phi, f)
    if kind == "tensor":
        Tq = table_psi or MuTable(psi)
        P2 = Tq.charpoly(f)
        Pd = tensor_structure_charpoly(P1, P2, "tensor", dual=True)
    elif kind in ("sym2", "alt2"):
        Pd = tensor_structure_charpoly(P1, None, kind, dual=True)
    else:
        raise ValueError(kind)
    Qd = list(reversed(Pd))
    lhs = ps_inverse(Qd, W + 1)
    rhs = [zero] * (W + 1)
    if kind == "tensor" and psi.r == r:
        for w in range(W + 1):
            for k in _weighted(r - 1, w):
                t = _ratk(Tp.boldmu_prime(f, k) * Tq.boldmu_prime(f, k)) * finv ** (2 * sum(k))
                rhs[w] = rhs[w] + t
        z = _ratk(f.one().scale(F.mul(cp, chi(psi, f)))) * finv ** 2
        rhs = _series_mul(_geom_u(z, r, W, one), rhs, W)
        label = "tensor, equal rank"
    elif kind == "tensor":
        l = psi.r
        if r > l:
            raise ValueError("unequal-rank check expects r < l")
        for w in range(W + 1):
            for k in _weighted(r, w):
                a = Tp.boldmu_prime(f, k[:r - 1])
                b = Tq.boldmu_prime(f, tuple(k) + (0,) * (l - 1 - r))
                t = _ratk((a * b).scale(F.pow(cp, k[r - 1]))) * finv ** (2 * sum(k))
                rhs[w] = rhs[w] + t
        label = "tensor, unequal rank"
    elif kind == "sym2":
        for w in range(W + 1):
            for k in _weighted(r - 1, w):
                t = _ratk(Tp.boldmu_prime(f, tuple(2 * x for x in k))) * finv ** (2 * sum(k))
                rhs[w] = rhs[w] + t
        z = _ratk(f.one().scale(F.mul(cp, cp))) * finv ** 2
        rhs = _series_mul(_geom_u(z, r, W, one), rhs, W)
        label = "sym2"
    else:
        if r == 2:
            rhs = _geom_u(_ratk(f.one().scale(cp)) * finv, 1, W, one)
            label = "alt2, r = 2"
        else:
            # k_i = 0 for odd i; u-exponent is half the weight
            for w2 in range(0, 2 * W + 1, 2):
                for k in _weighted(r - 1, w2):
                    if any(x for i, x in enumerate(k, start=1) if i % 2):
                        continue
                    t = _ratk(Tp.boldmu_prime(f, k)) * finv ** sum(k)
                    rhs[w2 // 2] = rhs[w2 // 2] + t
            if r % 2 == 0:
                z = _ratk(f.one().scale(cp)) * finv
                rhs = _series_mul(_geom_u(z, r // 2, W, one), rhs, W)
                label = "alt2, r even"
            else:
                label = "alt2, r odd"
    ok = all(a == b for a, b in zip(lhs, rhs))
    return {"kind": kind, "case": label, "f": f, "W": W, "pass": ok,
            "mismatch": [i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b]}


def _series_mul(a, b, W):
    z = a[0] - a[0]
    out = [z] * (W + 1)
    for i in range(W + 1):
        if a[i].is_zero():
            continue
        for j in range(W + 1 - i):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


# ---- special values at s = 0 ----

SPECIAL_KINDS = ("carlitz", "alt2", "sym2", "tensor")


def _residual(a, b=None):
    d = a if b is None else a - b
    if d.is_zero():
        return -(d.prec + 1) if d.prec is not None else None
    return d.degree()


def _carlitz_log_one(F, M):
    from .tmodules import DrinfeldModule, drinfeld_as_tmodule, exp_log_coeffs
    el = exp_log_coeffs(drinfeld_as_tmodule(DrinfeldModule.carlitz(F)), max(2, math.ceil(math.log(M + 2, F.q)) + 1))
    acc = Laurent.zero(F, M)
    for C in el.log:
        acc = acc + C[0][0].to_laurent(M)
    return acc


def special_value_report(kind, phi=None, psi=None, M=10, D=None, F=None):
    """Compare an s = 0 value with its regulator side.

    carlitz: zeta_C(1) against Log_C(1) (the class module is trivial).
    alt2:    L(A, chi_phi, 1) against Log_{Alt^2 phi}(1), rank 2.
    sym2:    V = L(mu~, 0) L(A, chi^2, 2) / Reg_{Sym^2 phi}, split into its nearest
             polynomial and a tail; the polynomial is the class-order candidate.
    tensor:  the same for phi (x) phi with L(mu x mu, 0) L(A, chi^2, 2).
    """
    from .regulators import LogFamily, series_eval, reg_closed_form
    if kind not in SPECIAL_KINDS:
        raise ValueError(f"unknown special value kind {kind}")
    if kind == "carlitz":
        F = F or (phi.F if phi is not None else None)
        if F is None:
            raise ValueError("carlitz needs a field")
        spec = zeta_spec(F, 1, 1, M=M, D=D)
        lhs = dirichlet_sum(spec)
        rhs = _carlitz_log_one(F, M)
        return {"kind": kind, "M": M, "D": spec.D, "lhs": lhs, "rhs": rhs,
                "residual_degree": _residual(lhs, rhs), "series": [spec]}
    if phi is None or phi.r != 2 or not phi.everywhere_good:
        raise ValueError(f"{kind} needs a rank 2 module with kappa_2 in F_q^x")
    F = phi.F
    if F.p == 2:
        raise ValueError(f"{kind} needs p != 2")
    c = chi(phi, 1)
    if kind == "alt2":
        spec = zeta_spec(F, 1, c, M=M, D=D)
        lhs = dirichlet_sum(spec)
        fam = LogFamily(phi)
        rhs = Laurent.one(F).with_prec(M) + series_eval(fam.Lt0, phi.theta.one(), M)
        return {"kind": kind, "M": M, "D": spec.D, "lhs": lhs, "rhs": rhs,
                "residual_degree": _residual(lhs, rhs), "series": [spec]}
    if kind == "sym2":
        spec = SeriesSpec("sym_twiddle", 0, phi, M=M, D=D)
        reg, gamma = reg_closed_form("sym2", phi, M + 2)
    else:
        psi = psi or phi
        if psi != phi:
            raise ValueError("tensor special value is available for phi (x) phi only")
        spec = SeriesSpec("conv_equal_rank", 0, phi, phi, M=M, D=D)
        reg, gamma = reg_closed_form("tensor2", phi, M + 2)
    zspec = zeta_spec(F, 2, F.mul(c, c), M=M)
    Lv = dirichlet_sum(spec)
    z2 = dirichlet_sum(zspec)
    V = (Lv * z2).with_prec(M) / reg.with_prec(M)
    cand, tail = V.nearest_polynomial()
    return {"kind": kind, "M": M, "D": spec.D, "L_value": Lv, "zeta_factor": z2, "regulator": reg,
            "gamma": gamma, "V": V, "candidate": cand, "monic": cand.is_monic(),
            "residual_degree": _residual(tail), "series": [spec, zspec]}
