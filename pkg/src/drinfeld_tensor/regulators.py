"""Logarithms and regulators of phi (x) phi, Sym^2 phi and Alt^2 phi for rank 2.

phi_t = theta + kappa_1 tau + kappa_2 tau^2 with kappa_2 in F_q^x.  The
rational functions

    B_m(t) = kappa_1^(m-1)/(t - theta^(m)) B_{m-1}(t) + kappa_2/(t - theta^(m)) B_{m-2}(t),

B_0 = 1 and B_m = 0 for m < 0, satisfy B_m(theta) = beta_m, the coefficients of
Log_phi.  We keep B_m = N_m(t) / prod_{i<=m} (t - theta^(i)) with N_m a
polynomial in t over A, so every value at t = theta is a BracketFrac.
"""

import math

from .bivariate import BivarRat
from .bracket import BracketFrac
from .laurent import Laurent
from .linalg import det, matmul
from .poly import PolyA
from .tmodules import (build_tensor, build_sym2, build_alt2, exp_log_coeffs, matrix_T)


class RegulatorError(ValueError):
    pass


class DivergenceError(ArithmeticError):
    pass


KINDS = ("tensor2", "sym2", "alt2")


def _tp_eval(coeffs, x):
    acc = x.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _tp_dt(coeffs, F):
    return [c.scale(F.from_int(i)) for i, c in enumerate(coeffs)][1:]


class BmSequence:
    """B_m(t) and the four beta families for one rank-2 phi."""

    def __init__(self, phi):
        if phi.r != 2:
            raise RegulatorError("regulator formulas need rank 2")
        if not phi.everywhere_good:
            raise RegulatorError("kappa_2 must lie in F_q^x")
        self.phi = phi
        self.F = phi.F
        self.k1 = phi.kappa(1)
        self.k2 = phi.kappa(2)
        self.k2u = self.k2.c[0]
        self.theta = phi.theta
        one = self.theta.one()
        self._N = [(one,)]
        self._cache = {}

    def numerator(self, m):
        """N_m(t): coefficients in t, constant first."""
        while len(self._N) <= m:
            n = len(self._N)
            k1 = self.k1.twist(n - 1)
            a = tuple(k1 * c for c in self._N[n - 1])
            if n >= 2:
                # kappa_2 (t - theta^(n-1)) N_{n-2}
                lin = (-self.theta.twist(n - 1), self.theta.one())
                b = [self.theta.zero()] * (len(self._N[n - 2]) + 1)
                for i, c in enumerate(self._N[n - 2]):
                    for j, l in enumerate(lin):
                        b[i + j] = b[i + j] + self.k2 * c * l
                a = _add_tp(a, b)
            self._N.append(a)
        return self._N[m]

    def bm(self, m):
        """B_m(t) as a BivarRat with the product denominator."""
        F = self.F
        if m < 0:
            return BivarRat(F, ())
        den = (self.theta.one(),)
        for i in range(1, m + 1):
            den = _mul_tp(den, (-self.theta.twist(i), self.theta.one()))
        return BivarRat(F, self.numerator(m), den)

    def _den(self, m, shift=0):
        return {i + shift: 1 for i in range(1, m + 1)}

    def _sign(self, m):
        # prod (theta - theta^(q^i)) = (-1)^m prod [i]
        return self.F.neg(1) if m % 2 else 1

    def _get(self, key, fn):
        v = self._cache.get(key)
        if v is None:
            v = fn()
            self._cache[key] = v
        return v

    def _zero(self):
        return BracketFrac.from_poly(self.theta.zero())

    def beta(self, m):
        if m < 0:
            return self._zero()
        return self._get(("b", m), lambda: BracketFrac(
            _tp_eval(self.numerator(m), self.theta).scale(self._sign(m)), self._den(m)))

    def beta_tilde(self, m):
        """B_m^(1)(theta)."""
        if m < 0:
            return self._zero()
        return self._get(("bt", m), lambda: BracketFrac(
            _tp_eval([c.twist(1) for c in self.numerator(m)], self.theta).scale(self._sign(m)),
            self._den(m, 1)))

    def beta_prime(self, m):
        """d/dt B_m at t = theta."""
        if m < 0:
            return self._zero()

        def fn():
            N = self.numerator(m)
            s = self._sign(m)
            out = BracketFrac(_tp_eval(_tp_dt(N, self.F), self.theta).scale(s), self._den(m)) if len(N) > 1 else self._zero()
            # -N D'/D^2 with D'/D = sum 1/(t - theta^(i)) = -sum 1/[i] at t = theta
            base = self.beta(m)
            for i in range(1, m + 1):
                out = out + base * BracketFrac.bracket_inverse(self.F, i)
            return out
        return self._get(("bp", m), fn)

    def beta_hat(self, m):
        """d/dtheta B_m at t = theta; the denominator has zero theta-derivative."""
        if m < 0:
            return self._zero()
        return self._get(("bh", m), lambda: BracketFrac(
            _tp_eval([c.derivative() for c in self.numerator(m)], self.theta).scale(self._sign(m)),
            self._den(m)))

    def chain_rule_holds(self, m):
        """beta'_m - d/dtheta(beta_m) = -beta_hat_m."""
        return self.beta_prime(m) - self.beta(m).derivative() == -self.beta_hat(m)


def _add_tp(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def _mul_tp(a, b):
    z = a[0].zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return tuple(out)


def beta_family(phi, m_max, seq=None):
    seq = seq or BmSequence(phi)
    for m in range(m_max + 1):
        seq.beta(m), seq.beta_tilde(m), seq.beta_prime(m), seq.beta_hat(m)
    return seq


# ---- R_{E,m} ----

def _phi_inv_twisted(seq):
    """(Phi_phi^{-1})^(1) = [[kappa_1/(t - theta^q), kappa_2/(t - theta^q)], [1, 0]]."""
    F = seq.F
    lin = BivarRat.t_minus(seq.theta.twist(1))
    return [[BivarRat.const(seq.k1) / lin, BivarRat.const(seq.k2) / lin],
            [BivarRat.const(seq.theta.one()), BivarRat(F, ())]]


def r_phi(seq, m):
    """The 2 x 2 closed form of (Phi^{-1})^(m) ... (Phi^{-1})^(1)."""
    lin = BivarRat.t_minus(seq.theta.twist(1))
    c = BivarRat.const(seq.k2) / lin
    return [[seq.bm(m), c * seq.bm(m - 1).twist(1)],
            [seq.bm(m - 1), c * seq.bm(m - 2).twist(1)]]


def r_em(seq, kind, m):
    if m < 1:
        raise ValueError("m >= 1")
    R = r_phi(seq, m)
    if kind == "tensor2":
        return matrix_T(R, "tensor2")
    if kind in ("sym2", "alt2"):
        return matrix_T(R, kind)
    raise ValueError(kind)


def _bivar_twist_matrix(M, n=1):
    return [[x.twist(n) for x in row] for row in M]


def r_em_recursion_holds(seq, kind, m):
    """R_m = R_{m-1}^(1) (Phi^{-1})^(1), with R_0 = I, in T-form."""
    P = _phi_inv_twisted(seq)
    if m == 1:
        lhs2 = P
    else:
        lhs2 = matmul(_bivar_twist_matrix(r_phi(seq, m - 1)), P)
    lhs = matrix_T(lhs2, kind)
    rhs = r_em(seq, kind, m)
    return all(a == b for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb))


# ---- L families and the L_m matrices ----

class LogFamily:
    """The coefficient families L_{i,m}, L'_{i,m}, L~_{i,m}, L^_{i,m} as BracketFrac."""

    def __init__(self, phi, seq=None):
        self.seq = seq or BmSequence(phi)
        s = self.seq
        self.F = s.F
        # kappa_2/(theta - theta^(1)) = -kappa_2/[1]
        self._c = BracketFrac(s.k2.scale(self.F.neg(1)), {1: 1})
        self._two = self.F.from_int(2)

    def L1(self, m):
        b = self.seq.beta(m)
        return b * b

    def L2(self, m):
        return self.seq.beta(m) * self.seq.beta(m - 1)

    def L1p(self, m):
        return (self.seq.beta(m) * self.seq.beta_prime(m)).scale(self._two)

    def L2p(self, m):
        s = self.seq
        return s.beta_prime(m) * s.beta(m - 1) + s.beta(m) * s.beta_prime(m - 1)

    def Lt0(self, m):
        s = self.seq
        return self._c * (s.beta(m) * s.beta_tilde(m - 2) - s.beta(m - 1) * s.beta_tilde(m - 1))

    def Lt1(self, m):
        return self._c * self.seq.beta(m) * self.seq.beta_tilde(m - 1)

    def Lt2(self, m):
        return self._c * self.seq.beta(m - 1) * self.seq.beta_tilde(m - 1)

    def Lh1(self, m):
        return (self.seq.beta(m) * self.seq.beta_hat(m)).scale(self._two)

    def Lh2(self, m):
        s = self.seq
        return s.beta_hat(m) * s.beta(m - 1) + s.beta(m) * s.beta_hat(m - 1)

    def dilog_coeff(self, m):
        """beta_m^2, the coefficient of z^(q^m) in Log_{phi,2}."""
        return self.L1(m) if m >= 1 else BracketFrac.from_poly(self.seq.theta.one())


def lm_matrix(phi, m, fam=None):
    """The 4 x 4 matrix L_m of the tensor-square logarithm."""
    fam = fam or LogFamily(phi)
    s = fam.seq
    F = s.F
    k2inv = F.inv(s.k2u)
    k2 = s.k2u
    dm = BracketFrac.from_poly(s.theta - s.theta.twist(m))
    k1m = BracketFrac.from_poly(s.k1.twist(m))
    L1, L2, L1p, L2p = fam.L1(m), fam.L2(m), fam.L1p(m), fam.L2p(m)
    T0, T1, T2 = fam.Lt0(m), fam.Lt1(m), fam.Lt2(m)
    return [
        [L1 + dm * L1p, L2p.scale(k2), k1m * L1p + L2p.scale(k2), L1p.scale(k2)],
        [(dm * T1).scale(k2inv), T0 + T2, (k1m * T1).scale(k2inv) + T2, T1],
        [(dm * T1).scale(k2inv), T2, T0 + (k1m * T1).scale(k2inv) + T2, T1],
        [(dm * L1).scale(k2inv), L2, (k1m * L1).scale(k2inv) + L2, L1],
    ]


def _prefactor(kind, s):
    """Constant matrices in front of sum L_m z^(m) (sym2 also duplicates z_2)."""
    F = s.F
    z = BracketFrac.from_poly(s.theta.zero())
    o = BracketFrac.from_poly(s.theta.one())
    r = BracketFrac.from_poly(s.k1.scale(F.neg(F.inv(s.k2u))))
    if kind == "tensor2":
        P = [[o, z, z, z], [z, o, z, z], [z, z, o, z], [z, z, r, o]]
        S = None
    else:
        h = F.inv(F.from_int(2))
        P = [[o, z, z, z], [z, o.scale(h), o.scale(h), z], [z, r.scale(h), r.scale(h), o]]
        S = [[o, z, z], [z, o, z], [z, o, z], [z, z, o]]
    return P, S


def assembled_log_coeff(kind, phi, m, fam=None):
    """Coefficient matrix of z^(q^m) in Log_E from the closed-form assembly."""
    fam = fam or LogFamily(phi)
    if kind == "alt2":
        return [[fam.Lt0(m)]]
    P, S = _prefactor(kind, fam.seq)
    C = matmul(P, lm_matrix(phi, m, fam))
    return matmul(C, S) if S is not None else C


def _build(kind, phi):
    if kind == "tensor2":
        return build_tensor(phi, phi)
    if kind == "sym2":
        return build_sym2(phi)
    if kind == "alt2":
        return build_alt2(phi)
    raise ValueError(kind)


def log_coeff_crosscheck(kind, phi, m_max, fam=None, generic=None):
    """Assembled coefficients against the generic log recursion, exactly, for m = 1..m_max."""
    if m_max > 8:
        raise ValueError("m_max must be <= 8")
    fam = fam or LogFamily(phi)
    generic = generic or exp_log_coeffs(_build(kind, phi), m_max)
    rows = []
    for m in range(1, m_max + 1):
        A = assembled_log_coeff(kind, phi, m, fam)
        C = generic.log[m]
        ok = all(a == c for ra, rc in zip(A, C) for a, c in zip(ra, rc))
        rows.append((m, ok))
    return {"kind": kind, "m_max": m_max, "rows": rows, "pass": all(ok for _, ok in rows)}


# ---- evaluation in K_inf ----

def _term_laurent(coeff, x, m, prec):
    """coeff * x^(q^m) at absolute precision prec, for coeff a BracketFrac and x in A."""
    F = coeff.F
    if coeff.is_zero() or x.is_zero():
        return Laurent.zero(F, prec)
    xm = x.twist(m)
    return (Laurent.from_poly(xm) * coeff.to_laurent(prec + xm.degree())).with_prec(prec)


def _term_degree(coeff, x, m, q):
    if coeff.is_zero() or x.is_zero():
        return float("-inf")
    return coeff.degree() + q ** m * x.degree()


def series_eval(coeff_fn, x, M, m_start=1, m_limit=14, window=2):
    """sum_{m >= m_start} coeff_fn(m) x^(q^m) to precision M.

    Stops once `window` consecutive terms have degree < -M and the term degrees
    have been strictly decreasing (with non-shrinking gaps) since the first of
    them.  Refuses when no such index is found by m_limit.
    """
    F = x.F
    q = F.q
    acc = Laurent.zero(F, M)
    degs = []
    below = 0
    for m in range(m_start, m_limit + 1):
        c = coeff_fn(m)
        d = _term_degree(c, x, m, q)
        degs.append(d)
        if d >= -M:
            acc = acc + _term_laurent(c, x, m, M)
            below = 0
        else:
            below += 1
        if below >= window and _tail_ok(degs, window):
            return acc
    raise DivergenceError(f"no certified stopping index up to m = {m_limit}; degrees {degs}")


def _tail_ok(degs, window):
    tail = [d for d in degs[-(window + 1):] if d != float("-inf")]
    if len(tail) < 2:
        return True
    gaps = [a - b for a, b in zip(tail, tail[1:])]
    return all(g > 0 for g in gaps) and all(g2 >= g1 for g1, g2 in zip(gaps, gaps[1:]))


def dilog(phi, z, M, fam=None):
    """Log_{phi,2}(z) = sum_{m >= 0} beta_m^2 z^(q^m)."""
    fam = fam or LogFamily(phi)
    if z.is_zero():
        return Laurent.zero(phi.F, M)
    return Laurent.from_poly(z).with_prec(M) + series_eval(fam.L1, z, M)


def _L(fam, name, x, M):
    return series_eval(getattr(fam, name), x, M)


def log_tensor_eval(kind, phi, z, M, fam=None):
    """Log_E(z) for z a vector over A, from the closed-form assembly."""
    fam = fam or LogFamily(phi)
    F = phi.F
    z = list(z)
    out = [Laurent.from_poly(x).with_prec(M) for x in z]
    if kind == "alt2":
        return [out[0] + series_eval(fam.Lt0, z[0], M)]
    dim = 4 if kind == "tensor2" else 3
    if len(z) != dim:
        raise ValueError(f"{kind} needs a vector of length {dim}")
    zz = z if kind == "tensor2" else [z[0], z[1], z[1], z[2]]

    def coeff(i, j):
        return lambda m: lm_matrix(phi, m, fam)[i][j]

    Lz = []
    for i in range(4):
        acc = Laurent.zero(F, M)
        for j in range(4):
            if not zz[j].is_zero():
                acc = acc + series_eval(coeff(i, j), zz[j], M)
        Lz.append(acc)
    P, _ = _prefactor(kind, fam.seq)
    for i in range(dim):
        for j in range(4):
            if not P[i][j].is_zero():
                out[i] = out[i] + Lz[j] * P[i][j].to_laurent(M)
    return out


def _normalize(x):
    """Scale by gamma in F_q^x so the leading coefficient is 1; returns (value, gamma)."""
    if x.is_zero():
        raise RegulatorError("regulator vanishes to working precision")
    g = x.F.inv(x.sign())
    return x.scale(g), g


def _check_pre(kind, phi):
    q = phi.F.q
    d = phi.kappa(1).degree() if not phi.kappa(1).is_zero() else 0
    if kind == "alt2" and 2 * d > q + 1:
        raise RegulatorError("alt2 regulator formula needs deg kappa_1 <= (q+1)/2")
    if kind in ("sym2", "tensor2") and d > 1:
        raise RegulatorError(f"{kind} regulator formula needs deg kappa_1 <= 1")


def sym2_matrix(phi, M, fam=None):
    """The 3 x 3 matrix whose determinant gives Reg_{Sym^2 phi} up to gamma."""
    fam = fam or LogFamily(phi)
    s = fam.seq
    F = phi.F
    th, k1, one = s.theta, s.k1, s.theta.one()
    k2, k2inv = s.k2u, F.inv(s.k2u)
    two = F.from_int(2)
    W = M + 4

    def L(name, x):
        return series_eval(getattr(fam, name), x, W)

    alt1 = Laurent.one(F).with_prec(W) + L("Lt0", one)
    dk1 = Laurent.from_poly(k1.derivative()).with_prec(W)
    return [
        [Laurent.one(F).with_prec(W) + L("Lh1", th),
         -L("Lh1", k1) - L("Lh2", one).scale(F.mul(two, k2)) - dk1,
         -L("Lh1", one).scale(k2)],
        [-L("Lt1", th).scale(k2inv),
         alt1 + L("Lt1", k1).scale(k2inv) + L("Lt2", one).scale(two),
         L("Lt1", one)],
        [-dilog(phi, th, W, fam).scale(k2inv),
         dilog(phi, k1, W, fam).scale(k2inv) + L("L2", one).scale(two),
         dilog(phi, one, W, fam)],
    ]


def reg_closed_form(kind, phi, M, fam=None):
    """Closed-form regulator, sign-normalized; returns (value, gamma)."""
    _check_pre(kind, phi)
    fam = fam or LogFamily(phi)
    F = phi.F
    if kind == "alt2":
        v = Laurent.one(F).with_prec(M) + series_eval(fam.Lt0, fam.seq.theta.one(), M)
        return _normalize(v)
    Mx = sym2_matrix(phi, M, fam)
    z = Laurent.zero(F, M + 4)
    d = det(Mx, z, Laurent.one(F)).with_prec(M)
    sym, g = _normalize(d)
    if kind == "sym2":
        return sym, g
    alt, g2 = reg_closed_form("alt2", phi, M, fam)
    return _normalize((sym * alt).with_prec(M))


def log_generic_columns(kind, phi, M, m_limit=8):
    """Log_E(e_i) for each standard basis vector, from the generic log coefficients."""
    E = _build(kind, phi)
    F = phi.F
    n = E.dim
    one = PolyA(F, (1,), True)
    gen = None
    for n_max in (4, 6, m_limit):
        gen = exp_log_coeffs(E, n_max)
        cols = []
        ok = True
        for i in range(n):
            col = []
            for r in range(n):
                def c(m, r=r, i=i):
                    return gen.log[m][r][i] if m <= n_max else None
                try:
                    v = Laurent.from_poly(one).with_prec(M) if r == i else Laurent.zero(F, M)
                    v = v + series_eval(c, one, M, m_limit=n_max)
                except (DivergenceError, TypeError, AttributeError):
                    ok = False
                    break
                col.append(v)
            if not ok:
                break
            cols.append(col)
        if ok:
            return cols
    raise DivergenceError(f"generic log of {kind} did not settle by m = {m_limit}")


def reg_via_basis(kind, phi, M):
    """det of the Log_E(e_i) rows with the d/dtheta corrections, sign-normalized; (value, gamma)."""
    _check_pre(kind, phi)
    F = phi.F
    W = M + 4
    cols = log_generic_columns(kind, phi, W)
    n = len(cols)
    # row i collects the i-th coordinates of Log_E(e_1), ..., Log_E(e_n)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    k1 = Laurent.from_poly(phi.kappa(1))
    k2 = phi.kappa(2).c[0]
    if kind == "tensor2":
        a, b = 2, 3
    elif kind == "sym2":
        a, b = 1, 2
    else:
        a = b = None
    if a is not None:
        rows[0] = [rows[0][j] - k1 * rows[a][j].derivative() - rows[b][j].derivative().scale(k2)
                   for j in range(n)]
    d = det(rows, Laurent.zero(F, W), Laurent.one(F)).with_prec(M)
    return _normalize(d)
