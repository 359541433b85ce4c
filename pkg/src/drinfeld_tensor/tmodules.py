"""Drinfeld modules, Anderson t-modules and the tensor constructions.

Matrices follow the row convention: a matrix M represents f when
f(v_i) = sum_j M_ij v_j, so the model of a t-module is read off from
t * s_i = sum_j (E_t)_ij s_j with tau acting on the left of s_j.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, combinations

from .fields import FqElem
from .poly import PolyA, is_irreducible
from .bracket import BracketFrac
from .residue import ResidueField
from .twisted import TwistedPoly
from .linalg import (identity, matmul, matadd, matsub, mat_twist, kron, is_zero_matrix,
                     fq_charpoly, det)


class CharacteristicError(ValueError):
    pass


def _poly(F, x):
    if isinstance(x, PolyA):
        return x
    if isinstance(x, int):
        return PolyA(F, (F.coerce(x),))
    return PolyA(F, list(x))


class DrinfeldModule:
    """phi_t = theta + kappa_1 tau + ... + kappa_r tau^r over A."""

    def __init__(self, F, kappas):
        self.F = F
        self.kappas = tuple(_poly(F, k) for k in kappas)
        if not self.kappas or self.kappas[-1].is_zero():
            raise ValueError("kappa_r must be nonzero")
        self.r = len(self.kappas)
        self.everywhere_good = self.kappas[-1].degree() == 0

    @staticmethod
    def carlitz(F):
        return DrinfeldModule(F, [1])

    @property
    def theta(self):
        return PolyA(self.F, (0, 1), True)

    def kappa(self, i):
        """kappa_0 = theta, kappa_i for 1 <= i <= r, zero otherwise."""
        if i == 0:
            return self.theta
        if 1 <= i <= self.r:
            return self.kappas[i - 1]
        return PolyA(self.F, (), True)

    def phi_t(self):
        return TwistedPoly.scalar([self.kappa(i) for i in range(self.r + 1)])

    def kappa_r_unit(self):
        return self.kappas[-1].c[0]

    def __eq__(self, o):
        return isinstance(o, DrinfeldModule) and self.kappas == o.kappas

    def __hash__(self):
        return hash(self.kappas)

    def __repr__(self):
        terms = ["theta"] + [f"({k})*tau^{i + 1}" for i, k in enumerate(self.kappas) if not k.is_zero()]
        return "phi_t = " + " + ".join(terms)


def phi_action(phi, a):
    """phi_a for a in F_q[t], given as a PolyA whose variable is read as t."""
    pt = phi.phi_t()
    z = PolyA(phi.F, (), True)
    res = TwistedPoly([], "tau", z, z.one())
    for c in reversed(a.c):
        res = res * pt if not res.is_zero() else res
        if c:
            res = res + TwistedPoly.scalar([PolyA(phi.F, (c,), True)])
    return res


class TModule:
    """E_t = sum_k A_k tau^k with A_k in Mat_l(A)."""

    def __init__(self, Et, provenance="plain", note=None):
        self.Et = Et
        self.ell = Et.ell
        self.F = Et._zero.F
        self.provenance = provenance
        self.note = note

    @property
    def dim(self):
        return self.ell

    def coefficient(self, k):
        return self.Et.coefficient(k)

    def nilpotent_part(self):
        th = PolyA(self.F, (0, 1), True)
        D = self.Et.coefficient(0)
        return [[D[i][j] - th if i == j else D[i][j] for j in range(self.ell)] for i in range(self.ell)]

    def nilpotency_index(self):
        """Smallest k with (dE_t - theta I)^k = 0, or None if not nilpotent within l steps."""
        N = self.nilpotent_part()
        P = N
        for k in range(1, self.ell + 1):
            if is_zero_matrix(P):
                return k
            P = matmul(P, N)
        return None

    def __repr__(self):
        return f"TModule(dim={self.ell}, provenance={self.provenance})"


def _zero_mat(F, n):
    z = PolyA(F, (), True)
    return [[z] * n for _ in range(n)]


def _from_entries(F, n, entries):
    """entries: dict (row, col, tau power) -> PolyA coefficient (accumulated)."""
    deg = max((k for (_, _, k) in entries), default=0)
    coeffs = [_zero_mat(F, n) for _ in range(deg + 1)]
    for (i, j, k), v in entries.items():
        coeffs[k][i][j] = coeffs[k][i][j] + v
    z = PolyA(F, (), True)
    return TwistedPoly(coeffs, "tau", z, z.one())


def _add(entries, key, v):
    if not v.is_zero():
        entries[key] = entries[key] + v if key in entries else v


def drinfeld_as_tmodule(phi):
    return TModule(phi.phi_t(), "plain")


def build_tensor(phi, psi):
    """The (r + l)-dimensional model of phi (x) psi (r <= l; swapped otherwise)."""
    note = None
    if phi.r > psi.r:
        phi, psi = psi, phi
        note = "operands swapped so that r <= l"
    F = phi.F
    r, l = phi.r, psi.r
    n = r + l
    e = {}
    # X_1: l x l lower Toeplitz in kappa_i tau^i
    for i in range(l):
        for k in range(0, min(i, r) + 1):
            _add(e, (i, i - k, k), phi.kappa(k))
    # X_2: l x r, row i: kappa_{i+1+c} tau^i
    for i in range(r):
        for c in range(r - i):
            _add(e, (i, l + c, i), phi.kappa(i + 1 + c))
    # X_3: r x l, row i: eta_{i+1+c} tau^(i+1)
    for i in range(r):
        for c in range(l - i):
            _add(e, (l + i, c, i + 1), psi.kappa(i + 1 + c))
    # X_4: r x r lower Toeplitz in eta_j tau^j, j <= r - 1
    for i in range(r):
        for k in range(0, i + 1):
            _add(e, (l + i, l + i - k, k), psi.kappa(k))
    return TModule(_from_entries(F, n, e), ("tensor", phi, psi), note)


def _need_odd(phi):
    if phi.F.p == 2:
        raise CharacteristicError("symmetric and alternating squares need p != 2")


def build_sym2(phi):
    """Basis 1(x)1, (1(x)tau^j + tau^j(x)1)/2; t xi_m = sum_i kappa_i tau^min(i,m) xi_|m-i|."""
    _need_odd(phi)
    r = phi.r
    e = {}
    for m in range(r + 1):
        for i in range(r + 1):
            _add(e, (m, abs(m - i), min(i, m)), phi.kappa(i))
    return TModule(_from_entries(phi.F, r + 1, e), ("sym2", phi))


def build_alt2(phi):
    """Basis (1(x)tau^j - tau^j(x)1)/2, j = 1..r-1."""
    _need_odd(phi)
    r = phi.r
    if r < 2:
        raise ValueError("alternating square needs rank >= 2")
    e = {}
    for m in range(1, r):
        for i in range(r + 1):
            if i < m:
                _add(e, (m - 1, m - i - 1, i), phi.kappa(i))
            elif i > m:
                _add(e, (m - 1, i - m - 1, m), -phi.kappa(i))
    return TModule(_from_entries(phi.F, r - 1, e), ("alt2", phi))


# ---- matrix operations ----

def sym_pairs(r):
    return list(combinations_with_replacement(range(r), 2))


def alt_pairs(r):
    return list(combinations(range(r), 2))


def matrix_T(M, kind):
    """M^(x)2, Sym^2(M) or Alt^2(M) with respect to the lexicographic bases."""
    if kind == "tensor2":
        return kron(M, M)
    sample = M[0][0]
    F = getattr(sample, "F", None) or getattr(getattr(sample, "K", None), "F", None)
    if F is not None and F.p == 2:
        raise CharacteristicError("Sym^2/Alt^2 need characteristic != 2")
    r = len(M)
    if kind == "sym2":
        idx = sym_pairs(r)
        out = []
        for (i, j) in idx:
            row = []
            for (k, l) in idx:
                if k == l:
                    row.append(M[i][k] * M[j][k])
                else:
                    row.append(M[i][k] * M[j][l] + M[j][k] * M[i][l])
            out.append(row)
        return out
    if kind == "alt2":
        idx = alt_pairs(r)
        return [[M[i][k] * M[j][l] - M[j][k] * M[i][l] for (k, l) in idx] for (i, j) in idx]
    raise ValueError(f"unknown kind {kind}")


# ---- exponential and logarithm ----

class ExpLogCoeffs:
    def __init__(self, E, exp, log):
        self.E = E
        self.exp = exp
        self.log = log

    def composition_defect(self, n):
        """sum_{i+j=n} C_i B_j^(i); zero for n >= 1."""
        out = None
        for i in range(n + 1):
            P = matmul(self.log[i], mat_twist(self.exp[n - i], i))
            out = P if out is None else matadd(out, P)
        return out


def _bf_matrix(M):
    return [[BracketFrac.from_poly(x) if isinstance(x, PolyA) else x for x in r] for r in M]


def _neumann_solve(N, Nn, R, n, sign):
    """Solve [n] X = sign*R + (N X - X N^(n)) by the finite Neumann series."""
    X = None
    term = [[x * sign for x in row] for row in R]
    k = 0
    while not is_zero_matrix(term):
        k += 1
        scaled = [[x.div_bracket(n, k) for x in row] for row in term]
        X = scaled if X is None else matadd(X, scaled)
        term = matsub(matmul(N, term), matmul(term, Nn))
        if k > 4 * len(N) + 2:
            raise ArithmeticError("Sylvester step did not terminate (dE_t - theta I not nilpotent?)")
    if X is None:
        z = BracketFrac.from_poly(PolyA(N[0][0].F, (), True))
        X = [[z] * len(N) for _ in range(len(N))]
    return X


def exp_log_coeffs(E, n_max):
    """B_n, C_n for n <= n_max from Exp dE_t = E_t Exp and dE_t Log = Log E_t."""
    F = E.F
    l = E.ell
    zero = BracketFrac.from_poly(PolyA(F, (), True))
    one = zero.one()
    I = identity(l, zero, one)
    N = _bf_matrix(E.nilpotent_part())
    A = [_bf_matrix(E.coefficient(k)) for k in range(E.Et.degree() + 1)]
    deg = len(A) - 1
    exp = [I]
    log = [I]
    for n in range(1, n_max + 1):
        Nn = mat_twist(N, n)
        # exp: [n] B_n = sum_{k>=1} A_k B_{n-k}^(k) + (N B_n - B_n N^(n))
        R = None
        for k in range(1, min(deg, n) + 1):
            P = matmul(A[k], mat_twist(exp[n - k], k))
            R = P if R is None else matadd(R, P)
        exp.append(_neumann_solve(N, Nn, R, n, 1))
        # log: [n] C_n = -sum_{i<n} C_i A_{n-i}^(i) + (N C_n - C_n N^(n))
        R = None
        for i in range(max(0, n - deg), n):
            P = matmul(log[i], mat_twist(A[n - i], i))
            R = P if R is None else matadd(R, P)
        log.append(_neumann_solve(N, Nn, R, n, -1))
    return ExpLogCoeffs(E, exp, log)


def exp_coeffs(E, n_max):
    return exp_log_coeffs(E, n_max).exp


def log_coeffs(E, n_max):
    return exp_log_coeffs(E, n_max).log


# ---- reductions and orders ----

def module_order_oracle(E, f, check=True):
    """[E(F_f)]_A: characteristic polynomial of t acting on F_f^l, evaluated at X = theta."""
    if check and not is_irreducible(f):
        raise ValueError(f"{f} is not irreducible")
    Ff = ResidueField(f, check=False)
    F = E.F
    d = Ff.d
    l = E.ell
    coeffs = [[[Ff(x) for x in row] for row in E.coefficient(k)] for k in range(E.Et.degree() + 1)]
    cols = []
    for c in range(l):
        for j in range(d):
            vec = [Ff.zero() for _ in range(l)]
            vec[c] = Ff.from_vector([0] * j + [1])
            img = [Ff.zero() for _ in range(l)]
            for k, Ak in enumerate(coeffs):
                tw = [v.twist(k) for v in vec]
                for r_ in range(l):
                    for s in range(l):
                        if not Ak[r_][s].is_zero():
                            img[r_] = img[r_] + Ak[r_][s] * tw[s]
            flat = []
            for v in img:
                flat.extend(v.vector())
            cols.append(flat)
    M = [[cols[j][i] for j in range(d * l)] for i in range(d * l)]
    return PolyA(F, fq_charpoly(F, M))


def check_almost_strictly_pure(E, k_max=None):
    """Search k = 2, 3, ... for E_{t^k} with a top tau-coefficient invertible over A.

    Returns a dict with the first such k (or None), that k's tau-degree, top
    coefficient and determinant, and the tau-expansion of E_{t^2}.
    """
    z = PolyA(E.F, (), True)
    k_max = k_max or E.ell + 2
    P = E.Et * E.Et
    t2 = P
    for k in range(2, k_max + 1):
        top = P.coefficient(P.degree())
        dt = det(top, z, z.one())
        if not dt.is_zero() and dt.degree() == 0:
            return {"ok": True, "k": k, "degree": P.degree(), "top": top, "det": dt, "e_t2": t2}
        P = P * E.Et
    return {"ok": False, "k": None, "degree": None, "top": None, "det": None, "e_t2": t2}


def log_radius(phi):
    """min_i (q^i - deg kappa_i)/(q^i - 1): log_q of the convergence radius of Log_phi."""
    q = phi.F.q
    vals = []
    for i in range(1, phi.r + 1):
        k = phi.kappa(i)
        if k.is_zero():
            continue
        vals.append(Fraction(q ** i - k.degree(), q ** i - 1))
    return min(vals)
