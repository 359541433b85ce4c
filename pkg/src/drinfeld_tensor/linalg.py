"""Small dense linear algebra over the scalar tower.

Matrices are lists of rows.  Generic routines only use +, -, * of the
entries, so they work over F_q (FqElem), A, K, BracketFrac and K(t).
The F_q routines work on integer codes for speed.
"""

from .fields import FqElem


def identity(n, zero, one):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n, m, zero):
    return [[zero] * m for _ in range(n)]


def matmul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = None
            for l in range(k):
                a = A[i][l]
                b = B[l][j]
                if _iszero(a) or _iszero(b):
                    continue
                s = a * b if s is None else s + a * b
            row.append(s if s is not None else _zero_like(A[i][0]))
        out.append(row)
    return out


def matadd(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matscale(c, A):
    return [[c * a for a in r] for r in A]


def matvec(A, v):
    return [sum((a * x for a, x in zip(row, v) if not _iszero(a)), _zero_like(row[0])) for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


def kron(A, B):
    """Kronecker product; index (i,j) -> i*len(B)+j, matching the lexicographic basis order."""
    n, m = len(A), len(B)
    na, mb = len(A[0]), len(B[0])
    return [[A[i // m][j // mb] * B[i % m][j % mb] for j in range(na * mb)] for i in range(n * m)]


def mat_map(f, A):
    return [[f(a) for a in r] for r in A]


def mat_twist(A, n=1):
    return [[a.twist(n) for a in r] for r in A]


def mat_eq(A, B):
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_zero_matrix(A):
    return all(_iszero(a) for r in A for a in r)


def _iszero(a):
    if isinstance(a, int):
        return a == 0
    return a.is_zero()


def _zero_like(a):
    if isinstance(a, int):
        return 0
    return a.zero()


def berkowitz(M, zero, one):
    """Coefficients of det(X*I - M), highest degree first, without division."""
    n = len(M)
    vect = [one]
    for r in range(n):
        a = M[r][r]
        R = M[r][:r]
        Csub = [M[i][r] for i in range(r)]
        col = [one, -a]
        X = Csub
        for _ in range(r):
            s = zero
            for x, y in zip(R, X):
                s = s + x * y
            col.append(-s)
            X = [sum((M[i][j] * X[j] for j in range(r)), zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(r + 1):
                if 0 <= i - j < len(col):
                    s = s + col[i - j] * vect[j]
            new.append(s)
        vect = new
    return vect


def charpoly_division_free(M, zero, one):
    """det(X*I - M) as coefficients constant-term first (monic, degree n)."""
    return list(reversed(berkowitz(M, zero, one)))


def det(M, zero, one):
    n = len(M)
    if n == 0:
        return one
    c0 = berkowitz(M, zero, one)[-1]
    return c0 if n % 2 == 0 else -c0


def det_gauss(M):
    """Determinant by Gaussian elimination over a field (entries must support /)."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        raise ValueError("empty matrix")
    d = None
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if not _iszero(A[i][k])), None)
        if piv is None:
            return _zero_like(A[0][0])
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        p = A[k][k]
        d = p if d is None else d * p
        for i in range(k + 1, n):
            if not _iszero(A[i][k]):
                f = A[i][k] / p
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return d if sign == 1 else -d


def poly_eval_matrix(coeffs, M, zero, one):
    """Evaluate the polynomial (constant first) at the square matrix M (Horner)."""
    n = len(M)
    R = zeros(n, n, zero)
    I = identity(n, zero, one)
    for c in reversed(coeffs):
        R = matadd(matmul(R, M), matscale(c, I))
    return R


# ---- F_q routines on integer codes ----

def fq_rref(F, rows, ncols):
    """Row-reduce in place; returns (rows, pivot columns)."""
    A = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(A)) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
        if r == len(A):
            break
    return A, piv


def fq_rank(F, rows, ncols):
    return len(fq_rref(F, rows, ncols)[1])


def fq_solve(F, A, b):
    """Solve A x = b over F_q.  Returns (x, nullity) or (None, nullity) if inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(r) + [v] for r, v in zip(A, b)]
    R, piv = fq_rref(F, aug, n + 1)
    if n in piv:
        return None, n - len(piv) + 1
    x = [0] * n
    for i, c in enumerate(piv):
        x[c] = R[i][n]
    return x, n - len(piv)


def fq_nullspace(F, A, ncols):
    R, piv = fq_rref(F, A, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = F.neg(R[i][f])
        basis.append(v)
    return basis


def fq_charpoly(F, M):
    """det(X*I - M) over F_q via Hessenberg reduction; constant term first."""
    n = len(M)
    A = [list(r) for r in M]
    add, sub, mul = F.add, F.sub, F.mul
    for m in range(1, n - 1):
        i = next((k for k in range(m, n) if A[k][m - 1]), None)
        if i is None:
            continue
        if i != m:
            A[i], A[m] = A[m], A[i]
            for row in A:
                row[i], row[m] = row[m], row[i]
        inv = F.inv(A[m][m - 1])
        for k in range(m + 1, n):
            u = mul(A[k][m - 1], inv)
            if u:
                A[k] = [sub(x, mul(u, y)) for x, y in zip(A[k], A[m])]
                for row in A:
                    row[m] = add(row[m], mul(u, row[k]))
    # charpoly recurrence for upper Hessenberg matrices
    polys = [[1]]
    for m in range(1, n + 1):
        # p_m = (X - a_mm) p_{m-1} - sum_{i<m} a_im * prod_{j=i+1}^{m} h_j * p_{i-1}
        prev = polys[m - 1]
        cur = [0] + prev
        a = A[m - 1][m - 1]
        for k in range(len(prev)):
            cur[k] = sub(cur[k], mul(a, prev[k]))
        t = 1
        for i in range(m - 1, 0, -1):
            t = mul(t, A[i][i - 1])
            if not t:
                break
            c = mul(t, A[i - 1][m - 1])
            if c:
                pp = polys[i - 1]
                for k in range(len(pp)):
                    cur[k] = sub(cur[k], mul(c, pp[k]))
        polys.append(cur)
    return polys[n]


def to_fq_elems(F, M):
    return [[FqElem(F, x) for x in r] for r in M]
