"""The twelve acceptance suites, each returning one check record.

Parameters are fixed (q = 3 unless a suite says otherwise) so that the
records are reproducible; `run_suite` adds the wall time outside the record.
"""

import time

from .fields import GF
from .poly import PolyA, enumerate_monic_irreducibles
from .tmodules import DrinfeldModule
from .frobenius import frob_charpoly, verify_charpoly, tensor_structure_charpoly, verify_order_identity
from .lseries import (MuTable, mu_prime_powers, nu_prime_powers, boldmu_relation_checks,
                      euler_factor_identity_check, special_value_report, cutoff_stability,
                      SeriesSpec, zeta_spec)
from .regulators import KINDS as REG_KINDS, log_coeff_crosscheck, reg_closed_form, reg_via_basis
from .symmetric import identity_suite, SUITES
from .serialize import check


def _field3():
    return GF(3)


def _rank2(F, k1=1, k2=1):
    return DrinfeldModule(F, [k1, k2])


def carlitz_special_value(M=20, D=20):
    F = _field3()
    rep = special_value_report("carlitz", F=F, M=M, D=D)
    ok = rep["residual_degree"] is not None and rep["residual_degree"] <= -18
    return check("carlitz_special_value", ok, rep["lhs"], rep["rhs"], rep["residual_degree"],
                 precision=M, cutoff=rep["D"], bound=-18)


def alt2_special_value(M=12, D=12):
    F = _field3()
    rep = special_value_report("alt2", _rank2(F), M=M, D=D)
    ok = rep["residual_degree"] is not None and rep["residual_degree"] <= -10
    return check("alt2_special_value", ok, rep["lhs"], rep["rhs"], rep["residual_degree"],
                 precision=M, cutoff=rep["D"], bound=-10)


def euler_factorization(W=8, dmax=3):
    F = _field3()
    th = PolyA(F, (0, 1))
    phi = _rank2(F)
    psi = DrinfeldModule(F, [th, 2])
    rho = DrinfeldModule(F, [1, 0, 1])
    rho3 = DrinfeldModule(F, [th, 1, 2])
    cases = [("tensor", phi, psi), ("tensor", phi, rho), ("sym2", phi, None), ("sym2", rho3, None),
             ("alt2", phi, None), ("alt2", rho3, None)]
    primes = enumerate_monic_irreducibles(F, dmax)
    bad = []
    total = 0
    for kind, a, b in cases:
        ta, tb = MuTable(a), MuTable(b) if b is not None else None
        for f in primes:
            res = euler_factor_identity_check(kind, a, b, f, W, ta, tb)
            total += 1
            if not res["pass"]:
                bad.append({"kind": kind, "case": res["case"], "f": f, "mismatch": res["mismatch"]})
    return check("euler_factorization", not bad, total, total - len(bad), None, W=W, dmax=dmax,
                 failures=bad)


def order_identities(dmax=2):
    F = _field3()
    th = PolyA(F, (0, 1))
    phi = _rank2(F)
    psi = DrinfeldModule(F, [th, 2])
    bad = []
    total = 0
    for f in enumerate_monic_irreducibles(F, dmax):
        P1, P2 = frob_charpoly(phi, f), frob_charpoly(psi, f)
        for kind in ("tensor", "sym2", "alt2"):
            res = verify_order_identity(kind, phi, psi if kind == "tensor" else None, f, P1=P1,
                                        P2=P2 if kind == "tensor" else None)
            total += 1
            if not res["pass"]:
                bad.append({"kind": kind, "f": f, "oracle": res["oracle"], "chi_scaled": res["chi_scaled"]})
    return check("order_identities", not bad, total, total - len(bad), None, dmax=dmax, failures=bad)


def charpoly_self_verification(dmax=4):
    bad = []
    total = 0
    for q in (3, 5):
        F = GF(q)
        th = PolyA(F, (0, 1))
        for phi in (_rank2(F), DrinfeldModule(F, [th, 2])):
            for f in enumerate_monic_irreducibles(F, dmax):
                P = frob_charpoly(phi, f, check=False, verify=False)
                rep = verify_charpoly(P)
                total += 1
                if not all(rep.values()):
                    bad.append({"q": q, "phi": repr(phi), "f": f, "report": rep})
    return check("charpoly_self_verification", not bad, total, total - len(bad), None, dmax=dmax,
                 failures=bad)


def _xmul(a, b):
    out = [a[0].zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def tensor_charpoly_factorization(dmax=3):
    F = _field3()
    th = PolyA(F, (0, 1))
    bad = []
    total = 0
    for phi in (_rank2(F), DrinfeldModule(F, [th, 2]), DrinfeldModule(F, [th, 0, 1])):
        table = MuTable(phi)
        for f in enumerate_monic_irreducibles(F, dmax):
            P = table.charpoly(f)
            lhs = tensor_structure_charpoly(P, P, "tensor")
            rhs = _xmul(tensor_structure_charpoly(P, None, "sym2"), tensor_structure_charpoly(P, None, "alt2"))
            total += 1
            if lhs != rhs:
                bad.append({"phi": repr(phi), "f": f})
    return check("tensor_charpoly_factorization", not bad, total, total - len(bad), None, dmax=dmax,
                 failures=bad)


def log_coefficients(m_max=6):
    F = _field3()
    th = PolyA(F, (0, 1))
    bad = []
    total = 0
    for k1 in (0, 1, th):
        phi = _rank2(F, k1, 1)
        for kind in REG_KINDS:
            total += 1
            if not log_coeff_crosscheck(kind, phi, m_max)["pass"]:
                bad.append({"kappa1": k1, "kind": kind})
    return check("log_coefficients", not bad, total, total - len(bad), None, m_max=m_max, failures=bad)


def regulator_pipelines(M=18):
    F = _field3()
    worst = None
    bad = []
    for k1 in (0, 1):
        phi = _rank2(F, k1, 1)
        vals = {}
        for kind in REG_KINDS:
            a, _ = reg_closed_form(kind, phi, M)
            b, _ = reg_via_basis(kind, phi, M)
            vals[kind] = b
            rd = a.residual_degree(b)
            worst = rd if worst is None else max(worst, rd)
            if rd > -M:
                bad.append({"kappa1": k1, "kind": kind, "residual_degree": rd})
        prod = (vals["sym2"] * vals["alt2"]).with_prec(M)
        rd = prod.residual_degree(vals["tensor2"])
        worst = max(worst, rd)
        if rd > -M:
            bad.append({"kappa1": k1, "kind": "product", "residual_degree": rd})
    return check("regulator_pipelines", not bad, None, None, worst, precision=M, failures=bad)


def sym2_class_order(M=10):
    F = _field3()
    rep = special_value_report("sym2", _rank2(F), M=M)
    rd = rep["residual_degree"]
    ok = rd is not None and rd <= -6 and rep["monic"]
    return check("sym2_class_order", ok, rep["V"], rep["candidate"], rd, precision=M, cutoff=rep["D"],
                 candidate=rep["candidate"], regulator=rep["regulator"], bound=-6)


def symmetric_identities(trials=50, seed=0):
    bad = []
    total = 0
    for n, W in ((2, 6), (3, 5), (4, 4)):
        for which in SUITES:
            res = identity_suite(which, n, W, trials=trials, seed=seed)
            total += 1
            if not res["pass"]:
                bad.append(res)
    return check("symmetric_identities", not bad, total, total - len(bad), None, trials=trials, seed=seed,
                 failures=bad)


def mu_nu_paths(m_max=10, dmax=3):
    F = _field3()
    th = PolyA(F, (0, 1))
    bad = []
    total = 0
    for phi in (_rank2(F), DrinfeldModule(F, [th, 0, 1])):
        table = MuTable(phi)
        for f in enumerate_monic_irreducibles(F, dmax):
            P = table.charpoly(f)
            total += 1
            try:
                mu_prime_powers(phi, f, m_max, P)
                nu_prime_powers(phi, f, m_max, P)
                rel = boldmu_relation_checks(phi, f, 3, table)["pass"]
            except ArithmeticError as e:
                bad.append({"phi": repr(phi), "f": f, "error": str(e)})
                continue
            if not rel:
                bad.append({"phi": repr(phi), "f": f, "error": "bold-mu relation"})
    return check("mu_nu_paths", not bad, total, total - len(bad), None, m_max=m_max, dmax=dmax, failures=bad)


def cutoff_stability_suite(extra=2):
    F = _field3()
    phi = _rank2(F)
    c = 2  # chi_phi(theta) for kappa_2 = 1
    specs = [("zeta_C(1)", zeta_spec(F, 1, 1, M=20, D=20)),
             ("L(A,chi,1)", zeta_spec(F, 1, c, M=12, D=12)),
             ("L(mu~,0)", SeriesSpec("sym_twiddle", 0, phi, M=10)),
             ("L(A,chi^2,2)", zeta_spec(F, 2, 1, M=10))]
    rows = []
    for name, spec in specs:
        res = cutoff_stability(spec, extra)
        rows.append({"series": name, "M": spec.M, "D": res["D"], "D2": res["D2"], "equal": res["equal"]})
    return check("cutoff_stability", all(r["equal"] for r in rows), None, None, None, extra=extra, series=rows)


SUITE_LIST = (
    (1, "Carlitz class formula: |zeta_C(1) - Log_C(1)| <= q^-18", carlitz_special_value),
    (2, "Alt^2 special value: L(A,chi,1) = Log_Alt2(1) to q^-10", alt2_special_value),
    (3, "Euler-factor factorization through u^8, deg f <= 3", euler_factorization),
    (4, "A-order identities, deg f <= 2", order_identities),
    (5, "Frobenius polynomial self-verification, q in {3,5}, deg f <= 4", charpoly_self_verification),
    (6, "P (x) P = Sym^2 P * Alt^2 P, deg f <= 3", tensor_charpoly_factorization),
    (7, "log-coefficient crosscheck, m <= 6", log_coefficients),
    (8, "regulator pipelines and product law to theta^-18", regulator_pipelines),
    (9, "Sym^2 class-order candidate within theta^-6", sym2_class_order),
    (10, "symmetric-function identity suites", symmetric_identities),
    (11, "mu/nu dual paths, m <= 10, deg f <= 3", mu_nu_paths),
    (12, "cutoff stability for the series of suites 1, 2, 9", cutoff_stability_suite),
)


def run_suite(number):
    for n, title, fn in SUITE_LIST:
        if n == number:
            t = time.perf_counter()
            rec = fn()
            rec["criterion"] = n
            rec["title"] = title
            return rec, time.perf_counter() - t
    raise KeyError(number)
