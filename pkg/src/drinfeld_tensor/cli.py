"""Batch driver: one command, one JSON report on standard output.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad configuration,
3 a guard refused the computation, 4 internal error.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from .fields import GF, FieldError
from .poly import PolyA, PolyRing, parse_poly, enumerate_monic_irreducibles, irreducible_count, is_irreducible
from .tmodules import (DrinfeldModule, drinfeld_as_tmodule, build_tensor, build_sym2, build_alt2,
                       check_almost_strictly_pure, exp_log_coeffs)
from .frobenius import (FrobeniusError, frob_charpoly, verify_charpoly, dualize_reciprocal, dual_display,
                        verify_order_identity)
from .laurent import Laurent, PrecisionError
from .lseries import (GuardError, LSeriesError, MuTable, mu_by_inversion, mu_by_recursion, nu_by_inversion,
                      nu_by_recursion, boldmu_relation_checks, boldmu_degree_bound_ok, SeriesSpec, zeta_spec,
                      dirichlet_sum, euler_product, euler_factor_identity_check, special_value_report,
                      KINDS as SERIES_KINDS, SPECIAL_KINDS)
from .regulators import (RegulatorError, DivergenceError, KINDS as REG_KINDS, reg_closed_form,
                         reg_via_basis)
from .serialize import check, encode, dumps, report_schema
from . import suites

COMMANDS = ("irreducibles", "charpoly", "mu", "boldmu", "tmodule", "explog", "lvalue", "euler-check",
            "order-check", "regulator", "special-value", "verify-all", "schema")

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3, 4

CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "m": {"type": "integer", "minimum": 1},
        "q": {"type": "integer", "minimum": 2},
        "modulus": {"type": "array", "items": {"type": "integer"}},
        "phi": {"type": "array"},
        "psi": {"type": "array"},
        "precision": {"type": "integer", "minimum": 0},
        "cutoff": {"type": ["integer", "null"], "minimum": 0},
        "dmax": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer"},
        "workers": {"type": "integer", "minimum": 1},
        "f": {"type": ["string", "array", "integer"]},
        "kind": {"type": "string"},
        "series": {"type": "string"},
        "s": {"type": "integer", "minimum": 0},
        "chi": {"type": "integer"},
        "method": {"type": "string"},
        "m_max": {"type": "integer", "minimum": 0},
        "bound": {"type": "integer", "minimum": 0},
        "W": {"type": "integer", "minimum": 0},
        "suites": {"type": "array", "items": {"type": "integer", "minimum": 1, "maximum": 12}},
    },
    "additionalProperties": False,
}


class ConfigError(ValueError):
    pass


class CheckFailed(Exception):
    pass


def sample_config():
    text = resources.files("drinfeld_tensor").joinpath("data/sample_q3.json").read_text()
    return json.loads(text)


def _split_q(q):
    for p in range(2, q + 1):
        if q % p == 0:
            m, x = 0, q
            while x % p == 0:
                x //= p
                m += 1
            if x != 1:
                raise ConfigError(f"q={q} is not a prime power")
            return p, m
    raise ConfigError(f"q={q} is not a prime power")


def _poly_from(F, x):
    if isinstance(x, str):
        return parse_poly(F, x)
    if isinstance(x, int):
        return PolyA(F, (F.coerce(x),))
    if isinstance(x, list):
        return PolyA(F, x)
    raise ConfigError(f"cannot read {x!r} as a polynomial")


class Context:
    """A validated configuration with the field and modules built."""

    def __init__(self, cfg):
        import jsonschema
        try:
            jsonschema.validate(cfg, CONFIG_SCHEMA)
        except jsonschema.ValidationError as e:
            raise ConfigError(f"config: {e.message}") from None
        cfg = dict(cfg)
        if "q" in cfg:
            p, m = _split_q(cfg.pop("q"))
            if cfg.get("p", p) != p or cfg.get("m", m) != m:
                raise ConfigError("q disagrees with p and m")
            cfg["p"], cfg["m"] = p, m
        if "p" not in cfg:
            raise ConfigError("config needs p (or q)")
        try:
            self.F = GF(cfg["p"], cfg.get("m", 1), cfg.get("modulus"))
        except FieldError as e:
            raise ConfigError(str(e)) from None
        self.cfg = cfg
        self._mods = {}
        self.M = cfg.get("precision", 10)
        self.D = cfg.get("cutoff")
        self.dmax = cfg.get("dmax", 2)
        self.seed = cfg.get("seed", 0)
        self.workers = cfg.get("workers", 1)

    @property
    def phi(self):
        return self._module("phi")

    @property
    def psi(self):
        return self._module("psi")

    def _module(self, key):
        if key in self._mods:
            return self._mods[key]
        ks = self.cfg.get(key)
        if ks is None:
            return None
        try:
            kap = [_poly_from(self.F, x) for x in ks]
            mod = DrinfeldModule(self.F, kap)
        except ValueError as e:
            raise ConfigError(f"{key}: {e}") from None
        self._mods[key] = mod
        return mod

    def need_phi(self, good=True):
        if self.phi is None:
            raise ConfigError("this command needs phi")
        if good and not self.phi.everywhere_good:
            raise ConfigError("kappa_r of phi must lie in F_q^x")
        return self.phi

    def need_odd(self):
        if self.F.p == 2:
            raise ConfigError("Sym^2 and Alt^2 need p != 2")

    def prime(self):
        f = self.cfg.get("f")
        if f is None:
            return None
        f = _poly_from(self.F, f)
        if not f.is_monic() or not is_irreducible(f):
            raise ConfigError(f"f = {f} is not monic irreducible")
        return f

    def primes(self):
        f = self.prime()
        return [f] if f is not None else enumerate_monic_irreducibles(self.F, self.dmax)

    def echo(self):
        # workers never affects output, so it is not echoed either
        out = {k: v for k, v in self.cfg.items() if k not in ("phi", "psi", "f", "workers")}
        for key in ("phi", "psi"):
            if key in self._mods and self._mods[key] is not None:
                out[key] = [k.to_string() for k in self._mods[key].kappas]
            elif key in self.cfg:
                out[key] = self.cfg[key]
        if "f" in self.cfg:
            out["f"] = _poly_from(self.F, self.cfg["f"]).to_string()
        return out


def _pmap(fn, items, workers):
    """Ordered map; a process pool when workers > 1.  Output never depends on workers."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


# ---- commands; each returns (result, checks, precision, cutoff) ----

def cmd_irreducibles(ctx):
    polys = enumerate_monic_irreducibles(ctx.F, ctx.dmax)
    rows, checks = [], []
    for d in range(1, ctx.dmax + 1):
        ps = [f for f in polys if f.degree() == d]
        exp = irreducible_count(ctx.F.q, d)
        rows.append({"degree": d, "count": len(ps), "polys": [f.to_string() for f in ps]})
        checks.append(check(f"count_degree_{d}", len(ps) == exp, len(ps), exp, None))
    return {"q": ctx.F.q, "dmax": ctx.dmax, "by_degree": rows}, checks, None, None


def _charpoly_one(args):
    phi, f = args
    P = frob_charpoly(phi, f, check=False, verify=False)
    rep = verify_charpoly(P)
    dual = dualize_reciprocal(P)["P_dual"]
    return {"f": f.to_string(), "P": P.poly(), "c_f": P.c_f, "chi": P.chi, "P_dual": dual,
            "P_dual_display_agrees": dual == dual_display(P)}, rep


def cmd_charpoly(ctx):
    phi = ctx.need_phi()
    out = _pmap(_charpoly_one, [(phi, f) for f in ctx.primes()], ctx.workers)
    result, checks = [], []
    for row, rep in out:
        result.append(row)
        for name, ok in rep.items():
            checks.append(check(f"{name}@{row['f']}", ok, None, None, None))
        checks.append(check(f"dual_display@{row['f']}", row["P_dual_display_agrees"], None, None, None))
    return {"charpolys": result}, checks, None, None


def cmd_mu(ctx):
    phi = ctx.need_phi()
    table = MuTable(phi)
    m = ctx.cfg.get("m_max", 6)
    result, checks = [], []
    for f in ctx.primes():
        P = table.charpoly(f)
        mi, mr = mu_by_inversion(P, m), mu_by_recursion(P, m)
        ni, nr = nu_by_inversion(P, m), nu_by_recursion(P, m)
        result.append({"f": f.to_string(), "mu": mr, "nu": nr})
        checks.append(check(f"mu_paths@{f}", mi == mr, mi, mr, None))
        checks.append(check(f"nu_paths@{f}", ni == nr, ni, nr, None))
    return {"m_max": m, "values": result}, checks, None, None


def cmd_boldmu(ctx):
    phi = ctx.need_phi()
    if phi.r < 2:
        raise ConfigError("bold-mu needs rank >= 2")
    table = MuTable(phi)
    bound = ctx.cfg.get("bound", 3)
    from itertools import product
    result, checks = [], []
    for f in ctx.primes():
        vals = []
        deg_ok = True
        for ks in product(range(bound + 1), repeat=phi.r - 1):
            v = table.boldmu_prime(f, ks)
            deg_ok = deg_ok and boldmu_degree_bound_ok(phi.r, [f.degree() * k for k in ks], v)
            vals.append({"k": list(ks), "value": v})
        rel = boldmu_relation_checks(phi, f, bound, table)
        result.append({"f": f.to_string(), "values": vals})
        checks.append(check(f"degree_bound@{f}", deg_ok, None, None, None))
        checks.append(check(f"relations@{f}", rel["pass"], None, None, None,
                            general=len(rel["general"]), explicit=len(rel["explicit"])))
    return {"bound": bound, "values": result}, checks, None, None


def _tmodule(ctx, kind):
    if kind == "drinfeld":
        return drinfeld_as_tmodule(ctx.need_phi(False))
    if kind == "tensor":
        if ctx.psi is None:
            raise ConfigError("tensor needs psi")
        return build_tensor(ctx.need_phi(False), ctx.psi)
    if kind in ("sym2", "alt2"):
        ctx.need_odd()
        return (build_sym2 if kind == "sym2" else build_alt2)(ctx.need_phi(False))
    raise ConfigError(f"unknown t-module kind {kind}")


def cmd_tmodule(ctx):
    kind = ctx.cfg.get("kind", "tensor")
    E = _tmodule(ctx, kind)
    nil = E.nilpotency_index()
    pure = check_almost_strictly_pure(E)
    coeffs = [E.coefficient(k) for k in range(E.Et.degree() + 1)]
    checks = [check("nilpotent", nil is not None, None, None, None, index=nil)]
    if ctx.phi.everywhere_good and (ctx.psi is None or ctx.psi.everywhere_good):
        checks.append(check("almost_strictly_pure", pure["ok"], None, None, None, k=pure["k"]))
    return {"kind": kind, "dim": E.dim, "E_t": coeffs, "nilpotency_index": nil,
            "almost_strictly_pure": {"ok": pure["ok"], "k": pure["k"], "degree": pure["degree"],
                                     "det_top": pure["det"]}}, checks, None, None


def cmd_explog(ctx):
    kind = ctx.cfg.get("kind", "drinfeld")
    E = _tmodule(ctx, kind)
    n = ctx.cfg.get("m_max", 3)
    if n > 8:
        raise GuardError("explog m_max <= 8")
    el = exp_log_coeffs(E, n)
    checks = []
    for k in range(1, n + 1):
        D = el.composition_defect(k)
        checks.append(check(f"log_exp_defect_{k}", all(x.is_zero() for row in D for x in row), None, None, None))
    return {"kind": kind, "n_max": n, "exp": el.exp, "log": el.log}, checks, None, None


def _series_spec(ctx):
    kind = ctx.cfg.get("series", "twisted_zeta")
    s = ctx.cfg.get("s", 1)
    if kind not in SERIES_KINDS:
        raise ConfigError(f"unknown series {kind}")
    if kind == "twisted_zeta":
        chi_code = ctx.cfg.get("chi", 1)
        if not 0 < chi_code < ctx.F.q:
            raise ConfigError("chi must be a nonzero F_q code")
        return zeta_spec(ctx.F, s, chi_code, ctx.M, ctx.D)
    if kind in ("sym_twiddle", "alt_hat"):
        ctx.need_odd()
    return SeriesSpec(kind, s, ctx.need_phi(), ctx.psi, M=ctx.M, D=ctx.D)


def cmd_lvalue(ctx):
    try:
        spec = _series_spec(ctx)
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(str(e)) from None
    method = ctx.cfg.get("method", "dirichlet")
    if method == "dirichlet":
        val = dirichlet_sum(spec)
    elif method == "euler":
        val = euler_product(spec, ctx.dmax)
    else:
        raise ConfigError(f"unknown method {method}")
    res = {"series": spec.describe(), "method": method, "value": val, "text": str(val)}
    if method == "euler":
        res["dmax"] = ctx.dmax
    return res, [], spec.M, spec.D if method == "dirichlet" else None


def _euler_one(args):
    kind, phi, psi, f, W = args
    return euler_factor_identity_check(kind, phi, psi, f, W)


def cmd_euler_check(ctx):
    kind = ctx.cfg.get("kind", "tensor")
    phi = ctx.need_phi()
    W = ctx.cfg.get("W", 6)
    if kind == "tensor" and ctx.psi is None:
        raise ConfigError("tensor needs psi")
    if kind in ("sym2", "alt2"):
        ctx.need_odd()
    psi = ctx.psi if kind == "tensor" else None
    if psi is not None and phi.r > psi.r:
        phi, psi = psi, phi
    out = _pmap(_euler_one, [(kind, phi, psi, f, W) for f in ctx.primes()], ctx.workers)
    checks = [check(f"{kind}@{r['f']}", r["pass"], None, None, None, case=r["case"], mismatch=r["mismatch"])
              for r in out]
    return {"kind": kind, "W": W}, checks, None, None


def _order_one(args):
    kind, phi, psi, f = args
    return verify_order_identity(kind, phi, psi, f)


def cmd_order_check(ctx):
    kind = ctx.cfg.get("kind", "tensor")
    phi = ctx.need_phi()
    if kind == "tensor" and ctx.psi is None:
        raise ConfigError("tensor needs psi")
    if kind in ("sym2", "alt2"):
        ctx.need_odd()
    psi = ctx.psi if kind == "tensor" else None
    out = _pmap(_order_one, [(kind, phi, psi, f) for f in ctx.primes()], ctx.workers)
    checks = [check(f"{kind}@{r['f']}", r["pass"], r["oracle"], r["chi_scaled"], None) for r in out]
    return {"kind": kind}, checks, None, None


def cmd_regulator(ctx):
    kind = ctx.cfg.get("kind", "sym2")
    if kind not in REG_KINDS:
        raise ConfigError(f"unknown regulator kind {kind}")
    phi = ctx.need_phi()
    if phi.r != 2:
        raise ConfigError("regulators need rank 2")
    ctx.need_odd()
    method = ctx.cfg.get("method", "both")
    res, checks = {"kind": kind}, []
    if method in ("closed", "both"):
        res["closed_form"], res["gamma_closed"] = reg_closed_form(kind, phi, ctx.M)
    if method in ("basis", "both"):
        res["basis"], res["gamma_basis"] = reg_via_basis(kind, phi, ctx.M)
    if method == "both":
        a, b = res["closed_form"], res["basis"]
        rd = a.residual_degree(b)
        checks.append(check("pipelines_agree", rd is not None and rd < -ctx.M, a, b, rd))
    elif method not in ("closed", "basis"):
        raise ConfigError(f"unknown method {method}")
    return res, checks, ctx.M, None


def cmd_special_value(ctx):
    kind = ctx.cfg.get("kind", "carlitz")
    if kind not in SPECIAL_KINDS:
        raise ConfigError(f"unknown special value kind {kind}")
    if kind != "carlitz":
        ctx.need_phi()
        ctx.need_odd()
    try:
        rep = special_value_report(kind, ctx.phi, ctx.psi if kind == "tensor" else None, M=ctx.M, D=ctx.D,
                                   F=ctx.F)
    except (RegulatorError, DivergenceError):
        raise
    except ValueError as e:
        raise ConfigError(str(e)) from None
    rd = rep["residual_degree"]
    if kind in ("carlitz", "alt2"):
        checks = [check("special_value", rd is not None and rd <= -(ctx.M - 2), rep["lhs"], rep["rhs"], rd)]
    else:
        checks = [check("class_order_candidate", rd is not None and rd <= -6 and rep["monic"], rep["V"],
                        rep["candidate"], rd)]
    rep.pop("series")
    return rep, checks, ctx.M, rep["D"]


def cmd_verify_all(ctx):
    wanted = ctx.cfg.get("suites") or [n for n, _, _ in suites.SUITE_LIST]
    out = _pmap(suites.run_suite, wanted, ctx.workers)
    checks = []
    for rec, seconds in out:
        print(f"criterion {rec['criterion']:2d}: {rec['status']}  ({seconds:.1f}s)  {rec['title']}",
              file=sys.stderr)
        checks.append(rec)
    return {"suites": wanted}, checks, None, None


def cmd_schema(ctx):
    return report_schema(), [], None, None


HANDLERS = {
    "irreducibles": cmd_irreducibles, "charpoly": cmd_charpoly, "mu": cmd_mu, "boldmu": cmd_boldmu,
    "tmodule": cmd_tmodule, "explog": cmd_explog, "lvalue": cmd_lvalue, "euler-check": cmd_euler_check,
    "order-check": cmd_order_check, "regulator": cmd_regulator, "special-value": cmd_special_value,
    "verify-all": cmd_verify_all, "schema": cmd_schema,
}


def _error_class(e):
    if isinstance(e, ConfigError):
        return "config", EXIT_CONFIG
    if isinstance(e, (GuardError, OverflowError, RegulatorError, DivergenceError, PrecisionError)):
        return "guard", EXIT_GUARD
    if isinstance(e, (FrobeniusError, LSeriesError, CheckFailed)):
        return "check-failed", EXIT_CHECK
    return "internal", EXIT_INTERNAL


def run(command, cfg):
    """Run one command on a config dict; returns (exit code, report dict)."""
    report = {"command": command, "precision": None, "cutoff": None}
    ctx = None
    try:
        if command not in HANDLERS:
            raise ConfigError(f"unknown command {command!r}")
        ctx = Context(cfg)
        result, checks, prec, cut = HANDLERS[command](ctx)
        report["config"] = ctx.echo()
        ok = all(c["status"] == "pass" for c in checks)
        report.update(result=encode(result), checks=checks, precision=prec, cutoff=cut,
                      status=("pass" if ok else "fail") if checks else "info")
        code = EXIT_OK if ok else EXIT_CHECK
    except Exception as e:  # classified below
        cls, code = _error_class(e)
        if ctx is not None:
            try:
                report["config"] = ctx.echo()
            except ConfigError:
                pass
        report.update(status="error", error={"class": cls, "message": f"{type(e).__name__}: {e}"})
    report["exit_code"] = code
    return code, report


def build_parser():
    ap = argparse.ArgumentParser(prog="drinfeld-tensor", description=__doc__.splitlines()[0])
    ap.add_argument("command", help="one of: " + ", ".join(COMMANDS))
    ap.add_argument("--config", help="JSON config file, or 'sample' for the bundled q=3 config")
    ap.add_argument("--q", type=int)
    ap.add_argument("--phi", help="kappa_1..kappa_r as JSON, e.g. '[1, \"theta\", 1]'")
    ap.add_argument("--psi")
    ap.add_argument("--precision", type=int)
    ap.add_argument("--dmax", type=int)
    ap.add_argument("--cutoff", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out")
    ap.add_argument("--f", help="a monic irreducible, e.g. 'theta^2+1'")
    ap.add_argument("--kind")
    ap.add_argument("--series")
    ap.add_argument("--s", type=int)
    ap.add_argument("--chi", type=int)
    ap.add_argument("--method")
    ap.add_argument("--m-max", dest="m_max", type=int)
    ap.add_argument("--bound", type=int)
    ap.add_argument("--W", type=int)
    ap.add_argument("--suites", help="comma separated suite numbers for verify-all")
    return ap


def _json_arg(text, name):
    try:
        v = json.loads(text)
    except json.JSONDecodeError:
        v = [x.strip() for x in text.split(",")]
    if not isinstance(v, list):
        raise ConfigError(f"--{name} must be a list")
    return v


def config_from_args(ns):
    if ns.config is None or ns.config == "sample":
        cfg = sample_config()
    else:
        try:
            with open(ns.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config: {e}") from None
    if ns.q is not None:
        cfg.pop("p", None)
        cfg.pop("m", None)
        cfg.pop("modulus", None)
        cfg["q"] = ns.q
    for key in ("phi", "psi"):
        v = getattr(ns, key)
        if v is not None:
            cfg[key] = _json_arg(v, key)
    for key in ("precision", "dmax", "cutoff", "seed", "workers", "f", "kind", "series", "s", "chi",
                "method", "m_max", "bound", "W"):
        v = getattr(ns, key)
        if v is not None:
            cfg[key] = v
    if ns.suites:
        try:
            cfg["suites"] = [int(x) for x in ns.suites.split(",")]
        except ValueError:
            raise ConfigError("--suites takes comma separated integers") from None
    return cfg


def main(argv=None):
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ConfigError as e:
        code, report = EXIT_CONFIG, {"command": ns.command, "status": "error", "precision": None, "cutoff": None,
                                     "error": {"class": "config", "message": str(e)}, "exit_code": EXIT_CONFIG}
    else:
        code, report = run(ns.command, cfg)
    text = dumps(report) + "\n"
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
