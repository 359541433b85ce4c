import pytest

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing, enumerate_monic_irreducibles
from drinfeld_tensor.laurent import Laurent
from drinfeld_tensor.ratfunc import RatK
from drinfeld_tensor.tmodules import DrinfeldModule
from drinfeld_tensor.frobenius import chi
from drinfeld_tensor.lseries import (MuTable, mu_prime_powers, nu_prime_powers, boldmu, boldmu_relation_checks,
                                     SeriesSpec, zeta_spec, dirichlet_sum, euler_product, cutoff_stability,
                                     euler_factor_identity_check, special_value_report, GuardError, ps_inverse,
                                     ps_inverse_newton)

F = GF(3)
R = PolyRing(F)
th = R.theta
phi = DrinfeldModule(F, [1, 1])


def brute_zeta(s, chi_code, M, D):
    acc = Laurent.zero(F, M)
    for d in range(D + 1):
        c = F.pow(chi_code, d)
        for a in R.monics(d):
            acc = acc + Laurent.from_poly(a ** s).inverse(M).scale(c)
    return acc


def test_power_series_inverse():
    c = [R.one, th, R("theta^2+1")]
    a = ps_inverse_newton(c, 9)
    b = ps_inverse([RatK.from_poly(x) for x in c], 9)
    assert [RatK.from_poly(x) for x in a] == b
    for n in range(1, 9):
        acc = sum((c[i] * a[n - i] for i in range(min(n, 2) + 1)), R.zero)
        assert acc.is_zero()


def test_mu_carlitz_is_one():
    C = DrinfeldModule.carlitz(F)
    for f in enumerate_monic_irreducibles(F, 2):
        assert all(x == R.one for x in mu_prime_powers(C, f, 6))


def test_mu_rank2_second_power():
    T = MuTable(phi)
    for f in enumerate_monic_irreducibles(F, 3):
        assert T.mu(f, 2) == T.mu(f, 1) ** 2 - f.scale(chi(phi, f))


@pytest.mark.parametrize("kappas", [[1, 1], ["theta", 0, 1], [1, 0, "theta", 2]])
def test_dual_paths(kappas):
    mod = DrinfeldModule(F, [R(k) for k in kappas])
    T = MuTable(mod)
    for f in enumerate_monic_irreducibles(F, 2):
        P = T.charpoly(f)
        mu_prime_powers(mod, f, 8, P)
        nu_prime_powers(mod, f, 8, P)
        assert boldmu_relation_checks(mod, f, 2, T)["pass"]


def test_boldmu_multiplicative():
    mod = DrinfeldModule(F, [th, 0, 1])
    T = MuTable(mod)
    f, g = R("theta"), R("theta^2+1")
    a1, a2 = f ** 2 * g, f * g
    assert boldmu(T, a1, a2) == boldmu(T, f ** 2, f) * boldmu(T, g, g)


def test_zeta_small_cutoff_example():
    # L(A, trivial, 2) with D = 2: 1 + sum over monics of degree 1 and 2 of 1/a^2
    assert dirichlet_sum(zeta_spec(F, 2, 1, M=8, D=2)) == brute_zeta(2, 1, 8, 2)


@pytest.mark.parametrize("s,chi_code", [(1, 1), (1, 2), (2, 2), (3, 1)])
def test_blocks_against_brute_force(s, chi_code):
    M = 9
    D = M // s
    assert dirichlet_sum(zeta_spec(F, s, chi_code, M=M, D=D)) == brute_zeta(s, chi_code, M, min(D, 6))


def test_blocks_equal_prime_search():
    spec = zeta_spec(F, 1, 2, M=7)
    assert dirichlet_sum(spec) == dirichlet_sum(spec, prime_degree_max=7)


def test_cutoff_zero_is_one():
    assert dirichlet_sum(zeta_spec(F, 2, 1, M=5, D=0)) == Laurent.one(F).with_prec(5)
    assert dirichlet_sum(SeriesSpec("conv_equal_rank", 0, phi, phi, M=5, D=0)) == Laurent.one(F).with_prec(5)


@pytest.mark.parametrize("kind", ["goss_dual", "sym_twiddle", "alt_hat", "conv_equal_rank"])
def test_euler_product_equals_capped_sum(kind):
    psi = phi if kind == "conv_equal_rank" else None
    spec = SeriesSpec(kind, 0 if kind != "alt_hat" else 1, phi, psi, M=4)
    assert euler_product(spec, 2) == dirichlet_sum(spec, prime_degree_max=2)


def test_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec("conv_unequal_rank", 0, phi, phi)
    with pytest.raises(ValueError):
        SeriesSpec("sym_twiddle", 0, DrinfeldModule(GF(2), [1, 1]))
    with pytest.raises(ValueError):
        zeta_spec(F, 0)
    assert SeriesSpec("goss_dual", 0, phi, M=6).D == 12


def test_prime_guard():
    with pytest.raises(GuardError):
        dirichlet_sum(SeriesSpec("goss_dual", 0, phi, M=6))


@pytest.mark.parametrize("kind,other", [("tensor", [2, 1]), ("tensor", [1, 0, 1]), ("sym2", None), ("alt2", None)])
def test_euler_factor_identity(kind, other):
    psi = DrinfeldModule(F, other) if other else None
    for f in enumerate_monic_irreducibles(F, 2):
        assert euler_factor_identity_check(kind, phi, psi, f, 6)["pass"]
    with pytest.raises(GuardError):
        euler_factor_identity_check(kind, phi, psi, th, 11)


def test_cutoff_stability_small():
    assert cutoff_stability(zeta_spec(F, 1, 1, M=8, D=8))["equal"]


def test_tensor_special_value_candidate():
    rep = special_value_report("tensor", phi, M=5)
    assert rep["candidate"] == R.one and rep["residual_degree"] <= -6
