import pytest

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing, enumerate_monic_irreducibles
from drinfeld_tensor.bracket import BracketFrac
from drinfeld_tensor.ratfunc import RatK
from drinfeld_tensor.tmodules import (DrinfeldModule, drinfeld_as_tmodule, build_tensor, build_sym2, build_alt2,
                                      exp_log_coeffs, module_order_oracle, check_almost_strictly_pure, matrix_T,
                                      CharacteristicError)
from drinfeld_tensor.linalg import kron, matmul

F = GF(3)
R = PolyRing(F)
th = R.theta


def test_carlitz_exp_log_coefficients():
    el = exp_log_coeffs(drinfeld_as_tmodule(DrinfeldModule.carlitz(F)), 4)
    q = F.q
    for i in range(5):
        D = R.one
        for j in range(i):
            D = D * (th ** (q ** i) - th ** (q ** j))
        L = R.one
        for j in range(1, i + 1):
            L = L * (th - th ** (q ** j))
        assert el.exp[i][0][0].to_ratk() == RatK(R.one, D)
        assert el.log[i][0][0].to_ratk() == RatK(R.one, L)


@pytest.mark.parametrize("kind", ["tensor", "sym2", "alt2"])
def test_log_exp_inverse(kind):
    phi = DrinfeldModule(F, [1, 1])
    psi = DrinfeldModule(F, [th, 2])
    E = {"tensor": lambda: build_tensor(phi, psi), "sym2": lambda: build_sym2(phi),
         "alt2": lambda: build_alt2(phi)}[kind]()
    el = exp_log_coeffs(E, 4)
    for n in range(1, 5):
        assert all(x.is_zero() for row in el.composition_defect(n) for x in row)


def test_dimensions_and_nilpotency():
    phi = DrinfeldModule(F, [1, 1])
    rho = DrinfeldModule(F, [th, 0, 1])
    assert build_tensor(phi, rho).dim == 5
    assert build_sym2(rho).dim == 4
    assert build_alt2(rho).dim == 2
    for E in (build_tensor(phi, phi), build_sym2(phi), build_alt2(rho)):
        assert E.nilpotency_index() is not None
        assert check_almost_strictly_pure(E)["ok"]


def test_char_two_refused():
    F2 = GF(2)
    with pytest.raises(CharacteristicError):
        build_sym2(DrinfeldModule(F2, [1, 1]))


def test_carlitz_order_oracle():
    C = drinfeld_as_tmodule(DrinfeldModule.carlitz(F))
    for f in enumerate_monic_irreducibles(F, 3):
        assert module_order_oracle(C, f) == f - 1


def test_matrix_functoriality():
    A = [[R("theta"), R.one], [R("2"), R("theta^2")]]
    B = [[R.one, R("theta+1")], [R.zero, R("2*theta")]]
    for kind in ("sym2", "alt2", "tensor2"):
        assert matrix_T(matmul(A, B), kind) == matmul(matrix_T(A, kind), matrix_T(B, kind))
    assert matrix_T(A, "tensor2") == kron(A, A)
