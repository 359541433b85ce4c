import pytest

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing, enumerate_monic_irreducibles
from drinfeld_tensor.tmodules import DrinfeldModule
from drinfeld_tensor.frobenius import (frob_charpoly, frob_charpoly_fast, verify_charpoly, dualize_reciprocal,
                                       dual_display, tensor_structure_charpoly, predicted_constant_term,
                                       verify_order_identity, chi)

F = GF(3)
R = PolyRing(F)
th = R.theta


def test_carlitz_at_theta():
    P = frob_charpoly(DrinfeldModule.carlitz(F), th)
    assert P.poly() == [-th, R.one]


def test_rank2_fast_path_agrees():
    phi = DrinfeldModule(F, [th, 2])
    for f in enumerate_monic_irreducibles(F, 3):
        assert frob_charpoly(phi, f).poly() == frob_charpoly_fast(phi, f).poly()


@pytest.mark.parametrize("kappas", [[1, 1], [0, 1], ["theta", 0, 2], [1, "theta", 0, 1]])
def test_self_verification(kappas):
    phi = DrinfeldModule(F, [R(k) for k in kappas])
    for f in enumerate_monic_irreducibles(F, 2):
        P = frob_charpoly(phi, f, verify=False)
        assert all(verify_charpoly(P).values())


def test_extension_field():
    F4 = GF(2, 2)
    phi = DrinfeldModule(F4, [2, 3])
    for f in enumerate_monic_irreducibles(F4, 2):
        assert all(verify_charpoly(frob_charpoly(phi, f, verify=False)).values())


def test_chi_values():
    phi = DrinfeldModule(F, [1, 1])
    # (-kappa_2)^deg for even rank
    assert chi(phi, 1) == 2 and chi(phi, 2) == 1
    assert chi(DrinfeldModule.carlitz(F), 5) == 1


def test_dual_forms():
    phi = DrinfeldModule(F, [th, 0, 1])
    for f in enumerate_monic_irreducibles(F, 2):
        P = frob_charpoly(phi, f)
        forms = dualize_reciprocal(P)
        assert forms["P_dual"] == dual_display(P)
        # Q^vee(fX) has coefficients in A with constant term 1
        assert forms["Q_dual_fX"][0] == R.one


def test_structure_polynomials():
    phi = DrinfeldModule(F, [1, 1])
    psi = DrinfeldModule(F, [th, 0, 1])
    for f in enumerate_monic_irreducibles(F, 2):
        P1, P2 = frob_charpoly(phi, f), frob_charpoly(psi, f)
        T = tensor_structure_charpoly(P1, P2, "tensor")
        assert len(T) == 7 and T[-1] == R.one
        assert T[0] == predicted_constant_term("tensor", P1, P2)
        for kind in ("sym2", "alt2"):
            assert tensor_structure_charpoly(P2, None, kind)[0] == predicted_constant_term(kind, P2)


@pytest.mark.parametrize("kind", ["tensor", "sym2", "alt2"])
def test_order_identity(kind):
    phi = DrinfeldModule(F, [1, 1])
    psi = DrinfeldModule(F, [th, 2])
    for f in enumerate_monic_irreducibles(F, 2):
        rep = verify_order_identity(kind, phi, psi if kind == "tensor" else None, f)
        assert rep["pass"] and rep["P0_pass"] and rep["ratio_form_pass"]
