import pytest

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing
from drinfeld_tensor.ratfunc import RatK
from drinfeld_tensor.symmetric import (SchurIndex, indices_of_weight, schur_bialternant_oracle, elementary_from_values,
                                       complete_h, schur_jacobi_trudi, identity_suite, jt_vs_bialternant, SUITES)

F = GF(5)
R = PolyRing(F)


def test_index_weight_and_partition():
    k = SchurIndex(3, (2, 1))
    assert k.partition() == [3, 1, 0]
    assert k.weight() == 4
    assert SchurIndex.from_partition([3, 1, 0]) == k
    # k_1 + 2 k_2 = 4: (4,0), (2,1), (0,2)
    assert sorted(tuple(x) for x in indices_of_weight(3, 4)) == [(0, 2), (2, 1), (4, 0)]


def test_small_schur_by_hand():
    xs = [RatK.from_poly(R(a)) for a in ("theta", "theta+1", "2")]
    e = elementary_from_values(xs)
    h = complete_h(e, 4)
    # h_2 = sum_{i <= j} x_i x_j
    h2 = sum((xs[i] * xs[j] for i in range(3) for j in range(i, 3)), RatK.from_poly(R.zero))
    assert h[2] == h2
    k = (1, 0)
    assert schur_jacobi_trudi(SchurIndex(3, k), h) == schur_bialternant_oracle(SchurIndex(3, k), xs)


def test_jt_equals_bialternant():
    for n in (2, 3):
        assert jt_vs_bialternant(n, 4, trials=5)["pass"]


@pytest.mark.parametrize("which", SUITES)
def test_identity_suites_small(which):
    assert identity_suite(which, 2, 4, trials=5, seed=1)["pass"]


def test_guard():
    with pytest.raises(ValueError):
        identity_suite("cauchy", 5, 4)
