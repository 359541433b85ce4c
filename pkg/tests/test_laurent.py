import random

import pytest

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing
from drinfeld_tensor.ratfunc import RatK
from drinfeld_tensor.laurent import Laurent, PrecisionError

F = GF(3)
R = PolyRing(F)


def test_inverse_of_polynomial():
    a = R("theta^2+theta+2")
    x = Laurent.from_poly(a).inverse(15)
    prod = (x * Laurent.from_poly(a)).with_prec(13)
    assert prod == Laurent.one(F).with_prec(13)


def test_geometric_series():
    # 1/(theta - 1) = sum_{k >= 1} theta^-k
    x = Laurent.from_ratk(RatK(R.one, R("theta-1")), 10)
    assert x.exponents() == list(range(-1, -11, -1))
    assert all(x.coeff(-k) == 1 for k in range(1, 11))


def test_precision_propagation():
    a = Laurent.monomial(F, 2, 1, 5)   # theta^2 + O(theta^-6)
    b = Laurent.monomial(F, -1, 2, 8)  # 2 theta^-1 + O(theta^-9)
    assert (a + b).prec == 5
    # absolute precision of a product: min(pa - deg b, pb - deg a)
    assert (a * b).prec == min(5 + 1, 8 - 2)
    with pytest.raises(PrecisionError):
        (a + b).coeff(-7)


def test_from_ratk_field_ops():
    rng = random.Random(3)
    for _ in range(20):
        u = RatK(R.random(rng, 4), R.random(rng, 3, monic=True))
        v = RatK(R.random(rng, 4), R.random(rng, 3, monic=True))
        M = 12
        lu, lv = Laurent.from_ratk(u, M), Laurent.from_ratk(v, M)
        assert (lu + lv) == Laurent.from_ratk(u + v, M)
        assert (lu * lv).with_prec(M - 8) == Laurent.from_ratk(u * v, M - 8)


def test_nearest_polynomial():
    x = Laurent.from_poly(R("theta^2+1")) + Laurent.from_ratk(RatK(R.one, R("theta+1")), 8)
    poly, tail = x.nearest_polynomial()
    assert poly == R("theta^2+1")
    assert tail.degree() == -1


def test_derivative_and_residual():
    a = Laurent.from_poly(R("theta^4+2*theta"), 6)
    assert a.derivative() == Laurent.from_poly(R("theta^4+2*theta").derivative(), 7)
    assert a.residual_degree(a) == -7
