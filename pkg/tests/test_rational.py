import random

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing
from drinfeld_tensor.ratfunc import RatK
from drinfeld_tensor.bracket import BracketFrac
from drinfeld_tensor.bivariate import BivarRat
from drinfeld_tensor.residue import ResidueField

F = GF(3)
R = PolyRing(F)
th = R.theta


def bracket(i):
    return th.twist(i) - th


def test_ratk_reduced():
    x = RatK(R("theta^2-1"), R("theta+1").scale(2))
    assert x.num == R("theta-1").scale(2) and x.den == R.one
    assert (x - x).is_zero()


def test_bracket_frac_matches_ratk():
    rng = random.Random(5)
    for _ in range(10):
        num = R.random(rng, 5)
        den = {1: rng.randint(0, 2), 2: rng.randint(0, 1)}
        b = BracketFrac(num, den)
        d = R.one
        for i, e in den.items():
            d = d * bracket(i) ** e
        assert b.to_ratk() == RatK(num, d)
        assert b.twist(1).to_ratk() == RatK(num.twist(1), d.twist(1))


def test_bracket_division_reduces():
    b = BracketFrac(bracket(1) * th, {1: 1})
    assert b.den == {} and b.num == th


def test_bracket_derivative():
    # d/dtheta [1]^-1 = [1]^-2 since d[1]/dtheta = -1 in characteristic 3
    b = BracketFrac.bracket_inverse(F, 1)
    assert b.derivative().to_ratk() == RatK(R.one, bracket(1) ** 2)


def test_bivariate_evaluate_and_twist():
    t = BivarRat.t(F)
    x = (t - th) / (t - th.twist(1))
    assert x.at_theta().is_zero()
    assert x.twist(1).evaluate(th.twist(1)).is_zero()
    d = x.hyperderivative("t")
    assert d.at_theta() == RatK(R.one, th - th.twist(1))


def test_residue_field_frobenius():
    f = R("theta^2+1")
    Ff = ResidueField(f)
    x = Ff(th)
    assert x ** 9 == x
    assert x.twist(1) == x ** 3
    assert (x * x.inverse()) == Ff.one()
