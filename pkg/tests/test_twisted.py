from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import PolyRing
from drinfeld_tensor.residue import ResidueField
from drinfeld_tensor.twisted import TwistedPoly, ore_star

F = GF(3)
R = PolyRing(F)
th = R.theta


def test_commutation_rule():
    tau = TwistedPoly.scalar([R.zero, R.one])
    a = TwistedPoly.scalar([th])
    assert tau * a == TwistedPoly.scalar([R.zero, th.twist(1)])


def test_associative_and_evaluate():
    x = TwistedPoly.scalar([th, R.one, R("theta+1")])
    y = TwistedPoly.scalar([R.one, th])
    z = TwistedPoly.scalar([R("2*theta"), R.zero, R.one])
    assert (x * y) * z == x * (y * z)
    v = [R("theta^2")]
    assert (x * y).evaluate(v) == x.evaluate(y.evaluate(v))


def test_ore_star_is_anti_involution():
    Ff = ResidueField(R("theta^2+1"))
    e = Ff(th)
    one = Ff.one()
    A = TwistedPoly([[[e, one], [one, e * e]], [[one, e], [e, one]]])
    B = TwistedPoly([[[one, e], [e + one, one]], [[e, e], [one, e]], [[one, one], [one, e]]])
    assert ore_star(ore_star(A)) == A
    assert ore_star(A * B) == ore_star(B) * ore_star(A)
