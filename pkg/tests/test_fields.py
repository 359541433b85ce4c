import pytest

from drinfeld_tensor.fields import GF, FieldError


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
def test_field_axioms(p, m):
    F = GF(p, m)
    els = list(F.elements())
    assert len(els) == p ** m
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els[:3]:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_multiplicative_group_cyclic_order():
    F = GF(3, 2)
    for a in F.nonzero():
        assert F.pow(a, F.q - 1) == 1


def test_bad_inputs():
    with pytest.raises(FieldError):
        GF(4)
    with pytest.raises(FieldError):
        GF(3, 2, [1, 0, 1 + 1])  # x^2 + 2 = x^2 - 1 is reducible over F_3


def test_codes_and_digits():
    F = GF(3, 2)
    assert F.coerce(4) == 4
    assert F.coerce(-1) == F.neg(1)
    for x in F.elements():
        assert F.from_digits(F.digits(x)) == x
    assert GF(5).coerce(7) == 2


def test_frobenius_on_elements():
    F = GF(3, 2)
    x = F(4)
    # tau is the q-power map, which fixes F_q
    assert x.twist(1) == x
