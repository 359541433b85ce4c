import random

import pytest

from drinfeld_tensor.fields import GF
from drinfeld_tensor.poly import (PolyA, PolyRing, parse_poly, enumerate_monic_irreducibles, irreducible_count,
                                  is_irreducible, is_irreducible_exhaustive, factor)


def test_irreducibles_q2():
    F = GF(2)
    assert [f.to_string() for f in enumerate_monic_irreducibles(F, 1)] == ["theta", "theta+1"]
    two = enumerate_monic_irreducibles(F, 2)
    assert [f.to_string() for f in two[2:]] == ["theta^2+theta+1"]


def test_irreducibles_q3_counts():
    F = GF(3)
    got = enumerate_monic_irreducibles(F, 2)
    assert sum(f.degree() == 1 for f in got) == 3
    assert sum(f.degree() == 2 for f in got) == 3
    for d in range(1, 7):
        assert len([f for f in enumerate_monic_irreducibles(F, 6) if f.degree() == d]) == irreducible_count(3, d)


@pytest.mark.parametrize("p,m,d", [(2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2)])
def test_sieve_matches_exhaustive(p, m, d):
    F = GF(p, m)
    R = PolyRing(F)
    irr = set(enumerate_monic_irreducibles(F, d))
    for f in R.monics(d):
        assert (f in irr) == is_irreducible_exhaustive(f) == is_irreducible(f)


def test_parse_and_print():
    F = GF(3)
    a = parse_poly(F, "2*theta^3+1")
    assert list(a.c) == [1, 0, 0, 2]
    assert a.to_string() == "2*theta^3+1"
    assert parse_poly(F, "theta - 1") == parse_poly(F, "theta+2")
    with pytest.raises(ValueError):
        parse_poly(F, "theta^^2")


def test_ring_laws_and_division():
    F = GF(5)
    R = PolyRing(F)
    rng = random.Random(1)
    for _ in range(40):
        a, b = R.random(rng, 6), R.random(rng, 4)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree() < b.degree()
        g, s, t = a.xgcd(b)
        assert s * a + t * b == g
        assert g == a.gcd(b)


def test_factor_roundtrip():
    F = GF(3)
    R = PolyRing(F)
    rng = random.Random(2)
    for _ in range(20):
        a = R.random(rng, 7, monic=True)
        if a.degree() < 1:
            continue
        fac = factor(a)
        prod = a.one()
        for f, e in fac:
            assert f.is_monic() and is_irreducible(f)
            prod = prod * f ** e
        assert prod == a


def test_twist_is_frobenius():
    F = GF(3)
    R = PolyRing(F)
    a = parse_poly(F, "theta^2+2*theta+1")
    assert a.twist(1) == a.compose(R.theta ** 3)
    assert a.twist(2) == a.twist(1).twist(1)
