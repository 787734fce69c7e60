import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tambara import gw
from tambara.gw import FieldMismatch, GwClass

import properties as props


def G(n, e, m=1, q=3):
    return GwClass(q, m, n, e)


def pair(x):
    return (x.dim, x.det)


def test_add_examples():
    assert pair(G(1, 0) + G(1, 1)) == (2, 1)
    assert pair(gw.add(G(5, 1), G(0, 0))) == (5, 1)
    assert pair(G(3, 1) + G(-1, 1)) == (2, 0)


def test_mul_examples():
    assert pair(G(1, 1) * G(1, 1)) == (1, 0)
    assert pair(gw.mul(G(2, 1), G(2, 1))) == (4, 0)
    assert pair(G(7, 1) * G(1, 0)) == (7, 1)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        G(1, 0, m=2) + G(1, 0, m=3)
    with pytest.raises(FieldMismatch):
        G(1, 0, q=3) * G(1, 0, q=5)
    with pytest.raises(ValueError):
        GwClass(4, 1, 1, 0)


def test_restrict_examples():
    assert gw.restrict(G(1, 1), 2) == G(1, 0, m=2)
    assert gw.restrict(G(1, 1), 3) == G(1, 1, m=3)
    for m in (1, 2, 5, 6):
        assert pair(gw.restrict(G(4, 0), m)) == (4, 0)


def test_transfer_examples():
    assert gw.transfer(G(1, 0, m=2), 2) == G(2, 1)
    assert gw.transfer(G(1, 1, m=2), 2) == G(2, 0)
    assert gw.transfer(G(1, 1, m=3), 3) == G(3, 1)
    with pytest.raises(ValueError):
        gw.transfer(G(1, 0, m=2), 3)


def test_norm_closed_examples():
    assert gw.norm_closed(G(3, 0, m=2), 2) == G(9, 1)
    for n in range(-4, 5):
        for e in (0, 1):
            assert gw.norm_closed(G(n, e, m=5), 1) == G(n, e, m=5)
    assert gw.norm_closed(G(2, 1, m=3), 3) == G(8, 0)
    assert gw.norm_closed(G(-1, 0, m=2), 2) == G(1, 1)


def test_norm_oracle_examples():
    assert gw.norm_oracle(G(2, 0, m=2), 2) == G(4, 1)
    assert gw.norm_oracle(G(3, 0, m=2), 2) == G(9, 1)
    for m in (1, 2, 3, 4, 6):
        assert gw.norm_oracle(G(0, 0, m=m), m) == G(0, 0)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 9, 12])
def test_norm_closed_matches_oracle(m):
    for n in range(-6, 7):
        for e in (0, 1):
            x = G(n, e, m=m)
            assert gw.norm_closed(x, m) == gw.norm_oracle(x, m), (n, e, m)


def test_tau_finite_field():
    assert gw.tau_finite_field(3, True) == 1
    assert gw.tau_finite_field(3, False) == 2
    assert gw.tau_finite_field(81, False) == 2
    with pytest.raises(ValueError):
        gw.tau_finite_field(4, False)


@pytest.mark.parametrize("r, tau", [
    (-5, 0), (-1, 0), (Fraction(4, 9), 1), (1, 1), (2, 2), (5, 2), (10, 2),
    (7, 4), (21, 4), (Fraction(7, 2), 4), (Fraction(1, 2), 2), (Fraction(3, 5), 4),
])
def test_tau_rational(r, tau):
    assert gw.tau_rational(r) == tau


def test_tau_rational_rejects_zero():
    with pytest.raises(ValueError):
        gw.tau_rational(0)


def test_tau_rational_against_search():
    # positive integers up to 200: 1 if a square, 2 if a sum of two squares, else 4
    for r in range(1, 201):
        sums = {a * a + b * b for a in range(15) for b in range(15)}
        expected = 1 if int(r**0.5) ** 2 == r else 2 if r in sums else 4
        assert gw.tau_rational(r) == expected


@pytest.mark.parametrize("tau, value", [(0, 0), (1, 2), (2, 2), (4, 2), (8, 4), (16, 8)])
def test_pi(tau, value):
    assert gw.pi(tau) == value


def test_pi_rejects():
    with pytest.raises(ValueError):
        gw.pi(3)


def test_json_round_trip():
    x = G(-3, 1, m=4, q=5)
    assert GwClass.from_json(json.loads(json.dumps(x.to_json()))) == x
    with pytest.raises(ValueError):
        GwClass.from_json({"q": 3, "m": 1, "dim": 1, "det": 2})


gwc = lambda m: st.builds(lambda n, e: G(n, e, m=m), st.integers(-6, 6), st.integers(0, 1))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12).flatmap(lambda m: st.tuples(gwc(m), gwc(m), gwc(m))))
def test_ring_axioms(xyz):
    props.check_gw_ring(*xyz)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12).flatmap(lambda m: st.tuples(st.just(m), gwc(m), gwc(m))))
def test_norm_laws(args):
    m, x, y = args
    props.check_gw_norm_laws(x, y, m)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_functoriality(m1, m2, data):
    x = data.draw(gwc(m1 * m2))
    props.check_gw_functoriality(x, m1, m2)
    # restriction goes the other way: from degree 1 up
    y = data.draw(gwc(1))
    assert gw.restrict(gw.restrict(y, m1), m2) == gw.restrict(y, m1 * m2)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 3), st.data())
def test_frobenius(m, k, data):
    x = data.draw(gwc(k * m))
    y = data.draw(gwc(k))
    props.check_gw_frobenius(x, y, m)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.data())
def test_reciprocity(ell, data):
    a = data.draw(gwc(ell))
    b = data.draw(gwc(ell))
    props.check_gw_reciprocity(a, b, ell)


def test_dimension_is_a_homomorphism():
    for n in range(-5, 6):
        for m in range(1, 7):
            x = G(n, 1, m=m)
            assert gw.transfer(x, m).dim == m * n
            assert gw.norm_closed(x, m).dim == n**m
