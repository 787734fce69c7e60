from math import prod

import pytest

from tambara.numtheory import (
    binom_over_ell, divisors, factorize, is_prime, is_sum_of_two_squares, radical,
)

import oracles


@pytest.mark.parametrize("n, expected", [(1, []), (12, [(2, 2), (3, 1)]), (360, [(2, 3), (3, 2), (5, 1)])])
def test_factorize_examples(n, expected):
    assert list(factorize(n)) == expected


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (9, [1, 3, 9])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize("ell, i, expected", [(3, 1, 1), (5, 2, 2), (7, 3, 5)])
def test_binom_over_ell_examples(ell, i, expected):
    assert binom_over_ell(ell, i) == expected


@pytest.mark.parametrize("n, expected", [(2, True), (7, False), (45, True)])
def test_two_squares_examples(n, expected):
    assert is_sum_of_two_squares(n) is expected


@pytest.mark.parametrize("bad", [0, -1, -12])
def test_rejects_nonpositive(bad):
    for fn in (factorize, divisors, is_sum_of_two_squares):
        with pytest.raises(ValueError):
            fn(bad)


def test_binom_over_ell_rejects():
    with pytest.raises(ValueError):
        binom_over_ell(5, 0)
    with pytest.raises(ValueError):
        binom_over_ell(5, 5)
    with pytest.raises(ValueError):
        binom_over_ell(6, 2)


def test_factorize_products():
    for n in range(1, 10**4 + 1):
        f = factorize(n)
        assert prod(p**e for p, e in f) == n
        assert all(is_prime(p) and e >= 1 for p, e in f)
        assert [p for p, _ in f] == sorted({p for p, _ in f})


def test_divisors_brute():
    for n in range(1, 500):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_two_squares_brute():
    for n in range(1, 10**3 + 1):
        assert is_sum_of_two_squares(n) == oracles.two_squares_brute(n), n


def test_binom_over_ell_pascal():
    for ell in (p for p in range(2, 24) if is_prime(p)):
        row = oracles.pascal_row(ell)
        for i in range(1, ell):
            assert ell * binom_over_ell(ell, i) == row[i]


def test_radical():
    assert radical(1) == 1
    assert radical(360) == 30
    assert radical(49) == 7
