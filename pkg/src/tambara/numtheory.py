"""Small exact number theory helpers.

Everything here works on Python ints, so there is no overflow to worry about;
inputs are expected to be desk-sized (trial division is used throughout).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, isqrt

Factorization = list[tuple[int, int]]


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ``[(prime, exponent), ...]``, primes ascending.

    >>> factorize(360)
    [(2, 3), (3, 2), (5, 1)]
    >>> factorize(1)
    []
    """
    _check_positive(n)
    return list(_factor(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factor(n) == ((n, 1),)


def prime_factors(n: int) -> list[int]:
    """Distinct primes dividing ``n``."""
    return [p for p, _ in factorize(n)]


def prime_chain(n: int) -> list[int]:
    """Primes of ``n`` with multiplicity, ascending (``12 -> [2, 2, 3]``)."""
    return [p for p, e in factorize(n) for _ in range(e)]


def radical(n: int) -> int:
    r = 1
    for p in prime_factors(n):
        r *= p
    return r


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factor(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _check_positive(n)
    return list(_divisors(n))


def divisor_tuple(n: int) -> tuple[int, ...]:
    """Cached, immutable variant of :func:`divisors` for hot loops."""
    _check_positive(n)
    return _divisors(n)


def num_divisors(n: int) -> int:
    return len(divisor_tuple(n))


def binom_over_ell(ell: int, i: int) -> int:
    """``C(ell, i) / ell`` for a prime ``ell`` and ``1 <= i <= ell - 1``.

    The quotient is exact in that range; anything else is rejected.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if not 1 <= i <= ell - 1:
        raise ValueError(f"index {i} outside [1, {ell - 1}]")
    q, r = divmod(comb(ell, i), ell)
    assert r == 0
    return q


def is_sum_of_two_squares(n: int) -> bool:
    """Fermat's criterion: every prime 3 mod 4 occurs to an even power."""
    _check_positive(n)
    return all(e % 2 == 0 for p, e in _factor(n) if p % 4 == 3)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_odd_prime_power(q: int) -> bool:
    if not isinstance(q, int) or q < 3 or q % 2 == 0:
        return False
    return len(_factor(q)) == 1
