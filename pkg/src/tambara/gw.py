"""The Grothendieck-Witt Tambara functor of finite fields of odd characteristic.

``GW(F_{q^m})`` is ``Z + Z/2`` through (dimension, determinant class): a class
is ``(dim, det)`` with ``det = 1`` meaning the nonsquare class.  Products are
``(n, e)(m, d) = (nm, n d + m e mod 2)``.

Field degrees are tracked so that restriction, transfer and norm compose
honestly: restriction multiplies the degree ``m`` and transfer/norm divide
it.  ``q`` only labels the field.  Nothing depends on it beyond being odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Mapping

from .numtheory import binom_over_ell, is_odd_prime_power, is_sum_of_two_squares, prime_chain


class FieldMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GwClass:
    """Virtual form of dimension ``dim`` and determinant class ``alpha**det`` over F_{q^m}."""

    q: int
    m: int
    dim: int
    det: int

    def __post_init__(self):
        if self.q % 2 == 0:
            raise ValueError(f"q must be odd, got {self.q}")
        if self.m < 1:
            raise ValueError(f"field degree must be positive, got {self.m}")
        object.__setattr__(self, "det", self.det % 2)

    @classmethod
    def one(cls, q: int, m: int) -> "GwClass":
        return cls(q, m, 1, 0)

    @classmethod
    def nonsquare(cls, q: int, m: int) -> "GwClass":
        return cls(q, m, 1, 1)

    def _check(self, other: "GwClass") -> None:
        if (self.q, self.m) != (other.q, other.m):
            raise FieldMismatch(f"GW(F_{self.q}^{self.m}) vs GW(F_{other.q}^{other.m})")

    def __add__(self, other):
        if not isinstance(other, GwClass):
            return NotImplemented
        self._check(other)
        return GwClass(self.q, self.m, self.dim + other.dim, self.det + other.det)

    def __neg__(self):
        return GwClass(self.q, self.m, -self.dim, self.det)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GwClass(self.q, self.m, other * self.dim, other * self.det)
        if not isinstance(other, GwClass):
            return NotImplemented
        self._check(other)
        return GwClass(
            self.q, self.m, self.dim * other.dim, self.dim * other.det + other.dim * self.det
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GwClass":
        out = GwClass.one(self.q, self.m)
        for _ in range(e):
            out = out * self
        return out

    def zero_like(self) -> "GwClass":
        return GwClass(self.q, self.m, 0, 0)

    def __str__(self):
        return f"({self.dim}, {self.det}) in GW(F_{self.q}^{self.m})"

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "dim": self.dim, "det": self.det}

    @classmethod
    def from_json(cls, obj: Mapping) -> "GwClass":
        try:
            det = int(obj["det"])
            if det not in (0, 1):
                raise ValueError("det must be 0 or 1")
            return cls(int(obj["q"]), int(obj["m"]), int(obj["dim"]), det)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed GW class: {obj!r}") from exc


def add(x: GwClass, y: GwClass) -> GwClass:
    return x + y


def mul(x: GwClass, y: GwClass) -> GwClass:
    return x * y


def restrict(x: GwClass, m: int) -> GwClass:
    """Extend scalars from F_{q^k} to F_{q^{k m}}; the determinant survives iff m is odd."""
    if m < 1:
        raise ValueError("extension degree must be positive")
    return GwClass(x.q, x.m * m, x.dim, x.det if m % 2 else 0)


def _down(x: GwClass, m: int) -> int:
    if m < 1 or x.m % m:
        raise FieldMismatch(f"F_{x.q}^{x.m} is not a degree-{m} extension of a subfield")
    return x.m // m


def transfer(x: GwClass, m: int) -> GwClass:
    """Scharlau transfer along the trace of a degree-``m`` extension.

    tr<1> = (m-1)<1> + <alpha> and tr<beta> = m<1> for even m; for odd m the
    roles swap.  Extended additively.
    """
    k = _down(x, m)
    if m % 2 == 0:
        return GwClass(x.q, k, x.dim * m, x.dim + x.det)
    return GwClass(x.q, k, x.dim * m, x.det)


def norm_closed(x: GwClass, m: int) -> GwClass:
    """Rost norm along a degree-``m`` extension, in closed form.

    The determinant exponent is read off the table for ``m`` odd, ``m == 2``
    and even ``m > 2``; the same polynomials are used for negative dimensions.
    """
    k = _down(x, m)
    n = x.dim
    if m == 1:
        return GwClass(x.q, k, n, x.det)
    if x.det == 0:
        if m % 2:
            e = 0
        elif m == 2:
            e = (n * n - n) // 2
        else:
            e = (n**3 - n * n) // 2
    else:
        if m % 2:
            e = n
        elif m == 2:
            e = (n * n - 3 * n) // 2
        else:
            e = (n**3 - 3 * n * n) // 2
    return GwClass(x.q, k, n**m, e)


def reciprocity_cross_term(a: GwClass, b: GwClass, ell: int) -> GwClass:
    """``tr(sum_{i=1}^{ell-1} C(ell, i)/ell * a^i b^(ell-i))`` along a prime step."""
    a._check(b)
    acc = a.zero_like()
    for i in range(1, ell):
        acc = acc + binom_over_ell(ell, i) * (a**i * b ** (ell - i))
    return transfer(acc, ell)


# (det, ell) -> {dim: (dim, det) of the norm}, grown one <1> at a time
_PRIME_NORMS: dict[tuple[int, int], dict[int, tuple[int, int]]] = {}


def _prime_norm(dim: int, det: int, ell: int) -> tuple[int, int]:
    # Field-independent: computed on a dummy field of degree ell.
    top = lambda n, e: GwClass(3, ell, n, e)  # noqa: E731
    one = top(1, 0)
    n_one = GwClass(3, 1, 1, 0)
    # Norm of a unary form is the unary form of the field norm; the field norm
    # is onto, so a nonsquare generator goes to a nonsquare.
    table = _PRIME_NORMS.setdefault((det, ell), {1: (1, det)})
    if dim in table:
        return table[dim]
    step = 1 if dim > 1 else -1
    n = max(table) if step == 1 else min(table)
    value = GwClass(3, 1, *table[n])
    while n != dim:
        if step == 1:
            value = value + n_one + reciprocity_cross_term(top(n, det), one, ell)
        else:
            value = value - n_one - reciprocity_cross_term(top(n - 1, det), one, ell)
        n += step
        table[n] = (value.dim, value.det)
    return table[dim]


def norm_oracle(x: GwClass, m: int) -> GwClass:
    """Rost norm computed from unary values plus prime-step Tambara reciprocity.

    ``N(a + b) = N(a) + N(b) + tr(sum C(l,i)/l a^i b^(l-i))`` at each prime
    step ``l`` (for ``l = 2`` the sum is just ``ab``), peeling one ``<1>`` at a
    time; composite degrees go through the prime chain.  Shares nothing with
    :func:`norm_closed` except the ring operations and transfer.
    """
    k = _down(x, m)
    dim, det = x.dim, x.det
    for ell in prime_chain(m):
        dim, det = _prime_norm(dim, det, ell)
    return GwClass(x.q, k, dim, det)


# -- tau and pi ---------------------------------------------------------------

def tau_finite_field(q: int, is_square: bool) -> int:
    """Least power of two many squares summing to an element of the given class.

    Every element of a finite field is a sum of two squares.
    """
    if not is_odd_prime_power(q):
        raise ValueError(f"q must be an odd prime power, got {q}")
    return 1 if is_square else 2


def tau_rational(r) -> int:
    """tau over Q: 0 for negatives, 1 for squares, 2 when ``ab`` is a sum of two
    squares (``r = a/b`` in lowest terms), 4 otherwise (four-square theorem)."""
    r = Fraction(r)
    if r == 0:
        raise ValueError("tau is undefined at 0")
    if r < 0:
        return 0
    a, b = r.numerator, r.denominator
    if isqrt(a) ** 2 == a and isqrt(b) ** 2 == b:
        return 1
    if is_sum_of_two_squares(a * b):
        return 2
    return 4


def is_valid_tau(tau: int) -> bool:
    return tau == 0 or (tau > 0 and tau & (tau - 1) == 0)


def pi(tau: int) -> int:
    if not is_valid_tau(tau):
        raise ValueError(f"{tau} is not zero or a power of two")
    if tau == 0:
        return 0
    if tau <= 2:
        return 2
    return tau // 2
