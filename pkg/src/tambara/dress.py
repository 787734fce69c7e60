"""The Dress map from the cyclic Burnside functor to GW of finite fields.

For ``F_{q^N} / F_q`` with group C_N, level ``M`` (the subgroup C_M) sits over
the fixed field ``F_{q^{N/M}}`` and ``t_i`` goes to the trace form of the
degree-``i`` subextension above it.  That form has dimension ``i`` and a
nonsquare determinant exactly when ``i`` is even, hence

    sum a_i t_i  ->  (sum i a_i,  sum_{i even} a_i mod 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import gw
from .burnside import BurnsideElement, LevelError
from .lattice import IntLattice, kernel_with_parity
from .numtheory import divisor_tuple, is_odd_prime_power, is_prime


@dataclass(frozen=True)
class ExtensionSpec:
    """``F_{q^N}/F_q``, or a finite truncation of a pro-cyclic tower over F_q.

    ``shape`` is ``"finite"`` (uses ``N``), ``"Zp"`` (``p``, ``depth``: the
    quotient of order ``p**depth``) or ``"Zhat"`` (``depth = n``: the quotient of
    order ``n!``).
    """

    q: int
    shape: str = "finite"
    N: int | None = None
    p: int | None = None
    depth: int | None = None

    def __post_init__(self):
        if not is_odd_prime_power(self.q):
            raise ValueError(f"q must be an odd prime power, got {self.q}")
        if self.shape == "finite":
            if self.N is None or self.N < 1:
                raise ValueError("finite extensions need N >= 1")
        elif self.shape == "Zp":
            if self.p is None or not is_prime(self.p):
                raise ValueError("Z_p truncations need a prime p")
            if self.depth is None or self.depth < 1:
                raise ValueError("depth must be >= 1")
        elif self.shape == "Zhat":
            if self.depth is None or self.depth < 1:
                raise ValueError("depth must be >= 1")
        else:
            raise ValueError(f"unknown shape {self.shape!r}")

    @classmethod
    def finite(cls, q: int, N: int) -> "ExtensionSpec":
        return cls(q, "finite", N=N)

    @classmethod
    def zp(cls, q: int, p: int, depth: int) -> "ExtensionSpec":
        return cls(q, "Zp", p=p, depth=depth)

    @classmethod
    def zhat(cls, q: int, depth: int) -> "ExtensionSpec":
        return cls(q, "Zhat", depth=depth)

    @property
    def modulus(self) -> int:
        """Order of the finite cyclic group the computation runs in."""
        if self.shape == "finite":
            return self.N
        if self.shape == "Zp":
            return self.p**self.depth
        return factorial(self.depth)

    def levels(self) -> tuple[int, ...]:
        return divisor_tuple(self.modulus)

    def field_degree(self, M: int) -> int:
        """Degree over F_q of the field fixed by C_M."""
        N = self.modulus
        if M < 1 or N % M:
            raise LevelError(f"level {M} is not a divisor of {N}")
        return N // M


def _dress_direct(x: BurnsideElement, spec: ExtensionSpec) -> gw.GwClass:
    dim = sum(i * a for i, a in x.coeffs)
    det = sum(a for i, a in x.coeffs if i % 2 == 0)
    return gw.GwClass(spec.q, spec.field_degree(x.M), dim, det)


def _dress_by_transfers(x: BurnsideElement, spec: ExtensionSpec) -> gw.GwClass:
    base = spec.field_degree(x.M)
    out = gw.GwClass(spec.q, base, 0, 0)
    for i, a in x.coeffs:
        out = out + a * gw.transfer(gw.GwClass.one(spec.q, base * i), i)
    return out


def dress(x: BurnsideElement, spec: ExtensionSpec) -> gw.GwClass:
    """Image of ``x`` in GW of the field fixed by its level.

    Computed twice (parity formula and sum of transferred ``<1>``) and the two
    are asserted equal.
    """
    if x.N != spec.modulus:
        raise LevelError(f"element lives over C_{x.N}, extension has group C_{spec.modulus}")
    direct = _dress_direct(x, spec)
    assert direct == _dress_by_transfers(x, spec), (x, direct)
    return direct


def dress_kernel_level(spec: ExtensionSpec, M: int) -> IntLattice:
    """Kernel of the Dress map at level ``M`` as a lattice in Z^{tau(M)}."""
    spec.field_degree(M)
    divs = divisor_tuple(M)
    even = [idx for idx, i in enumerate(divs) if i % 2 == 0]
    return kernel_with_parity(list(divs), even)


def card_kernel_level(M: int) -> IntLattice:
    """``{x : card(x) = 0}`` at level ``M``, with no parity condition."""
    return kernel_with_parity(list(divisor_tuple(M)), ())
