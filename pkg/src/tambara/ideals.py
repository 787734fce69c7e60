"""Tambara ideals of the Burnside functor on C_N and the saturation engine.

An ideal is stored level by level: for each ``M | N`` a sublattice of
``Z^{tau(M)}`` in the basis ``t_i`` (``i | M`` ascending).  A family of
lattices is an ideal when every level is closed under multiplication by the
``t_j`` and the family is closed under restriction, transfer and norm.  (The
norm of zero is zero in this functor, so the norm condition needs no
correction term.)

Saturation only pushes basis vectors.  Multiplicativity and prime-index
reciprocity make that enough for norms: ``N(a + b) - N(a) - N(b)`` is a
transfer of monomials each containing ``a``, and ``N(n v) = N(n) N(v)``.
Every result is checked against the full closure conditions anyway.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import burnside as bs
from .burnside import BurnsideElement, LevelError
from .dress import ExtensionSpec, card_kernel_level, dress_kernel_level
from .lattice import IntLattice, LatticeBuilder
from .numtheory import divisor_tuple, is_prime, prime_factors


@dataclass(frozen=True)
class TambaraIdeal:
    N: int
    levels: Mapping[int, IntLattice] = field(default_factory=dict)

    def __post_init__(self):
        given = dict(self.levels)
        levels = {}
        for M in divisor_tuple(self.N):
            d = len(divisor_tuple(M))
            lat = given.pop(M, None)
            if lat is None:
                lat = IntLattice.zero(d)
            if lat.d != d:
                raise ValueError(f"level {M} needs rank {d}, got {lat.d}")
            levels[M] = lat
        if given:
            raise LevelError(f"levels {sorted(given)} do not divide {self.N}")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def zero(cls, N: int) -> "TambaraIdeal":
        return cls(N)

    def level(self, M: int) -> IntLattice:
        try:
            return self.levels[M]
        except KeyError:
            raise LevelError(f"{M} does not divide {self.N}") from None

    def member(self, M: int, x: BurnsideElement) -> bool:
        if x.M != M or x.N != self.N:
            raise LevelError(f"element at ({x.N}, {x.M}) queried at level {M} of C_{self.N}")
        return self.level(M).contains(x.vector())

    def __eq__(self, other):
        if not isinstance(other, TambaraIdeal):
            return NotImplemented
        return self.N == other.N and self.levels == other.levels

    def __hash__(self):
        return hash((self.N, tuple(self.levels.items())))

    def issubset(self, other: "TambaraIdeal") -> bool:
        _same_modulus(self, other)
        return all(self.levels[M] <= other.levels[M] for M in self.levels)

    def rank_profile(self) -> dict[int, int]:
        return {M: lat.rank for M, lat in self.levels.items()}

    def to_json(self) -> dict:
        return {"N": self.N, "levels": {str(M): lat.to_json() for M, lat in self.levels.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "TambaraIdeal":
        try:
            N = int(obj["N"])
            raw = obj["levels"]
            levels = {int(M): IntLattice.from_json(lat) for M, lat in raw.items()}
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise ValueError(f"malformed ideal: {exc}") from exc
        return cls(N, levels)


def _same_modulus(a: TambaraIdeal, b: TambaraIdeal) -> None:
    if a.N != b.N:
        raise LevelError(f"ideals over C_{a.N} and C_{b.N}")


def member(ideal: TambaraIdeal, M: int, x: BurnsideElement) -> bool:
    return ideal.member(M, x)


def equals(a: TambaraIdeal, b: TambaraIdeal) -> bool:
    _same_modulus(a, b)
    return a.levels == b.levels


# -- closure -----------------------------------------------------------------

@dataclass(frozen=True)
class ClosureViolation:
    rule: str  # "mul", "res", "tr" or "norm"
    source: int
    target: int
    vector: tuple[int, ...]

    def __str__(self):
        return f"{self.rule} {self.source}->{self.target} of {list(self.vector)} escapes the ideal"


def closure_violations(ideal: TambaraIdeal, all_pairs: bool = True) -> list[ClosureViolation]:
    """Every way the family fails to be a Tambara ideal (empty list if it is one).

    With ``all_pairs`` every divisor pair ``K | M`` is tested, not only prime
    steps, and composite norms are taken in one go rather than as a chain.
    """
    N = ideal.N
    out = []
    divs = divisor_tuple(N)
    for M in divs:
        lat = ideal.levels[M]
        for v in lat.basis:
            for j in range(len(divisor_tuple(M))):
                w = bs.mul_basis_vec(M, j, list(v))
                if not lat.contains(w):
                    out.append(ClosureViolation("mul", M, M, v))
    for K in divs:
        for M in divs:
            if M == K or M % K:
                continue
            k = M // K
            if not all_pairs and not is_prime(k):
                continue
            low, high = ideal.levels[K], ideal.levels[M]
            for v in high.basis:
                if not low.contains(bs.restrict_vec(M, K, list(v))):
                    out.append(ClosureViolation("res", M, K, v))
            for v in low.basis:
                if not high.contains(bs.transfer_vec(K, M, list(v))):
                    out.append(ClosureViolation("tr", K, M, v))
                if not high.contains(bs.norm_vec(K, M, list(v), direct=True)):
                    out.append(ClosureViolation("norm", K, M, v))
    return out


def check_closure(ideal: TambaraIdeal) -> None:
    bad = closure_violations(ideal)
    if bad:
        raise AssertionError("not a Tambara ideal: " + "; ".join(map(str, bad[:5])))


# -- saturation --------------------------------------------------------------

def _close_under_mul(M: int, b: LatticeBuilder) -> bool:
    grew_any = False
    tau = len(divisor_tuple(M))
    while True:
        grew = False
        for v in b.basis():
            v = list(v)
            for j in range(1, tau):
                if b.insert(bs.mul_basis_vec(M, j, v)):
                    grew = True
        if not grew:
            return grew_any
        grew_any = True
        b.freeze()


def _coerce_generators(N: int, gens: Iterable) -> list[BurnsideElement]:
    out = []
    for g in gens:
        if isinstance(g, tuple) and len(g) == 2 and isinstance(g[1], BurnsideElement):
            M, g = g
            if g.M != M:
                raise LevelError(f"generator {g} is stated at level {M} but lives at {g.M}")
        if not isinstance(g, BurnsideElement):
            raise TypeError(f"expected a BurnsideElement, got {type(g).__name__}")
        if g.N != N:
            raise LevelError(f"generator over C_{g.N} used in C_{N}")
        out.append(g)
    return out


def saturate(N: int, gens: Iterable, check: bool = True) -> TambaraIdeal:
    """The Tambara ideal of the C_N Burnside functor generated by ``gens``.

    ``gens`` holds BurnsideElements (or ``(M, element)`` pairs).  The engine
    sweeps restrictions downward and transfers/norms upward along prime steps,
    closing each level under multiplication, until nothing grows.
    """
    divs = divisor_tuple(N)
    builders = {M: LatticeBuilder(len(divisor_tuple(M))) for M in divs}
    for g in _coerce_generators(N, gens):
        builders[g.M].insert(g.vector())
    primes = prime_factors(N)

    changed = True
    while changed:
        changed = False
        for M in divs:
            if _close_under_mul(M, builders[M]):
                changed = True
            builders[M].freeze()
        # restriction sweep, top down so one pass reaches the bottom
        for M in reversed(divs):
            basis = [list(v) for v in builders[M].basis()]
            for p in primes:
                if M % p == 0:
                    K = M // p
                    for v in basis:
                        if builders[K].insert(bs.restrict_vec(M, K, v)):
                            changed = True
        for K in divs:
            _close_under_mul(K, builders[K])
            builders[K].freeze()
            basis = [list(v) for v in builders[K].basis()]
            for p in primes:
                M = K * p
                if N % M:
                    continue
                for v in basis:
                    if builders[M].insert(bs.transfer_vec(K, M, v)):
                        changed = True
                    if builders[M].insert(bs.norm_step_vec(K, p, v)):
                        changed = True
    ideal = TambaraIdeal(N, {M: b.freeze() for M, b in builders.items()})
    if check:
        check_closure(ideal)
    return ideal


# -- ideals known in closed form ---------------------------------------------

def trace_ideal_finite_field(spec: ExtensionSpec, check: bool = True) -> TambaraIdeal:
    """Kernel of the Dress map for the extension (or truncation) ``spec``."""
    N = spec.modulus
    ideal = TambaraIdeal(N, {M: dress_kernel_level(spec, M) for M in divisor_tuple(N)})
    if check:
        check_closure(ideal)
    return ideal


def card_kernel_ideal(N: int) -> TambaraIdeal:
    return TambaraIdeal(N, {M: card_kernel_level(M) for M in divisor_tuple(N)})


def ideal_from_levels(N: int, levels: Mapping[int, Iterable[BurnsideElement]]) -> TambaraIdeal:
    """Family spanned level-wise by the given elements (no closure applied)."""
    out = {}
    for M, elems in levels.items():
        out[M] = IntLattice.from_vectors(len(divisor_tuple(M)), [e.vector() for e in elems])
    return TambaraIdeal(N, out)


def witness(a: IntLattice, b: IntLattice) -> tuple[int, ...] | None:
    """A basis vector of one lattice missing from the other, or None if equal."""
    for v in a.basis:
        if not b.contains(v):
            return v
    for v in b.basis:
        if not a.contains(v):
            return v
    return None
