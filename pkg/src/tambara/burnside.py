"""The Burnside Tambara functor of a cyclic group C_N.

Level ``M`` (for ``M | N``) is the Burnside ring A(C_M).  Its additive basis is
``t_k`` for ``k | M``: the transitive C_M-set of cardinality ``k``.  An element
is stored sparsely as ``{k: a_k}``; the dense coordinate order used by
lattices is ``divisors(M)`` ascending.

Structure maps between levels ``K | M`` with ``k = M // K``:

* multiplication  ``t_a * t_b = gcd(a, b) * t_lcm(a, b)``
* restriction     ``t_i -> gcd(i, k) * t_{i / gcd(i, k)}``
* transfer        ``t_i -> t_{i k}``
* norm            the C(i) recursion over divisors of ``M`` (see :func:`norm`)

Conjugations are trivial for cyclic groups and are not modelled.  Truncated
pro-cyclic groups (Z_p, Z-hat) reuse the same element type: a truncation is
just the finite quotient C_T with ``T`` the truncation bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from .numtheory import divisor_tuple, is_prime, prime_chain


class LevelError(ValueError):
    """Raised when an element is used at a level it does not live at."""


class IntegralityError(ArithmeticError):
    """C(i) was not divisible by i inside a norm computation.

    This never happens for correct input; seeing it means a defect.
    """


@dataclass(frozen=True)
class Level:
    N: int
    M: int

    def __post_init__(self):
        if self.N < 1 or self.M < 1 or self.N % self.M:
            raise LevelError(f"level M={self.M} does not divide N={self.N}")

    @property
    def divisors(self) -> tuple[int, ...]:
        return divisor_tuple(self.M)

    @property
    def rank(self) -> int:
        return len(divisor_tuple(self.M))


# -- cached index tables ------------------------------------------------------

@lru_cache(maxsize=None)
def _index(M: int) -> dict[int, int]:
    return {d: i for i, d in enumerate(divisor_tuple(M))}


@lru_cache(maxsize=None)
def _mul_table(M: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    divs = divisor_tuple(M)
    idx = _index(M)
    return tuple(
        tuple((gcd(a, b), idx[a * b // gcd(a, b)]) for b in divs) for a in divs
    )


@lru_cache(maxsize=None)
def _restrict_table(M: int, K: int) -> tuple[tuple[int, int], ...]:
    k = M // K
    idx = _index(K)
    out = []
    for i in divisor_tuple(M):
        d = gcd(i, k)
        out.append((d, idx[i // d]))
    return tuple(out)


@lru_cache(maxsize=None)
def _transfer_table(K: int, M: int) -> tuple[int, ...]:
    k = M // K
    idx = _index(M)
    return tuple(idx[i * k] for i in divisor_tuple(K))


@lru_cache(maxsize=None)
def _norm_table(K: int, k: int):
    """Per divisor i of M = K k: (i, gcd(i, k), index of lcm(i,k)/k in divisors(K),
    indices of the proper divisors of i in divisors(M))."""
    M = K * k
    idx_M = _index(M)
    idx_K = _index(K)
    rows = []
    for i in divisor_tuple(M):
        g = gcd(i, k)
        r = i // g  # == lcm(i, k) // k, always a divisor of K
        proper = tuple(idx_M[j] for j in divisor_tuple(i) if j < i)
        rows.append((i, g, idx_K[r], proper))
    return tuple(rows)


@lru_cache(maxsize=None)
def _mark_table(K: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each r | K, the pairs (index of j, j) over j | r."""
    idx = _index(K)
    return tuple(tuple((idx[j], j) for j in divisor_tuple(r)) for r in divisor_tuple(K))


# -- dense vector kernels (used directly by the saturation engine) ------------

def mul_vec(M: int, u: list[int], v: list[int]) -> list[int]:
    table = _mul_table(M)
    out = [0] * len(u)
    for a, ua in enumerate(u):
        if not ua:
            continue
        row = table[a]
        for b, vb in enumerate(v):
            if vb:
                g, c = row[b]
                out[c] += g * ua * vb
    return out


def mul_basis_vec(M: int, j: int, v: list[int]) -> list[int]:
    """``t_j * v`` where ``j`` is a divisor index."""
    row = _mul_table(M)[j]
    out = [0] * len(v)
    for b, vb in enumerate(v):
        if vb:
            g, c = row[b]
            out[c] += g * vb
    return out


def restrict_vec(M: int, K: int, v: list[int]) -> list[int]:
    out = [0] * len(divisor_tuple(K))
    for (d, c), vb in zip(_restrict_table(M, K), v):
        if vb:
            out[c] += d * vb
    return out


def transfer_vec(K: int, M: int, v: list[int]) -> list[int]:
    out = [0] * len(divisor_tuple(M))
    for c, va in zip(_transfer_table(K, M), v):
        out[c] += va
    return out


def marks_vec(K: int, v: list[int]) -> list[int]:
    """Fixed-point counts: entry r is sum_{j | r} j a_j (the mark at the index-r subgroup)."""
    return [sum(j * v[p] for p, j in row) for row in _mark_table(K)]


def norm_step_vec(K: int, k: int, v: list[int]) -> list[int]:
    """Norm from level K to level K k by the C(i) recursion, for any k >= 1."""
    if k == 1:
        return list(v)
    phi = marks_vec(K, v)
    C: list[int] = []
    out: list[int] = []
    for i, g, r, proper in _norm_table(K, k):
        c = phi[r] ** g
        for p in proper:
            c -= C[p]
        q, rem = divmod(c, i)
        if rem:
            raise IntegralityError(f"C({i}) = {c} is not divisible by {i} (K={K}, k={k})")
        C.append(c)
        out.append(q)
    return out


def norm_vec(K: int, M: int, v: list[int], direct: bool = False) -> list[int]:
    k = M // K
    if direct:
        return norm_step_vec(K, k, v)
    level = K
    for ell in prime_chain(k):
        v = norm_step_vec(level, ell, v)
        level *= ell
    return v


# -- the element type --------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:\*\s*)?(t_?\{?(\d+)\}?)?")


@dataclass(frozen=True)
class BurnsideElement:
    """``sum a_i t_i`` at level ``M`` of the C_N functor.

    ``coeffs`` may be given as a mapping or pairs; it is stored as a sorted
    tuple of ``(divisor, coefficient)`` with zeros dropped, so ``==`` is
    structural equality.
    """

    N: int
    M: int
    coeffs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        Level(self.N, self.M)
        raw = self.coeffs.items() if isinstance(self.coeffs, Mapping) else self.coeffs
        acc: dict[int, int] = {}
        for k, a in raw:
            k, a = int(k), int(a)
            if k < 1 or self.M % k:
                raise LevelError(f"t_{k} does not exist at level {self.M}")
            acc[k] = acc.get(k, 0) + a
        object.__setattr__(self, "coeffs", tuple(sorted((k, a) for k, a in acc.items() if a)))

    # constructors
    @classmethod
    def zero(cls, N: int, M: int) -> "BurnsideElement":
        return cls(N, M)

    @classmethod
    def const(cls, N: int, M: int, c: int) -> "BurnsideElement":
        return cls(N, M, ((1, c),))

    @classmethod
    def t(cls, N: int, M: int, k: int, coeff: int = 1) -> "BurnsideElement":
        return cls(N, M, ((k, coeff),))

    @classmethod
    def from_vector(cls, N: int, M: int, vec: Iterable[int]) -> "BurnsideElement":
        vec = list(vec)
        divs = divisor_tuple(M)
        if len(vec) != len(divs):
            raise LevelError(f"vector of length {len(vec)} at level {M} (rank {len(divs)})")
        return cls(N, M, tuple(zip(divs, vec)))

    @classmethod
    def parse(cls, N: int, M: int, text: str) -> "BurnsideElement":
        """Parse strings like ``"3t_9 - 8t_3 - 3"`` or ``"t4 - t2 - 2"``."""
        if re.search(r"\d\s+\d", text):
            raise ValueError(f"cannot parse element {text!r}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty element")
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse element {text!r} at position {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing operator in {text!r} at position {pos}")
            coeff = int(m.group(2)) if m.group(2) else 1
            k = int(m.group(4)) if m.group(3) else 1
            terms[k] = terms.get(k, 0) + sign * coeff
            pos = m.end()
        return cls(N, M, terms)

    # views
    @property
    def level(self) -> Level:
        return Level(self.N, self.M)

    def coeff(self, k: int) -> int:
        return dict(self.coeffs).get(k, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def vector(self) -> list[int]:
        d = dict(self.coeffs)
        return [d.get(k, 0) for k in divisor_tuple(self.M)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same_level(self, other: "BurnsideElement") -> None:
        if (self.N, self.M) != (other.N, other.M):
            raise LevelError(
                f"level mismatch: ({self.N}, {self.M}) vs ({other.N}, {other.M})"
            )

    # arithmetic
    def __add__(self, other):
        if isinstance(other, int):
            other = BurnsideElement.const(self.N, self.M, other)
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        self._same_level(other)
        return BurnsideElement(self.N, self.M, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return BurnsideElement(self.N, self.M, tuple((k, -a) for k, a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = BurnsideElement.const(self.N, self.M, other)
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(self.N, self.M, tuple((k, a * other) for k, a in self.coeffs))
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = BurnsideElement.const(self.N, self.M, 1)
        for _ in range(e):
            out = out * self
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, a in reversed(self.coeffs):
            mag = abs(a)
            if k == 1:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + f"t_{k}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # structure-map shortcuts
    def restrict(self, K: int) -> "BurnsideElement":
        return restrict(self, K)

    def transfer(self, M: int) -> "BurnsideElement":
        return transfer(self, M)

    def norm(self, M: int, direct: bool = False) -> "BurnsideElement":
        return norm(self, M, direct=direct)

    def card(self) -> int:
        return card(self)

    # JSON
    def to_json(self) -> dict:
        return {"N": self.N, "M": self.M, "coeffs": {str(k): a for k, a in self.coeffs}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "BurnsideElement":
        try:
            N, M, coeffs = int(obj["N"]), int(obj["M"]), obj.get("coeffs", {})
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed Burnside element: {obj!r}") from exc
        if not isinstance(coeffs, Mapping):
            raise ValueError("coeffs must be an object keyed by divisor")
        return cls(N, M, tuple((int(k), int(a)) for k, a in coeffs.items()))


# -- structure maps ----------------------------------------------------------

def mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    x._same_level(y)
    return BurnsideElement.from_vector(x.N, x.M, mul_vec(x.M, x.vector(), y.vector()))


def restrict(y: BurnsideElement, K: int) -> BurnsideElement:
    """Restrict from level ``y.M`` down to level ``K`` (``K | M``)."""
    if K < 1 or y.M % K:
        raise LevelError(f"cannot restrict from level {y.M} to {K}")
    return BurnsideElement.from_vector(y.N, K, restrict_vec(y.M, K, y.vector()))


def _check_up(x: BurnsideElement, M: int) -> None:
    if M < 1 or M % x.M or x.N % M:
        raise LevelError(f"need {x.M} | {M} | {x.N}")


def transfer(x: BurnsideElement, M: int) -> BurnsideElement:
    """Induce from level ``x.M`` up to level ``M``."""
    _check_up(x, M)
    return BurnsideElement.from_vector(x.N, M, transfer_vec(x.M, M, x.vector()))


def norm(x: BurnsideElement, M: int, direct: bool = False) -> BurnsideElement:
    """Multiplicative induction ``Map_{C_K}(C_M, -)`` from level ``K = x.M`` to ``M``.

    With ``k = M / K`` the result is ``sum_{i | M} C(i)/i t_i`` where

        C(i) = (sum_{j | lcm(i,k)/k} j a_j) ** gcd(i, k) - sum_{j | i, j < i} C(j).

    By default composite indices are handled as a chain of prime-index steps;
    ``direct=True`` applies the recursion once with the full index instead.
    Both agree (norms compose), which the tests check.
    """
    _check_up(x, M)
    return BurnsideElement.from_vector(x.N, M, norm_vec(x.M, M, x.vector(), direct=direct))


def card(x: BurnsideElement) -> int:
    return sum(k * a for k, a in x.coeffs)


def inflate(x: BurnsideElement, factor: int) -> BurnsideElement:
    """Embed a truncation-``N`` element into truncation ``N * factor``.

    A C_N-set pulled back along C_{N f} -> C_N keeps its orbit sizes, and the
    level of the subgroup it lives over scales by ``f``.
    """
    if factor < 1:
        raise ValueError("inflation factor must be positive")
    return BurnsideElement(x.N * factor, x.M * factor, x.coeffs)


@dataclass(frozen=True)
class ProCyclicLevel:
    """A level of a truncated pro-cyclic group (Z_p or Z-hat).

    ``truncation`` is the order of the finite quotient computations run in,
    ``index`` the level inside it.  Nothing infinite is ever built.
    """

    kind: str
    index: int
    truncation: int
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Zp":
            if self.p is None or not is_prime(self.p):
                raise LevelError("Z_p levels need a prime p")
            for n in (self.index, self.truncation):
                m = n
                while m % self.p == 0:
                    m //= self.p
                if m != 1:
                    raise LevelError(f"{n} is not a power of {self.p}")
            if self.index > self.truncation:
                raise LevelError("index exceeds truncation")
        elif self.kind == "Zhat":
            if self.truncation % self.index:
                raise LevelError("index must divide truncation")
        else:
            raise LevelError(f"unknown pro-cyclic kind {self.kind!r}")

    @property
    def level(self) -> Level:
        return Level(self.truncation, self.index)

    def element(self, coeffs) -> BurnsideElement:
        return BurnsideElement(self.truncation, self.index, coeffs)
