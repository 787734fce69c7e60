"""Integer sublattices of Z^d in canonical Hermite normal form.

Bases are row-style: pivot columns strictly increase down the rows, pivots
are positive and every entry above a pivot lies in ``[0, pivot)``.  The HNF
of a lattice is unique, so two lattices are equal iff their stored bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Vector = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a x + b y = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


class LatticeBuilder:
    """Mutable echelon basis supporting cheap one-vector insertion.

    ``rows`` maps a pivot column to the row whose leading entry sits there.
    Call :meth:`freeze` for the canonical :class:`IntLattice`.
    """

    __slots__ = ("d", "rows")

    def __init__(self, d: int, vectors: Iterable[Sequence[int]] = ()):
        self.d = d
        self.rows: dict[int, list[int]] = {}
        for v in vectors:
            self.insert(v)

    def insert(self, vec: Sequence[int]) -> bool:
        """Add ``vec`` to the span; return True if the lattice grew."""
        if len(vec) != self.d:
            raise ValueError(f"vector of length {len(vec)} in rank-{self.d} lattice")
        v = list(vec)
        grew = False
        rows = self.rows
        for j in range(self.d):
            vj = v[j]
            if not vj:
                continue
            b = rows.get(j)
            if b is None:
                if vj < 0:
                    v = [-a for a in v]
                rows[j] = v
                return True
            bj = b[j]
            if vj % bj == 0:
                q = vj // bj
                v = [a - q * c for a, c in zip(v, b)]
                continue
            g, x, y = xgcd(bj, vj)
            s, t = vj // g, bj // g
            rows[j] = [x * c + y * a for a, c in zip(v, b)]
            v = [s * c - t * a for a, c in zip(v, b)]
            grew = True
        return grew

    def contains(self, vec: Sequence[int]) -> bool:
        return _reduces_to_zero(self.rows, self.d, vec)

    def basis(self) -> list[list[int]]:
        return [self.rows[j] for j in sorted(self.rows)]

    def freeze(self) -> "IntLattice":
        cols = sorted(self.rows)
        basis = [list(self.rows[j]) for j in cols]
        for r, j in enumerate(cols):
            row = basis[r]
            if row[j] < 0:
                row[:] = [-a for a in row]
            p = row[j]
            for above in basis[:r]:
                q = above[j] // p
                if q:
                    above[:] = [a - q * c for a, c in zip(above, row)]
        for r, j in enumerate(cols):
            self.rows[j] = basis[r]
        return IntLattice(self.d, tuple(tuple(row) for row in basis))


def _reduces_to_zero(rows: Mapping[int, Sequence[int]], d: int, vec: Sequence[int]) -> bool:
    if len(vec) != d:
        raise ValueError(f"vector of length {len(vec)} in rank-{d} lattice")
    v = list(vec)
    for j in range(d):
        vj = v[j]
        if not vj:
            continue
        b = rows.get(j)
        if b is None or vj % b[j]:
            return False
        q = vj // b[j]
        v = [a - q * c for a, c in zip(v, b)]
    return True


@dataclass(frozen=True)
class IntLattice:
    """A subgroup of Z^d held by its canonical HNF basis."""

    d: int
    basis: tuple[Vector, ...] = ()

    @classmethod
    def zero(cls, d: int) -> "IntLattice":
        return cls(d, ())

    @classmethod
    def full(cls, d: int) -> "IntLattice":
        return cls(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def from_vectors(cls, d: int, vectors: Iterable[Sequence[int]]) -> "IntLattice":
        return LatticeBuilder(d, vectors).freeze()

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return _reduces_to_zero(dict(zip(self.pivots, self.basis)), self.d, v)

    __contains__ = contains

    def join(self, other: "IntLattice") -> "IntLattice":
        if self.d != other.d:
            raise ValueError(f"rank mismatch: {self.d} vs {other.d}")
        return IntLattice.from_vectors(self.d, self.basis + other.basis)

    __or__ = join

    def issubset(self, other: "IntLattice") -> bool:
        if self.d != other.d:
            raise ValueError(f"rank mismatch: {self.d} vs {other.d}")
        return all(other.contains(v) for v in self.basis)

    __le__ = issubset

    def builder(self) -> LatticeBuilder:
        b = LatticeBuilder(self.d)
        b.rows = {j: list(row) for j, row in zip(self.pivots, self.basis)}
        return b

    def to_json(self) -> dict:
        return {"d": self.d, "basis": [list(row) for row in self.basis]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "IntLattice":
        try:
            d = int(obj["d"])
            rows = [[int(a) for a in row] for row in obj.get("basis", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed lattice: {obj!r}") from exc
        lat = cls.from_vectors(d, rows)
        if [list(r) for r in lat.basis] != rows:
            raise ValueError("lattice basis is not in canonical HNF")
        return lat


def from_vectors(d: int, vectors: Iterable[Sequence[int]]) -> IntLattice:
    return IntLattice.from_vectors(d, vectors)


def contains(lattice: IntLattice, v: Sequence[int]) -> bool:
    return lattice.contains(v)


def join(a: IntLattice, b: IntLattice) -> IntLattice:
    return a.join(b)


def integer_kernel(c: Sequence[int]) -> IntLattice:
    """Basis of ``{x in Z^d : c . x = 0}``.

    Row-reduce the augmented rows ``(c_i | e_i)``; rows that end up with a
    zero first entry carry a unimodular kernel basis in their tails.
    """
    d = len(c)
    aug = LatticeBuilder(d + 1, ([c[i]] + [int(i == j) for j in range(d)] for i in range(d)))
    tails = [row[1:] for j, row in aug.rows.items() if j > 0]
    return IntLattice.from_vectors(d, tails)


def kernel_with_parity(c: Sequence[int], parity_set: Iterable[int]) -> IntLattice:
    """``{x : sum c_j x_j = 0 and sum_{j in S} x_j even}`` in canonical form.

    ``parity_set`` holds coordinate indices.  The mod-2 condition is pulled back
    onto an integer kernel basis: one odd basis vector is doubled and added to
    the other odd ones.
    """
    S = sorted(set(parity_set))
    d = len(c)
    if any(j < 0 or j >= d for j in S):
        raise ValueError("parity index out of range")
    kernel = integer_kernel(c)
    rows = [list(r) for r in kernel.basis]
    parity = [sum(r[j] for j in S) % 2 for r in rows]
    odd = [i for i, p in enumerate(parity) if p]
    if not odd:
        return kernel
    pivot = rows[odd[0]]
    out = []
    for i, r in enumerate(rows):
        if i == odd[0]:
            out.append([2 * a for a in r])
        elif parity[i]:
            out.append([a + b for a, b in zip(r, pivot)])
        else:
            out.append(r)
    return IntLattice.from_vectors(d, out)
