"""Exact rational linear algebra: reduced echelon forms, kernels, subspaces.

Everything works over ``fractions.Fraction``; no floating point anywhere.
Pivoting is deterministic (leftmost column, rows in given order), so every
echelon form and every extracted basis is reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = list[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values: Iterable) -> Vector:
    return [x if isinstance(x, Fraction) else Fraction(x) for x in values]


def zero_vector(length: int) -> Vector:
    return [ZERO] * length


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[int], list[Vector]]:
    """Reduced row echelon form. Returns (pivot columns, nonzero rows)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        row = mat[r]
        if row[c] != 1:
            inv = ONE / row[c]
            for j in range(c, ncols):
                if row[j]:
                    row[j] *= inv
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                other = mat[i]
                for j in range(c, ncols):
                    if row[j]:
                        other[j] -= f * row[j]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return pivots, mat[:r]


def kernel(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    pivots, red = rref(rows)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zero_vector(ncols)
        v[free] = ONE
        for k, pc in enumerate(pivots):
            v[pc] = -red[k][free]
        basis.append(v)
    return basis


class Subspace:
    """A subspace of Q^ambient held as canonical reduced-echelon rows."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient: int, vectors: Sequence[Sequence[Fraction]] = ()):
        self.ambient = ambient
        pivots, rows = rref(vectors)
        self.pivots = pivots
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence[Fraction]) -> Vector:
        """Remainder of ``vector`` after elimination against this subspace."""
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                for j in range(p, self.ambient):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vector))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


class TaggedEchelon:
    """Growable echelon basis whose rows carry tags.

    Reduction tracks the coefficient used on every tagged row, which is how
    compositions get re-expressed in a chosen representative basis.
    """

    __slots__ = ("entries",)

    def __init__(self):
        self.entries: list[tuple[int, Vector, object]] = []  # (pivot, row, tag)

    def reduce(self, vector: Sequence[Fraction]) -> tuple[dict, Vector]:
        v = list(vector)
        coeffs: dict = {}
        for pivot, row, tag in self.entries:
            f = v[pivot]
            if f:
                c = f / row[pivot]
                for j in range(pivot, len(v)):
                    if row[j]:
                        v[j] -= c * row[j]
                if tag is not None:
                    coeffs[tag] = coeffs.get(tag, ZERO) + c
        return coeffs, v

    def insert(self, vector: Sequence[Fraction], tag: object, normalize: bool = True):
        """Insert a vector already reduced against the current rows."""
        v = list(vector)
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            raise ValueError("cannot insert the zero vector")
        if normalize and v[pivot] != 1:
            inv = ONE / v[pivot]
            v = [x * inv if x else x for x in v]
        self.entries.append((pivot, v, tag))
        self.entries.sort(key=lambda e: e[0])
        return v
