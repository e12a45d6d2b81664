"""Basic algebras with explicit rational structure constants.

A StructureAlgebra is a finite-dimensional algebra given by a basis, a
sparse multiplication table, and a distinguished orthogonal idempotent per
edge label.  Every basis element sits in a single idempotent corner, recorded
as its (source, target) pair of edge labels; the product of x and y is
nonzero only when the target of x matches the source of y, and then lives in
the (source x, target y) corner.

build_algebra realizes the algebra of a Brauer tree on the basis of
idempotents, partial walks around the two endpoints of each edge, and one
socle element per edge.  The radical and quiver computations are generic and
are reused verbatim for endomorphism algebras of complexes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import ONE, Subspace, zero_vector
from .ribbon import BrauerTree, successor

Element = dict[int, Fraction]
BasisLabel = tuple


class StructureAlgebra:
    def __init__(
        self,
        labels: Sequence[BasisLabel],
        source: Sequence[int],
        target: Sequence[int],
        idempotent: Mapping[int, int],
        table: Mapping[tuple[int, int], tuple[tuple[int, Fraction], ...]],
    ):
        self.labels = list(labels)
        self.source = list(source)
        self.target = list(target)
        self.idempotent = dict(idempotent)
        self.table = dict(table)
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        self.edges = sorted(self.idempotent)
        self._corner: dict[tuple[int, int], list[int]] = {}
        for k in range(len(self.labels)):
            self._corner.setdefault((self.source[k], self.target[k]), []).append(k)

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def element(self, label: BasisLabel) -> Element:
        return {self.index[label]: ONE}

    def unit(self) -> Element:
        return {idx: ONE for idx in self.idempotent.values()}

    def corner_basis(self, i: int, j: int) -> list[int]:
        """Basis indices with source i and target j."""
        return self._corner.get((i, j), [])

    def multiply(self, x: Element, y: Element) -> Element:
        out: Element = {}
        table = self.table
        for a, ca in x.items():
            for b, cb in y.items():
                prod = table.get((a, b))
                if prod:
                    c = ca * cb
                    for idx, coeff in prod:
                        val = out.get(idx, 0) + c * coeff
                        if val:
                            out[idx] = val
                        else:
                            out.pop(idx, None)
        return out

    def cartan_count(self) -> list[list[int]]:
        """Corner dimensions: entry (i, j) counts basis elements from i to j."""
        n = len(self.edges)
        pos = {e: k for k, e in enumerate(self.edges)}
        mat = [[0] * n for _ in range(n)]
        for k in range(len(self.labels)):
            mat[pos[self.source[k]]][pos[self.target[k]]] += 1
        return mat

    def _trace_of_left_mult(self) -> list[Fraction]:
        """Trace of left multiplication by each basis element."""
        dim = self.dimension
        traces = [Fraction(0)] * dim
        for a in range(dim):
            tr = Fraction(0)
            for b in range(dim):
                prod = self.table.get((a, b))
                if prod:
                    for idx, coeff in prod:
                        if idx == b:
                            tr += coeff
            traces[a] = tr
        return traces

    def radical(self) -> Subspace:
        """Jacobson radical as the kernel of the trace form of the left
        regular representation (valid over the rationals)."""
        dim = self.dimension
        traces = self._trace_of_left_mult()
        gram = [zero_vector(dim) for _ in range(dim)]
        for (a, b), prod in self.table.items():
            val = Fraction(0)
            for idx, coeff in prod:
                if traces[idx]:
                    val += coeff * traces[idx]
            if val:
                gram[a][b] = val
        from .linalg import kernel

        return Subspace(dim, kernel(gram, dim))

    def _corner_project(self, rows: Sequence[Sequence[Fraction]], i: int, j: int) -> list[list[Fraction]]:
        idxs = self.corner_basis(i, j)
        out = []
        for row in rows:
            v = zero_vector(self.dimension)
            nonzero = False
            for k in idxs:
                if row[k]:
                    v[k] = row[k]
                    nonzero = True
            if nonzero:
                out.append(v)
        return out

    def quiver(self) -> list[list[int]]:
        """Arrow counts of the Gabriel quiver: entry (i, j) is the dimension
        of the (i, j) corner of rad/rad^2, i.e. dim Ext^1(S_i, S_j)."""
        rad = self.radical()
        n = len(self.edges)
        pos = {e: k for k, e in enumerate(self.edges)}
        corner_rad: dict[tuple[int, int], Subspace] = {}
        for i in self.edges:
            for j in self.edges:
                vecs = self._corner_project(rad.rows, i, j)
                corner_rad[(i, j)] = Subspace(self.dimension, vecs)
        mat = [[0] * n for _ in range(n)]
        for i in self.edges:
            for j in self.edges:
                sq_vectors: list[list[Fraction]] = []
                for k in self.edges:
                    left = corner_rad[(i, k)].rows
                    right = corner_rad[(k, j)].rows
                    for u in left:
                        xu = {p: c for p, c in enumerate(u) if c}
                        for v in right:
                            yv = {p: c for p, c in enumerate(v) if c}
                            prod = self.multiply(xu, yv)
                            if prod:
                                w = zero_vector(self.dimension)
                                for p, c in prod.items():
                                    w[p] = c
                                sq_vectors.append(w)
                sq = Subspace(self.dimension, sq_vectors)
                mat[pos[i]][pos[j]] = corner_rad[(i, j)].dim - sq.dim
        return mat

    def check_associative(self) -> None:
        """Brute-force check of associativity on all basis triples."""
        dim = self.dimension
        for a in range(dim):
            ea = {a: ONE}
            for b in range(dim):
                ab = self.multiply(ea, {b: ONE})
                eb = {b: ONE}
                for c in range(dim):
                    lhs = self.multiply(ab, {c: ONE})
                    rhs = self.multiply(ea, self.multiply(eb, {c: ONE}))
                    if lhs != rhs:
                        raise AssertionError(
                            f"associativity fails on {self.labels[a]}, "
                            f"{self.labels[b]}, {self.labels[c]}"
                        )


def multiply(a: StructureAlgebra, x: Element, y: Element) -> Element:
    return a.multiply(x, y)


def cartan_count(a: StructureAlgebra) -> list[list[int]]:
    return a.cartan_count()


def radical(a: StructureAlgebra) -> Subspace:
    return a.radical()


def quiver(a: StructureAlgebra) -> list[list[int]]:
    return a.quiver()


def _walk_target(t: BrauerTree, vid: str, edge: int, steps: int) -> int:
    cur = edge
    for _ in range(steps):
        cur = successor(t, vid, cur)
    return cur


def build_algebra(t: BrauerTree) -> StructureAlgebra:
    """The Brauer tree algebra on its combinatorial basis.

    Basis: one idempotent ('e', i) and one socle ('z', i) per edge, plus the
    proper partial walks ('p', i, v, s) around each endpoint v of i, where
    1 <= s < multiplicity(v) * valency(v).  A walk of s steps starting at i
    around v ends at the s-fold successor of i; completing the full walk
    around either endpoint gives the socle, and everything longer, or any
    product mixing walks around different vertices, is zero.
    """
    vertex_order = {v.id: k for k, v in enumerate(t.vertices)}
    labels: list[BasisLabel] = []
    source: list[int] = []
    target: list[int] = []

    for i in t.edges:
        labels.append(("e", i))
        source.append(i)
        target.append(i)
    walk_full: dict[tuple[int, str], int] = {}
    step_keys: list[tuple[int, str, int]] = []
    for i in t.edges:
        for vid in sorted(t.ends[i], key=vertex_order.get):
            full = t.multiplicity(vid) * t.valency(vid)
            walk_full[(i, vid)] = full
            for s in range(1, full):
                step_keys.append((i, vid, s))
    for i, vid, s in step_keys:
        labels.append(("p", i, vid, s))
        source.append(i)
        target.append(_walk_target(t, vid, i, s))
    for i in t.edges:
        labels.append(("z", i))
        source.append(i)
        target.append(i)

    index = {lab: k for k, lab in enumerate(labels)}
    idempotent = {i: index[("e", i)] for i in t.edges}
    table: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}

    def put(a: BasisLabel, b: BasisLabel, c: BasisLabel):
        table[(index[a], index[b])] = ((index[c], ONE),)

    for i in t.edges:
        put(("e", i), ("e", i), ("e", i))
        put(("e", i), ("z", i), ("z", i))
        put(("z", i), ("e", i), ("z", i))
    for i, vid, s in step_keys:
        j = _walk_target(t, vid, i, s)
        put(("e", i), ("p", i, vid, s), ("p", i, vid, s))
        put(("p", i, vid, s), ("e", j), ("p", i, vid, s))
        full = walk_full[(i, vid)]
        for u in range(1, full - s + 1):
            # Extending an s-step walk at i around vid by a u-step walk at j.
            if s + u < full:
                put(("p", i, vid, s), ("p", j, vid, u), ("p", i, vid, s + u))
            else:
                put(("p", i, vid, s), ("p", j, vid, u), ("z", i))

    return StructureAlgebra(labels, source, target, idempotent, table)
