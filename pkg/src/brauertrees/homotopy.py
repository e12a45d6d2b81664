"""Two-term complexes of projectives and their homotopy-category Hom spaces.

Complexes live in degrees 0 and 1 over a StructureAlgebra.  A morphism
P_b -> P_a of projective right modules is an algebra element in the (a, b)
corner acting by left multiplication, so matrices of such elements (rows
indexed by the codomain summands) compose by ordinary matrix product.  Chain
maps, null-homotopic maps and their quotients are computed by exact linear
algebra; the endomorphism algebra of a list of complexes is assembled from
deterministic representatives of the hom classes and feeds back into the
generic Cartan/radical/quiver machinery.

or_complex builds the Okuyama-Rickard complex of a subset of the edges: a
stalk P_i for members, and the minimal projective presentation of
P_i / (part of P_i generated through the subset's idempotents) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import Element, StructureAlgebra
from .linalg import ONE, Subspace, TaggedEchelon, kernel, zero_vector
from .ribbon import BrauerTree, cartan_formula, successor

Matrix = list[list[Element]]


class NotClosed(RuntimeError):
    """A composite failed to reduce in the representative basis."""


@dataclass
class TwoTermComplex:
    """Projective summand labels in degrees 0 and 1 with the differential.

    ``diff[t][s]`` is the component P_{deg0[s]} -> P_{deg1[t]}, an algebra
    element in the (deg1[t], deg0[s]) corner.
    """

    algebra: StructureAlgebra
    deg0: tuple[int, ...]
    deg1: tuple[int, ...]
    diff: Matrix

    def __post_init__(self):
        assert len(self.diff) == len(self.deg1)
        for t, row in enumerate(self.diff):
            assert len(row) == len(self.deg0)
            for s, entry in enumerate(row):
                for idx in entry:
                    assert self.algebra.source[idx] == self.deg1[t]
                    assert self.algebra.target[idx] == self.deg0[s]

    def is_stalk(self) -> bool:
        return not self.deg0 or not self.deg1


def stalk(algebra: StructureAlgebra, edge: int, degree: int = 0) -> TwoTermComplex:
    if degree == 0:
        return TwoTermComplex(algebra, (edge,), (), [])
    return TwoTermComplex(algebra, (), (edge,), [[]])


def _add_into(acc: Element, extra: Element) -> None:
    for idx, val in extra.items():
        s = acc.get(idx, 0) + val
        if s:
            acc[idx] = s
        else:
            acc.pop(idx, None)


def _mat_mul(
    algebra: StructureAlgebra,
    a: Matrix,
    b: Matrix,
    rows: int,
    inner: int,
    cols: int,
) -> Matrix:
    out: Matrix = [[{} for _ in range(cols)] for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            acc: Element = {}
            for k in range(inner):
                _add_into(acc, algebra.multiply(a[r][k], b[k][c]))
            out[r][c] = acc
    return out


def _element_vector(algebra: StructureAlgebra, el: Element) -> list[Fraction]:
    v = zero_vector(algebra.dimension)
    for idx, c in el.items():
        v[idx] = c
    return v


def _corner_restrict(vector: Sequence[Fraction], idxs: Sequence[int]) -> list[Fraction] | None:
    out = zero_vector(len(vector))
    keep = False
    for k in idxs:
        if vector[k]:
            out[k] = vector[k]
            keep = True
    return out if keep else None


def or_complex(algebra: StructureAlgebra, e0: Iterable[int]) -> list[TwoTermComplex]:
    """Okuyama-Rickard complexes, one per edge, for the subset ``e0``.

    Edges in e0 become stalks P_i in degree 0.  For the rest, the submodule
    of P_i spanned by everything factoring through an e0 idempotent gets a
    minimal cover: one projective per generator of its top, the generators
    themselves forming the differential into P_i.
    """
    e0 = set(e0)
    rad = algebra.radical()
    dim = algebra.dimension
    complexes = []
    for i in algebra.edges:
        if i in e0:
            complexes.append(stalk(algebra, i, degree=0))
            continue
        generators = []
        for j in sorted(e0):
            for a_idx in algebra.corner_basis(i, j):
                for b_idx in range(dim):
                    if algebra.source[b_idx] != j:
                        continue
                    prod = algebra.multiply({a_idx: ONE}, {b_idx: ONE})
                    if prod:
                        generators.append(_element_vector(algebra, prod))
        submodule = Subspace(dim, generators)
        nrad_vecs = []
        for row in submodule.rows:
            x = {p: c for p, c in enumerate(row) if c}
            for rrow in rad.rows:
                y = {p: c for p, c in enumerate(rrow) if c}
                prod = algebra.multiply(x, y)
                if prod:
                    nrad_vecs.append(_element_vector(algebra, prod))
        nrad = Subspace(dim, nrad_vecs)

        cover_targets: list[int] = []
        diff_entries: list[Element] = []
        for c in algebra.edges:
            idxs = algebra.corner_basis(i, c)
            if not idxs:
                continue
            ech = TaggedEchelon()
            for row in nrad.rows:
                v = _corner_restrict(row, idxs)
                if v is not None:
                    _, rem = ech.reduce(v)
                    if any(rem):
                        ech.insert(rem, None)
            for row in submodule.rows:
                v = _corner_restrict(row, idxs)
                if v is None:
                    continue
                _, rem = ech.reduce(v)
                if any(rem):
                    stored = ech.insert(rem, None)
                    cover_targets.append(c)
                    diff_entries.append({p: x for p, x in enumerate(stored) if x})
        complexes.append(
            TwoTermComplex(algebra, tuple(cover_targets), (i,), [diff_entries])
        )
    return complexes


@dataclass
class _Ambient:
    """Coordinate system for the maps of one (source, target, shift) triple."""

    slots: list[tuple[int, int, int, int]]  # (component, row, col, basis index)
    shapes: list[tuple[tuple[int, ...], tuple[int, ...]]]  # (row labels, col labels)

    @property
    def dim(self) -> int:
        return len(self.slots)


def _components(src: TwoTermComplex, tgt: TwoTermComplex, k: int):
    if k == 0:
        return [(tgt.deg0, src.deg0), (tgt.deg1, src.deg1)]
    if k == 1:
        return [(tgt.deg1, src.deg0)]
    if k == -1:
        return [(tgt.deg0, src.deg1)]
    raise ValueError("only shifts -1, 0, 1 carry nonzero maps between two-term complexes")


def _ambient(src: TwoTermComplex, tgt: TwoTermComplex, k: int) -> _Ambient:
    algebra = src.algebra
    slots = []
    shapes = []
    for comp, (rows, cols) in enumerate(_components(src, tgt, k)):
        shapes.append((tuple(rows), tuple(cols)))
        for r, rlab in enumerate(rows):
            for c, clab in enumerate(cols):
                for idx in algebra.corner_basis(rlab, clab):
                    slots.append((comp, r, c, idx))
    return _Ambient(slots, shapes)


def _flatten(amb: _Ambient, matrices: Sequence[Matrix]) -> list[Fraction]:
    v = zero_vector(amb.dim)
    for pos, (comp, r, c, idx) in enumerate(amb.slots):
        val = matrices[comp][r][c].get(idx)
        if val:
            v[pos] = val
    return v


def _unflatten(amb: _Ambient, vector: Sequence[Fraction]) -> list[Matrix]:
    mats: list[Matrix] = [[[{} for _ in cols] for _ in rows] for rows, cols in amb.shapes]
    for pos, (comp, r, c, idx) in enumerate(amb.slots):
        if vector[pos]:
            mats[comp][r][c][idx] = vector[pos]
    return mats


def _zero_matrix(rows: int, cols: int) -> Matrix:
    return [[{} for _ in range(cols)] for _ in range(rows)]


def _flatten_equation(algebra: StructureAlgebra, mat: Matrix, rows_lab, cols_lab) -> list[Fraction]:
    out: list[Fraction] = []
    for r, rlab in enumerate(rows_lab):
        for c, clab in enumerate(cols_lab):
            entry = mat[r][c]
            for idx in algebra.corner_basis(rlab, clab):
                out.append(entry.get(idx, Fraction(0)))
    return out


def chain_map_space(src: TwoTermComplex, tgt: TwoTermComplex, k: int) -> Subspace:
    """All degree-k chain maps src -> tgt in the component coordinates.

    Shift 1 is unconstrained; shift 0 must commute with the differentials;
    shift -1 must be annihilated by them on both sides.
    """
    algebra = src.algebra
    amb = _ambient(src, tgt, k)
    if amb.dim == 0:
        return Subspace(0, [])
    if k == 1:
        full = [[ONE if q == p else Fraction(0) for q in range(amb.dim)] for p in range(amb.dim)]
        return Subspace(amb.dim, full)

    columns: list[list[Fraction]] = []
    for pos in range(amb.dim):
        unit = zero_vector(amb.dim)
        unit[pos] = ONE
        mats = _unflatten(amb, unit)
        if k == 0:
            f0, f1 = mats
            lhs = _mat_mul(algebra, tgt.diff, f0, len(tgt.deg1), len(tgt.deg0), len(src.deg0))
            rhs = _mat_mul(algebra, f1, src.diff, len(tgt.deg1), len(src.deg1), len(src.deg0))
            for r in range(len(tgt.deg1)):
                for c in range(len(src.deg0)):
                    _add_into(lhs[r][c], {idx: -v for idx, v in rhs[r][c].items()})
            columns.append(_flatten_equation(algebra, lhs, tgt.deg1, src.deg0))
        else:  # k == -1
            (f,) = mats
            left = _mat_mul(algebra, f, src.diff, len(tgt.deg0), len(src.deg1), len(src.deg0))
            right = _mat_mul(algebra, tgt.diff, f, len(tgt.deg1), len(tgt.deg0), len(src.deg1))
            columns.append(
                _flatten_equation(algebra, left, tgt.deg0, src.deg0)
                + _flatten_equation(algebra, right, tgt.deg1, src.deg1)
            )

    n_eq = len(columns[0])
    rows = [[columns[p][q] for p in range(amb.dim)] for q in range(n_eq)]
    return Subspace(amb.dim, kernel(rows, amb.dim))


def homotopy_trivial_space(src: TwoTermComplex, tgt: TwoTermComplex, k: int) -> Subspace:
    """Null-homotopic degree-k maps inside the chain-map coordinates."""
    algebra = src.algebra
    amb = _ambient(src, tgt, k)
    if amb.dim == 0 or k == -1:
        return Subspace(amb.dim, [])

    vectors: list[list[Fraction]] = []
    if k == 0:
        # Homotopies h : src degree 1 -> tgt degree 0 give (h after d, d after h).
        for r, rlab in enumerate(tgt.deg0):
            for c, clab in enumerate(src.deg1):
                for idx in algebra.corner_basis(rlab, clab):
                    h = _zero_matrix(len(tgt.deg0), len(src.deg1))
                    h[r][c] = {idx: ONE}
                    f0 = _mat_mul(algebra, h, src.diff, len(tgt.deg0), len(src.deg1), len(src.deg0))
                    f1 = _mat_mul(algebra, tgt.diff, h, len(tgt.deg1), len(tgt.deg0), len(src.deg1))
                    vectors.append(_flatten(amb, [f0, f1]))
    else:  # k == 1
        for r, rlab in enumerate(tgt.deg0):
            for c, clab in enumerate(src.deg0):
                for idx in algebra.corner_basis(rlab, clab):
                    h0 = _zero_matrix(len(tgt.deg0), len(src.deg0))
                    h0[r][c] = {idx: ONE}
                    f = _mat_mul(algebra, tgt.diff, h0, len(tgt.deg1), len(tgt.deg0), len(src.deg0))
                    vectors.append(_flatten(amb, [f]))
        for r, rlab in enumerate(tgt.deg1):
            for c, clab in enumerate(src.deg1):
                for idx in algebra.corner_basis(rlab, clab):
                    h1 = _zero_matrix(len(tgt.deg1), len(src.deg1))
                    h1[r][c] = {idx: ONE}
                    f = _mat_mul(algebra, h1, src.diff, len(tgt.deg1), len(src.deg1), len(src.deg0))
                    vectors.append(_flatten(amb, [f]))
    return Subspace(amb.dim, vectors)


@dataclass
class HomClassSpace:
    """Chain maps src -> tgt at one shift, modulo the null-homotopic ones."""

    src: TwoTermComplex
    tgt: TwoTermComplex
    shift: int
    ambient: _Ambient
    chain: Subspace
    trivial: Subspace
    reps: list[list[Fraction]] = field(default_factory=list)
    _echelon: TaggedEchelon = field(default_factory=TaggedEchelon)

    @property
    def dim(self) -> int:
        return self.chain.dim - self.trivial.dim

    def class_coords(self, vector: Sequence[Fraction]) -> dict[int, Fraction]:
        coeffs, rem = self._echelon.reduce(vector)
        if any(rem):
            raise NotClosed("chain map does not lie in the computed chain-map space")
        return coeffs


def _identity_vector(c: TwoTermComplex, amb: _Ambient) -> list[Fraction]:
    algebra = c.algebra
    mats = []
    for labels in (c.deg0, c.deg1):
        m = _zero_matrix(len(labels), len(labels))
        for r, lab in enumerate(labels):
            m[r][r] = dict(algebra.element(algebra.labels[algebra.idempotent[lab]]))
        mats.append(m)
    return _flatten(amb, mats)


def hom_class_space(
    src: TwoTermComplex,
    tgt: TwoTermComplex,
    k: int,
    identity_first: bool = False,
) -> HomClassSpace:
    """Compute the hom class space with a deterministic representative basis.

    Representatives extend the echelon basis of the null-homotopic subspace
    inside the chain-map space, in ambient coordinate order; when asked, the
    class of the identity becomes representative 0 (kept unnormalized so it
    stays idempotent under composition).
    """
    amb = _ambient(src, tgt, k)
    chain = chain_map_space(src, tgt, k)
    trivial = homotopy_trivial_space(src, tgt, k)
    space = HomClassSpace(src, tgt, k, amb, chain, trivial)
    ech = space._echelon
    for row in trivial.rows:
        _, rem = ech.reduce(row)
        if any(rem):
            ech.insert(rem, None)
    if identity_first:
        _, rem = ech.reduce(_identity_vector(src, amb))
        if not any(rem):
            raise NotClosed("identity chain map is null-homotopic")
        space.reps.append(ech.insert(rem, 0, normalize=False))
    for row in chain.rows:
        _, rem = ech.reduce(row)
        if any(rem):
            space.reps.append(ech.insert(rem, len(space.reps)))
    assert len(space.reps) == space.dim
    return space


def hom_class_dim(src: TwoTermComplex, tgt: TwoTermComplex, k: int) -> int:
    """Dimension of Hom in the homotopy category at shift k."""
    return chain_map_space(src, tgt, k).dim - homotopy_trivial_space(src, tgt, k).dim


def endomorphism_algebra(
    complexes: Sequence[TwoTermComplex], labels: Sequence[int] | None = None
) -> StructureAlgebra:
    """Endomorphism algebra of the direct sum, on hom-class representatives.

    The (a, b) corner holds the classes of chain maps from the b-th summand
    to the a-th; the identity class is the first diagonal representative and
    serves as the idempotent of its summand.  A product composes two
    representatives and re-expresses the class of the composite.
    """
    if labels is None:
        labels = list(range(1, len(complexes) + 1))
    labels = list(labels)
    by_label = dict(zip(labels, complexes))
    algebra = complexes[0].algebra

    spaces: dict[tuple[int, int], HomClassSpace] = {}
    for a in labels:
        for b in labels:
            spaces[(a, b)] = hom_class_space(
                by_label[b], by_label[a], 0, identity_first=(a == b)
            )

    basis_labels: list[tuple] = []
    source: list[int] = []
    target: list[int] = []
    rep_index: dict[tuple[int, int, int], int] = {}
    for a in labels:
        for b in labels:
            for r in range(len(spaces[(a, b)].reps)):
                rep_index[(a, b, r)] = len(basis_labels)
                basis_labels.append(("f", a, b, r))
                source.append(a)
                target.append(b)
    idempotent = {a: rep_index[(a, a, 0)] for a in labels}

    table: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
    for a in labels:
        for b in labels:
            sab = spaces[(a, b)]
            if not sab.reps:
                continue
            ta, tb = by_label[a], by_label[b]
            mats_ab = [_unflatten(sab.ambient, v) for v in sab.reps]
            for c in labels:
                sbc = spaces[(b, c)]
                if not sbc.reps:
                    continue
                sac = spaces[(a, c)]
                tc = by_label[c]
                mats_bc = [_unflatten(sbc.ambient, v) for v in sbc.reps]
                for r1, m1 in enumerate(mats_ab):
                    for r2, m2 in enumerate(mats_bc):
                        comp0 = _mat_mul(
                            algebra, m1[0], m2[0], len(ta.deg0), len(tb.deg0), len(tc.deg0)
                        )
                        comp1 = _mat_mul(
                            algebra, m1[1], m2[1], len(ta.deg1), len(tb.deg1), len(tc.deg1)
                        )
                        coeffs = sac.class_coords(_flatten(sac.ambient, [comp0, comp1]))
                        entries = tuple(
                            (rep_index[(a, c, r)], coeff)
                            for r, coeff in sorted(coeffs.items())
                            if coeff
                        )
                        if entries:
                            table[(rep_index[(a, b, r1)], rep_index[(b, c, r2)])] = entries

    return StructureAlgebra(basis_labels, source, target, idempotent, table)


@dataclass
class TiltingReport:
    """Checkable parts of the tilting property for a list of complexes.

    Generation of the whole bounded homotopy category is *not* examined; the
    report carries that caveat explicitly in ``note``.
    """

    summand_count: int
    expected_count: int
    vanishing_failures: list[tuple[int, int, int, int]]  # (a, b, shift, dim)
    non_local_summands: list[int]
    note: str = "generation of the bounded homotopy category is not checked"

    @property
    def count_ok(self) -> bool:
        return self.summand_count == self.expected_count

    @property
    def vanishing_ok(self) -> bool:
        return not self.vanishing_failures

    @property
    def indecomposable_ok(self) -> bool:
        return not self.non_local_summands

    @property
    def passed(self) -> bool:
        return self.count_ok and self.vanishing_ok and self.indecomposable_ok


def tilting_report(
    complexes: Sequence[TwoTermComplex], labels: Sequence[int] | None = None
) -> TiltingReport:
    if labels is None:
        labels = list(range(1, len(complexes) + 1))
    labels = list(labels)
    algebra = complexes[0].algebra
    vanishing: list[tuple[int, int, int, int]] = []
    for ka, a in enumerate(labels):
        for kb, b in enumerate(labels):
            for shift in (-1, 1):
                d = hom_class_dim(complexes[ka], complexes[kb], shift)
                if d:
                    vanishing.append((a, b, shift, d))
    non_local = []
    for ka, a in enumerate(labels):
        endo = endomorphism_algebra([complexes[ka]], [a])
        if endo.dimension - endo.radical().dim != 1:
            non_local.append(a)
    return TiltingReport(
        summand_count=len(complexes),
        expected_count=len(algebra.edges),
        vanishing_failures=vanishing,
        non_local_summands=non_local,
    )


def cartan_mutation_formula(t: BrauerTree, i: int) -> list[list[int]]:
    """Closed-form Cartan matrix of the tilting mutation at edge i.

    Away from i nothing changes; the i-row and i-column become the sum over
    the successor edges at the movable ends of i minus the old entry, and the
    diagonal becomes the sum of the multiplicities of the far endpoints of
    those successors (plus the multiplicity of an untouched leaf end).  No
    linear algebra is involved, which makes this an independent oracle for
    the endomorphism-algebra route.
    """
    if i not in t.ends:
        raise ValueError(f"unknown edge {i}")
    c = cartan_formula(t)
    n = t.n
    moving: list[tuple[str, int]] = []  # (vertex, successor edge)
    anchored: list[str] = []
    for vid in t.ends[i]:
        if t.valency(vid) >= 2:
            moving.append((vid, successor(t, vid, i)))
        else:
            anchored.append(vid)
    if not moving:
        return c
    out = [row[:] for row in c]
    for ell in range(1, n + 1):
        if ell == i:
            continue
        val = sum(c[succ - 1][ell - 1] for _, succ in moving) - c[i - 1][ell - 1]
        out[i - 1][ell - 1] = val
        out[ell - 1][i - 1] = val
    diag = sum(t.multiplicity(t.other_end(succ, vid)) for vid, succ in moving)
    diag += sum(t.multiplicity(vid) for vid in anchored)
    out[i - 1][i - 1] = diag
    return out
