"""Brauer trees as ribbon trees.

A Brauer tree is a finite tree whose edges carry labels 1..n, together with a
clockwise cyclic ordering of the edges around every vertex and a positive
multiplicity per vertex, at most one of which exceeds 1 (the exceptional
vertex).  This module holds the purely combinatorial side of the story:
validation, the successor/follows relations, edge mutation, isomorphism via
canonical codes, the greedy mutation sequence to a star, and the closed
formulas for the Cartan and Ext matrices of the associated algebra, including
the inverse reconstruction from those matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class Vertex(NamedTuple):
    id: str
    multiplicity: int
    cyclic: tuple[int, ...]


class InvalidTree(ValueError):
    """Raised by validate(); carries the complete list of violations."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


class NotIncident(ValueError):
    pass


class UnknownEdge(ValueError):
    pass


class NoCandidate(RuntimeError):
    """Greedy star search found no admissible edge; indicates an internal bug."""


class Inconsistent(ValueError):
    """Cartan/Ext data does not come from any Brauer tree."""


def _min_rotation(cyc: tuple[int, ...]) -> tuple[int, ...]:
    if len(cyc) <= 1:
        return cyc
    k = cyc.index(min(cyc))
    return cyc[k:] + cyc[:k]


@dataclass(frozen=True, eq=False)
class BrauerTree:
    """Immutable ribbon tree; construct through validate() or the helpers."""

    vertices: tuple[Vertex, ...]

    @cached_property
    def n(self) -> int:
        return sum(len(v.cyclic) for v in self.vertices) // 2

    @cached_property
    def by_id(self) -> dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def ends(self) -> dict[int, tuple[str, str]]:
        """Edge label -> pair of incident vertex ids, in vertex-list order."""
        found: dict[int, list[str]] = {}
        for v in self.vertices:
            for e in v.cyclic:
                found.setdefault(e, []).append(v.id)
        return {e: (ids[0], ids[1]) for e, ids in found.items()}

    @cached_property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.ends))

    def vertex(self, vid: str) -> Vertex:
        try:
            return self.by_id[vid]
        except KeyError:
            raise NotIncident(f"unknown vertex {vid!r}") from None

    def valency(self, vid: str) -> int:
        return len(self.vertex(vid).cyclic)

    def multiplicity(self, vid: str) -> int:
        return self.vertex(vid).multiplicity

    def other_end(self, edge: int, vid: str) -> str:
        a, b = self.ends[edge]
        if vid == a:
            return b
        if vid == b:
            return a
        raise NotIncident(f"edge {edge} is not incident to vertex {vid!r}")

    @cached_property
    def exceptional(self) -> str | None:
        for v in self.vertices:
            if v.multiplicity > 1:
                return v.id
        return None

    @cached_property
    def _normal_form(self) -> tuple:
        return tuple(
            sorted((v.id, v.multiplicity, _min_rotation(v.cyclic)) for v in self.vertices)
        )

    def __eq__(self, other) -> bool:
        # Cyclic lists compare up to rotation and vertex order is immaterial.
        return isinstance(other, BrauerTree) and self._normal_form == other._normal_form

    def __hash__(self) -> int:
        return hash(self._normal_form)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{v.id}{'*' + str(v.multiplicity) if v.multiplicity > 1 else ''}:{list(v.cyclic)}"
            for v in self.vertices
        )
        return f"BrauerTree({parts})"


RawVertex = tuple[str, int, Sequence[int]]


def validate(raw: Iterable[RawVertex]) -> BrauerTree:
    """Check a candidate vertex list and build the tree.

    Raises InvalidTree carrying every violation found, with codes
    EdgeCountMismatch, LoopEdge, NotATree, MultipleExceptional and
    BadMultiplicity.
    """
    errors: list[str] = []
    vertices: list[Vertex] = []
    seen_ids: set[str] = set()
    for vid, mult, cyc in raw:
        vid = str(vid)
        if vid in seen_ids:
            errors.append(f"DuplicateVertexId: vertex id {vid!r} appears twice")
        seen_ids.add(vid)
        vertices.append(Vertex(vid, int(mult), tuple(int(e) for e in cyc)))

    occurrences: dict[int, list[str]] = {}
    for v in vertices:
        if v.multiplicity < 1:
            errors.append(f"BadMultiplicity: vertex {v.id!r} has multiplicity {v.multiplicity}")
        for e in v.cyclic:
            occurrences.setdefault(e, []).append(v.id)

    labels = sorted(occurrences)
    n = max(labels) if labels else 0
    if labels and (labels[0] < 1 or len(labels) != n):
        for e in range(1, n + 1):
            if e not in occurrences:
                errors.append(f"EdgeCountMismatch: edge {e} occurs 0 times")
        for e in labels:
            if e < 1:
                errors.append(f"EdgeCountMismatch: edge label {e} is not a positive integer")
    for e, ids in occurrences.items():
        if len(ids) != 2:
            errors.append(f"EdgeCountMismatch: edge {e} occurs {len(ids)} times")
        elif ids[0] == ids[1]:
            errors.append(f"LoopEdge: both ends of edge {e} lie at vertex {ids[0]!r}")

    exceptional = [v.id for v in vertices if v.multiplicity > 1]
    if len(exceptional) > 1:
        errors.append(f"MultipleExceptional: vertices {exceptional} all have multiplicity > 1")

    # Tree shape: n edges, n+1 vertices, connected.
    if not errors:
        if len(vertices) != n + 1:
            errors.append(f"NotATree: {len(vertices)} vertices with {n} edges")
        else:
            adjacency: dict[str, set[str]] = {v.id: set() for v in vertices}
            for ids in occurrences.values():
                a, b = ids
                adjacency[a].add(b)
                adjacency[b].add(a)
            stack = [vertices[0].id]
            reached = {vertices[0].id}
            while stack:
                cur = stack.pop()
                for nxt in adjacency[cur]:
                    if nxt not in reached:
                        reached.add(nxt)
                        stack.append(nxt)
            if len(reached) != len(vertices):
                errors.append("NotATree: the incidence graph is disconnected")

    if errors:
        raise InvalidTree(errors)
    return BrauerTree(tuple(vertices))


def tree(raw: Iterable[RawVertex]) -> BrauerTree:
    """Shorthand for validate()."""
    return validate(raw)


def path_tree(n: int) -> BrauerTree:
    """Path with edges 1..n: v0 -1- v1 -2- ... -n- vn, all multiplicities 1."""
    if n < 1:
        raise ValueError("need at least one edge")
    verts: list[RawVertex] = [("v0", 1, (1,))]
    for k in range(1, n):
        verts.append((f"v{k}", 1, (k, k + 1)))
    verts.append((f"v{n}", 1, (n,)))
    return validate(verts)


def star_tree(n: int) -> BrauerTree:
    """Star with edges 1..n around center c in clockwise order 1,2,...,n."""
    if n < 1:
        raise ValueError("need at least one edge")
    verts: list[RawVertex] = [("c", 1, tuple(range(1, n + 1)))]
    verts.extend((f"l{k}", 1, (k,)) for k in range(1, n + 1))
    return validate(verts)


def with_multiplicity(t: BrauerTree, vid: str, m: int) -> BrauerTree:
    """Copy of t with vertex vid given multiplicity m and all others 1."""
    t.vertex(vid)
    return BrauerTree(
        tuple(Vertex(v.id, m if v.id == vid else 1, v.cyclic) for v in t.vertices)
    )


def successor(t: BrauerTree, vid: str, edge: int) -> int:
    """The edge immediately after ``edge`` in the clockwise list at ``vid``.

    A valency-1 vertex wraps to the edge itself.
    """
    cyc = t.vertex(vid).cyclic
    try:
        k = cyc.index(edge)
    except ValueError:
        raise NotIncident(f"edge {edge} is not incident to vertex {vid!r}") from None
    return cyc[(k + 1) % len(cyc)]


def follows(t: BrauerTree, i: int, j: int) -> bool:
    """True iff some cyclic ordering reads (..., i, j, ...)."""
    if i not in t.ends or j not in t.ends:
        return False
    return any(successor(t, vid, i) == j for vid in t.ends[i])


def mutate(t: BrauerTree, i: int) -> BrauerTree:
    """Mutate the tree at edge i.

    Each end of i sitting at a vertex of valency >= 2 detaches and reattaches
    at the far endpoint of its successor edge, inserted immediately after that
    successor in the receiving cyclic list.  Valency-1 ends stay put, so a
    single-edge tree is fixed.  Multiplicities never change.
    """
    if i not in t.ends:
        raise UnknownEdge(f"unknown edge {i}")
    moves: list[tuple[str, int, str]] = []  # (old vertex, successor edge, new vertex)
    for vid in t.ends[i]:
        if t.valency(vid) >= 2:
            x = successor(t, vid, i)
            moves.append((vid, x, t.other_end(x, vid)))
    if not moves:
        return t
    cyc = {v.id: list(v.cyclic) for v in t.vertices}
    for vid, _, _ in moves:
        cyc[vid].remove(i)
    for _, x, wid in moves:
        cyc[wid].insert(cyc[wid].index(x) + 1, i)
    return BrauerTree(
        tuple(Vertex(v.id, v.multiplicity, tuple(cyc[v.id])) for v in t.vertices)
    )


def is_star(t: BrauerTree, vid: str) -> bool:
    """True iff every edge is incident to ``vid``."""
    return t.valency(vid) == t.n


class LabelPermutation:
    """A bijection on the edge labels 1..n."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: dict[int, int]):
        if sorted(mapping) != sorted(mapping.values()):
            raise ValueError("not a bijection")
        self.mapping = dict(mapping)

    @classmethod
    def identity(cls, n: int) -> "LabelPermutation":
        return cls({k: k for k in range(1, n + 1)})

    def __call__(self, edge: int) -> int:
        return self.mapping[edge]

    def compose(self, first: "LabelPermutation") -> "LabelPermutation":
        """self after first."""
        return LabelPermutation({k: self.mapping[v] for k, v in first.mapping.items()})

    def inverse(self) -> "LabelPermutation":
        return LabelPermutation({v: k for k, v in self.mapping.items()})

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelPermutation) and self.mapping == other.mapping

    def __repr__(self) -> str:
        moved = {k: v for k, v in sorted(self.mapping.items()) if k != v}
        return f"LabelPermutation({moved or 'id'})"


def relabel(t: BrauerTree, perm: LabelPermutation) -> BrauerTree:
    return BrauerTree(
        tuple(
            Vertex(v.id, v.multiplicity, tuple(perm(e) for e in v.cyclic))
            for v in t.vertices
        )
    )


def _flag_tokens(t: BrauerTree, root: str, start: int, labeled: bool):
    """Depth-first encoding of the planar tree rooted at a flag.

    Returns (token tuple, edges in visit order).  Tokens are a prefix code:
    every vertex contributes (multiplicity, #descending edges), each
    descending edge contributes its label in labeled mode followed by the
    encoding of the subtree behind it.
    """
    tokens: list[int] = []
    order: list[int] = []

    def visit(vid: str, edges: tuple[int, ...]):
        v = t.by_id[vid]
        tokens.append(v.multiplicity)
        tokens.append(len(edges))
        for e in edges:
            order.append(e)
            if labeled:
                tokens.append(e)
            wid = t.other_end(e, vid)
            cyc = t.by_id[wid].cyclic
            k = cyc.index(e)
            visit(wid, cyc[k + 1 :] + cyc[:k])

    cyc = t.by_id[root].cyclic
    visit(root, cyc[start:] + cyc[:start])
    return tuple(tokens), order


def _min_flag(t: BrauerTree, labeled: bool):
    best = None
    best_order = None
    for v in t.vertices:
        for start in range(len(v.cyclic)):
            tokens, order = _flag_tokens(t, v.id, start, labeled)
            if best is None or tokens < best:
                best = tokens
                best_order = order
    return best, best_order


def canonical_code(t: BrauerTree, mode: str = "labeled") -> str:
    """Canonical isomorphism code: minimal flag encoding.

    Two trees get equal codes exactly when a vertex bijection preserves
    incidence, clockwise cyclic orders and multiplicities, and, in labeled
    mode, every edge label; unlabeled mode allows an edge relabeling on top.
    """
    if mode not in ("labeled", "unlabeled"):
        raise ValueError(f"unknown mode {mode!r}")
    tokens, _ = _min_flag(t, mode == "labeled")
    head = "L" if mode == "labeled" else "U"
    return head + ":" + ",".join(map(str, tokens))


def isomorphic(t1: BrauerTree, t2: BrauerTree, mode: str = "labeled") -> LabelPermutation | None:
    """Witnessing edge permutation if the trees are isomorphic, else None."""
    if canonical_code(t1, mode) != canonical_code(t2, mode):
        return None
    if mode == "labeled":
        return LabelPermutation.identity(t1.n)
    _, order1 = _min_flag(t1, labeled=False)
    _, order2 = _min_flag(t2, labeled=False)
    return LabelPermutation(dict(zip(order1, order2)))


def to_star_sequence(t: BrauerTree, vid: str) -> list[int]:
    """Greedy sequence of distinct edges whose mutations make ``vid`` a star.

    At every step, among all edges i not incident to vid whose successor at
    one of their endpoints leads to vid, the smallest label is mutated; that
    mutation reattaches i to vid while leaving all edges already at vid in
    place.  The result has length n - valency(vid).
    """
    t.vertex(vid)
    seq: list[int] = []
    cur = t
    while not is_star(cur, vid):
        candidates = []
        for i in cur.edges:
            if vid in cur.ends[i]:
                continue
            for wid in cur.ends[i]:
                if cur.valency(wid) < 2:
                    continue
                j = successor(cur, wid, i)
                if cur.other_end(j, wid) == vid:
                    candidates.append(i)
                    break
        if not candidates:
            raise NoCandidate(f"no admissible edge toward {vid!r} in {cur!r}")
        pick = min(candidates)
        seq.append(pick)
        cur = mutate(cur, pick)
    return seq


def cartan_formula(t: BrauerTree) -> list[list[int]]:
    """Cartan matrix of the tree algebra straight from the tree.

    Diagonal entries add the two end multiplicities of the edge; an
    off-diagonal entry is the multiplicity of the shared vertex if any.
    """
    n = t.n
    mat = [[0] * n for _ in range(n)]
    for i in t.edges:
        a, b = t.ends[i]
        mat[i - 1][i - 1] = t.multiplicity(a) + t.multiplicity(b)
    for v in t.vertices:
        for i in v.cyclic:
            for j in v.cyclic:
                if i != j:
                    mat[i - 1][j - 1] = v.multiplicity
    return mat


def ext_formula(t: BrauerTree) -> list[list[int]]:
    """Ext^1 dimensions between simples of the tree algebra (0/1 matrix).

    Entry (i, j) is 1 when j is the clockwise successor of i at a vertex of
    valency >= 2, when i = j sits at a valency-1 vertex of multiplicity > 1,
    or degenerately when the tree has a single edge.
    """
    n = t.n
    mat = [[0] * n for _ in range(n)]
    if n == 1:
        return [[1]]
    for v in t.vertices:
        if len(v.cyclic) >= 2:
            for k, i in enumerate(v.cyclic):
                j = v.cyclic[(k + 1) % len(v.cyclic)]
                mat[i - 1][j - 1] = 1
        elif v.multiplicity > 1:
            i = v.cyclic[0]
            mat[i - 1][i - 1] = 1
    return mat


def _check_matrices(cartan: Sequence[Sequence[int]], ext: Sequence[Sequence[int]]) -> int:
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise Inconsistent("Cartan matrix is not square")
    if len(ext) != n or any(len(row) != n for row in ext):
        raise Inconsistent("Ext matrix shape does not match the Cartan matrix")
    for i in range(n):
        for j in range(n):
            if cartan[i][j] != cartan[j][i]:
                raise Inconsistent(f"Cartan matrix not symmetric at ({i + 1},{j + 1})")
            if ext[i][j] not in (0, 1):
                raise Inconsistent(f"Ext entry ({i + 1},{j + 1}) not in {{0,1}}")
    return n


def reconstruct(cartan: Sequence[Sequence[int]], ext: Sequence[Sequence[int]]) -> BrauerTree:
    """Rebuild the Brauer tree from its Cartan matrix and Ext^1 data.

    For each edge, the other edges with nonzero Cartan entry split into the
    two end-vertex groups (cross entries vanish); within each group the Ext
    data chains the cyclic ordering.  Sides glue into vertices by rotation,
    vertex multiplicities come from off-diagonal entries, and leaves get the
    remainder of the diagonal.  Raises Inconsistent unless the result
    reproduces both input matrices exactly.
    """
    n = _check_matrices(cartan, ext)

    if n == 1:
        m_extra = cartan[0][0] - 1
        if m_extra < 1:
            raise Inconsistent("diagonal entry below 2 for a single edge")
        out = BrauerTree((Vertex("v0", 1, (1,)), Vertex("v1", m_extra, (1,))))
        if cartan_formula(out) != [list(r) for r in cartan] or ext_formula(out) != [
            list(r) for r in ext
        ]:
            raise Inconsistent("matrices do not match any single-edge tree")
        return out

    sides: list[tuple[int, tuple[int, ...]]] = []  # (edge, cyclic starting at edge)
    for i in range(1, n + 1):
        linked = [j for j in range(1, n + 1) if j != i and cartan[i - 1][j - 1] != 0]
        components: list[set[int]] = []
        remaining = set(linked)
        while remaining:
            seed = min(remaining)
            comp = {seed}
            stack = [seed]
            while stack:
                a = stack.pop()
                for b in list(remaining - comp):
                    if cartan[a - 1][b - 1] != 0:
                        comp.add(b)
                        stack.append(b)
            components.append(comp)
            remaining -= comp
        if len(components) > 2:
            raise Inconsistent(f"edge {i} sees more than two vertex groups")
        while len(components) < 2:
            components.append(set())
        components.sort(key=lambda s: (len(s) == 0, sorted(s)))
        for comp in components:
            group = {i} | comp
            if len(group) == 1:
                sides.append((i, (i,)))
                continue
            seq = [i]
            cur = i
            while True:
                nxt = [j for j in group if j != cur and ext[cur - 1][j - 1]]
                if len(nxt) != 1:
                    raise Inconsistent(
                        f"edge {cur} has {len(nxt)} successors inside a vertex group of edge {i}"
                    )
                cur = nxt[0]
                if cur == i:
                    break
                if cur in seq:
                    raise Inconsistent(f"cyclic chain at edge {i} revisits edge {cur}")
                seq.append(cur)
            if set(seq) != group:
                raise Inconsistent(f"cyclic chain at edge {i} misses part of the vertex group")
            sides.append((i, tuple(seq)))

    groups: dict[tuple[int, ...], dict[int, tuple[int, ...]]] = {}
    for edge, seq in sides:
        key = _min_rotation(seq)
        members = groups.setdefault(key, {})
        if edge in members:
            raise Inconsistent(f"edge {edge} contributes twice to one vertex")
        members[edge] = seq
    for key, members in groups.items():
        if set(members) != set(key):
            raise Inconsistent(f"vertex group {key} has contributors {sorted(members)}")
        for edge, seq in members.items():
            k = key.index(edge)
            if key[k:] + key[:k] != seq:
                raise Inconsistent(f"side of edge {edge} disagrees with vertex group {key}")

    keys = sorted(groups)
    vid_of = {key: f"v{k}" for k, key in enumerate(keys)}
    ends: dict[int, list[tuple[int, ...]]] = {}
    for key in keys:
        for edge in key:
            ends.setdefault(edge, []).append(key)
    mult: dict[tuple[int, ...], int] = {}
    for key in keys:
        if len(key) >= 2:
            values = {cartan[a - 1][b - 1] for a in key for b in key if a != b}
            if len(values) != 1:
                raise Inconsistent(f"off-diagonal entries disagree on vertex {key}")
            mult[key] = values.pop()
    for key in keys:
        if len(key) == 1:
            i = key[0]
            others = [k for k in ends.get(i, []) if k != key]
            if len(others) != 1 or others[0] not in mult:
                raise Inconsistent(f"cannot place a multiplicity at the leaf of edge {i}")
            m = cartan[i - 1][i - 1] - mult[others[0]]
            if m < 1:
                raise Inconsistent(f"leaf of edge {i} would get multiplicity {m}")
            mult[key] = m

    try:
        out = validate([(vid_of[key], mult[key], key) for key in keys])
    except InvalidTree as exc:
        raise Inconsistent(f"reassembled data is not a Brauer tree: {exc}") from None
    if cartan_formula(out) != [list(r) for r in cartan] or ext_formula(out) != [
        list(r) for r in ext
    ]:
        raise Inconsistent("reassembled tree does not reproduce the input matrices")
    return out
