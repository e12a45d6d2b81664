"""Exhaustive families of small Brauer trees, mutation graphs and orbits.

Families are generated by growing a leaf edge into every corner of every
smaller tree and deduplicating by canonical code, so they are complete by
induction; exceptional multiplicities are then placed at every vertex in
turn.  Everything stays exact and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ribbon import (
    BrauerTree,
    LabelPermutation,
    Vertex,
    canonical_code,
    mutate,
    path_tree,
    relabel,
    with_multiplicity,
)

MAX_EDGES = 8


class SizeLimit(ValueError):
    pass


@dataclass(frozen=True)
class TreeFamily:
    """All trees with a given edge count up to isomorphism in one mode."""

    n: int
    multiplicity: int | None
    mode: str
    members: tuple[BrauerTree, ...]
    codes: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class MutationGraph:
    nodes: tuple[str, ...]
    arrows: tuple[tuple[str, int, str], ...]
    member_of: dict[str, BrauerTree] = field(default_factory=dict)


def _grow(t: BrauerTree, vid: str, pos: int, leaf_id: str) -> BrauerTree:
    """Insert edge n+1 after position pos of the cyclic list at vid."""
    new_edge = t.n + 1
    vertices = []
    for v in t.vertices:
        if v.id == vid:
            cyc = v.cyclic[: pos + 1] + (new_edge,) + v.cyclic[pos + 1 :]
            vertices.append(Vertex(v.id, v.multiplicity, cyc))
        else:
            vertices.append(v)
    vertices.append(Vertex(leaf_id, 1, (new_edge,)))
    return BrauerTree(tuple(vertices))


def _shift_label_perm(n: int, target: int) -> LabelPermutation:
    """Move label n to ``target``, shifting the labels in between up by one."""
    mapping = {}
    for e in range(1, n + 1):
        if e == n:
            mapping[e] = target
        elif e >= target:
            mapping[e] = e + 1
        else:
            mapping[e] = e
    return LabelPermutation(mapping)


def all_trees(n: int, multiplicity: int | None = None, mode: str = "unlabeled") -> TreeFamily:
    """Every Brauer tree with n edges, one representative per class.

    ``multiplicity`` of None yields the multiplicity-free family; an integer
    m >= 2 places that multiplicity at every possible vertex in turn.
    """
    if not 1 <= n <= MAX_EDGES:
        raise SizeLimit(f"edge count {n} outside 1..{MAX_EDGES}")
    if multiplicity is not None and multiplicity < 2:
        raise ValueError("an exceptional multiplicity must be at least 2")
    if mode not in ("labeled", "unlabeled"):
        raise ValueError(f"unknown mode {mode!r}")

    current: dict[str, BrauerTree] = {canonical_code(path_tree(1), mode): path_tree(1)}
    for k in range(1, n):
        grown: dict[str, BrauerTree] = {}
        for t in current.values():
            for v in t.vertices:
                for pos in range(len(v.cyclic)):
                    bigger = _grow(t, v.id, pos, f"w{k}_{v.id}_{pos}")
                    if mode == "labeled":
                        for target in range(1, k + 2):
                            cand = relabel(bigger, _shift_label_perm(k + 1, target))
                            grown.setdefault(canonical_code(cand, mode), cand)
                    else:
                        grown.setdefault(canonical_code(bigger, mode), bigger)
        current = grown

    if multiplicity is not None:
        placed: dict[str, BrauerTree] = {}
        for t in current.values():
            for v in t.vertices:
                cand = with_multiplicity(t, v.id, multiplicity)
                placed.setdefault(canonical_code(cand, mode), cand)
        current = placed

    codes = tuple(sorted(current))
    members = tuple(current[c] for c in codes)
    return TreeFamily(n, multiplicity, mode, members, codes)


def mutation_graph(family: TreeFamily) -> MutationGraph:
    """Arrows (G, i, mutation of G at i) over a complete family.

    Labeled families keep one arrow per edge; unlabeled families collapse
    parallel arrows to the smallest mutating edge.
    """
    node_set = set(family.codes)
    member_of = dict(zip(family.codes, family.members))
    arrows: list[tuple[str, int, str]] = []
    for code, t in zip(family.codes, family.members):
        seen_targets: set[str] = set()
        for i in t.edges:
            target = canonical_code(mutate(t, i), family.mode)
            if target not in node_set:
                raise RuntimeError(f"mutation left the family: {code} --{i}--> {target}")
            if family.mode == "unlabeled":
                if target in seen_targets:
                    continue
                seen_targets.add(target)
            arrows.append((code, i, target))
    return MutationGraph(family.codes, tuple(arrows), member_of)


def orbit_order(t: BrauerTree, i: int, limit: int = 100_000) -> int:
    """Least s >= 1 with the s-fold mutation at i isomorphic to t as a
    labeled tree.  Finite because mutation permutes a finite labeled family."""
    start = canonical_code(t, "labeled")
    cur = t
    for s in range(1, limit + 1):
        cur = mutate(cur, i)
        if canonical_code(cur, "labeled") == start:
            return s
    raise RuntimeError(f"no return to the start within {limit} mutations")
