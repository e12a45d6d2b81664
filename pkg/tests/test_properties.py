"""Property tests over randomly grown trees."""

import hypothesis.strategies as st
from hypothesis import given, settings

from brauertrees import formats
from brauertrees.ribbon import (
    BrauerTree,
    LabelPermutation,
    Vertex,
    canonical_code,
    cartan_formula,
    ext_formula,
    follows,
    isomorphic,
    mutate,
    reconstruct,
    relabel,
    successor,
    validate,
    with_multiplicity,
)


@st.composite
def brauer_trees(draw, max_edges=7, max_mult=3):
    n = draw(st.integers(min_value=1, max_value=max_edges))
    t = BrauerTree((Vertex("v0", 1, (1,)), Vertex("v1", 1, (1,))))
    for k in range(2, n + 1):
        vs = t.vertices
        vi = draw(st.integers(min_value=0, max_value=len(vs) - 1))
        v = vs[vi]
        pos = draw(st.integers(min_value=0, max_value=len(v.cyclic) - 1))
        cyc = v.cyclic[: pos + 1] + (k,) + v.cyclic[pos + 1 :]
        new = [Vertex(w.id, w.multiplicity, cyc if w.id == v.id else w.cyclic) for w in vs]
        new.append(Vertex(f"v{k}", 1, (k,)))
        t = BrauerTree(tuple(new))
    mult = draw(st.integers(min_value=1, max_value=max_mult))
    if mult > 1:
        which = draw(st.integers(min_value=0, max_value=len(t.vertices) - 1))
        t = with_multiplicity(t, t.vertices[which].id, mult)
    return t


@st.composite
def trees_with_edge(draw, **kwargs):
    t = draw(brauer_trees(**kwargs))
    return t, draw(st.integers(min_value=1, max_value=t.n))


@given(trees_with_edge())
@settings(max_examples=60, deadline=None)
def test_mutation_preserves_shape_data(pair):
    t, i = pair
    m = mutate(t, i)
    validate([(v.id, v.multiplicity, v.cyclic) for v in m.vertices])
    assert m.n == t.n
    assert sorted(v.multiplicity for v in m.vertices) == sorted(
        v.multiplicity for v in t.vertices
    )


@given(brauer_trees())
@settings(max_examples=40, deadline=None)
def test_successor_defines_follows(t):
    for v in t.vertices:
        for e in v.cyclic:
            s = successor(t, v.id, e)
            if len(v.cyclic) >= 2:
                assert follows(t, e, s)
            else:
                assert s == e


@given(brauer_trees(max_edges=6))
@settings(max_examples=40, deadline=None)
def test_reconstruction_round_trip(t):
    out = reconstruct(cartan_formula(t), ext_formula(t))
    assert isomorphic(out, t, "labeled") is not None


@given(trees_with_edge(max_edges=6))
@settings(max_examples=30, deadline=None)
def test_reconstruction_round_trip_after_mutation(pair):
    t, i = pair
    m = mutate(t, i)
    out = reconstruct(cartan_formula(m), ext_formula(m))
    assert isomorphic(out, m, "labeled") is not None


@given(brauer_trees(), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_relabeling_is_invisible_unlabeled(t, rng):
    labels = list(range(1, t.n + 1))
    shuffled = labels[:]
    rng.shuffle(shuffled)
    perm = LabelPermutation(dict(zip(labels, shuffled)))
    s = relabel(t, perm)
    assert canonical_code(s, "unlabeled") == canonical_code(t, "unlabeled")
    w = isomorphic(t, s, "unlabeled")
    assert w is not None
    assert isomorphic(relabel(t, w), s, "labeled") is not None


@given(brauer_trees())
@settings(max_examples=40, deadline=None)
def test_file_round_trip(t):
    assert formats.loads_tree(formats.dumps_tree(t)) == t


@given(brauer_trees(max_edges=5))
@settings(max_examples=25, deadline=None)
def test_cartan_symmetry_and_row_sums(t):
    mat = cartan_formula(t)
    assert mat == [list(r) for r in zip(*mat)]
    for i in t.edges:
        assert sum(mat[i - 1]) == 2 + sum(
            t.multiplicity(v) * t.valency(v) - 1 for v in t.ends[i]
        )
