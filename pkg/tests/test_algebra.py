from fractions import Fraction

import pytest

from brauertrees.algebra import build_algebra, cartan_count, multiply, quiver, radical
from brauertrees.enumeration import all_trees
from brauertrees.ribbon import (
    cartan_formula,
    ext_formula,
    path_tree,
    star_tree,
    with_multiplicity,
)

P3 = path_tree(3)
S3 = star_tree(3)
T1 = path_tree(1)
S3E = with_multiplicity(star_tree(3), "c", 2)


class TestBuildAlgebra:
    def test_t1_is_the_dual_numbers(self):
        a = build_algebra(T1)
        assert a.dimension == 2
        assert set(a.labels) == {("e", 1), ("z", 1)}
        z = a.element(("z", 1))
        assert multiply(a, z, z) == {}

    def test_p3_dimension(self):
        assert build_algebra(P3).dimension == 10

    def test_s3_dimension(self):
        assert build_algebra(S3).dimension == 12

    def test_dimension_is_cartan_sum(self):
        for t in (P3, S3, S3E, path_tree(5), with_multiplicity(star_tree(4), "c", 3)):
            a = build_algebra(t)
            assert a.dimension == sum(sum(row) for row in cartan_formula(t))

    def test_unit_and_orthogonality(self):
        a = build_algebra(P3)
        one = a.unit()
        for k in range(a.dimension):
            x = {k: Fraction(1)}
            assert multiply(a, one, x) == x
            assert multiply(a, x, one) == x
        for i in a.edges:
            for j in a.edges:
                ei = a.element(("e", i))
                ej = a.element(("e", j))
                assert multiply(a, ei, ej) == (ei if i == j else {})


class TestMultiply:
    def test_two_steps_compose_to_the_socle(self):
        a = build_algebra(P3)
        x = a.element(("p", 1, "v1", 1))
        y = a.element(("p", 2, "v1", 1))
        assert multiply(a, x, y) == a.element(("z", 1))

    def test_steps_at_different_vertices_annihilate(self):
        a = build_algebra(P3)
        x = a.element(("p", 1, "v1", 1))
        y = a.element(("p", 2, "v2", 1))
        assert multiply(a, x, y) == {}

    def test_associativity_on_small_family(self):
        trees = [t for n in (1, 2, 3, 4) for t in all_trees(n).members]
        trees.append(S3E)
        trees.append(with_multiplicity(path_tree(3), "v1", 3))
        for t in trees:
            build_algebra(t).check_associative()

    def test_radical_codimension_across_sweep(self):
        from brauertrees.verify import sweep_trees

        for t in sweep_trees(4, 3):
            a = build_algebra(t)
            assert a.dimension - radical(a).dim == len(a.edges)


class TestCartanCount:
    def test_p3(self):
        assert cartan_count(build_algebra(P3)) == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]

    def test_t1(self):
        assert cartan_count(build_algebra(T1)) == [[2]]

    def test_s3e(self):
        assert cartan_count(build_algebra(S3E)) == [[3, 2, 2], [2, 3, 2], [2, 2, 3]]

    def test_matches_formula_and_symmetric_on_family(self):
        for n in (1, 2, 3, 4):
            for mult in (None, 2, 3):
                fam = all_trees(n, multiplicity=mult) if mult else all_trees(n)
                for t in fam.members:
                    mat = cartan_count(build_algebra(t))
                    assert mat == cartan_formula(t)
                    assert mat == [list(r) for r in zip(*mat)]


class TestRadicalQuiver:
    def test_t1_radical(self):
        a = build_algebra(T1)
        r = radical(a)
        assert r.dim == 1
        assert r.contains([Fraction(0), Fraction(1)]) or r.contains(
            [Fraction(1), Fraction(0)]
        )

    def test_radical_codimension_is_edge_count(self):
        for t in (P3, S3, S3E, T1, path_tree(5)):
            a = build_algebra(t)
            assert a.dimension - radical(a).dim == len(a.edges)

    def test_quiver_p3(self):
        assert quiver(build_algebra(P3)) == ext_formula(P3)

    def test_quiver_t1(self):
        assert quiver(build_algebra(T1)) == [[1]]

    def test_quiver_s3e(self):
        assert quiver(build_algebra(S3E)) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]

    def test_quiver_matches_ext_formula_on_family(self):
        for n in (1, 2, 3, 4):
            for mult in (None, 2):
                fam = all_trees(n, multiplicity=mult) if mult else all_trees(n)
                for t in fam.members:
                    assert quiver(build_algebra(t)) == ext_formula(t)
