"""Tests for the automorphism groups and the conjugation of [p]-maps."""

import random
import pytest
from hypothesis import given, settings, strategies as st
from field import linalg
from field.finite_field import FiniteField
from liealg.lie_algebra import LieAlgebra, catalog_algebra
from aut.automorphisms import (
    aut_generators,
    automorphism_group_order,
    brute_force_automorphisms,
    conjugate_pmap,
    diagonal,
    enumerate_automorphisms,
    group_closure,
    is_automorphism,
    random_automorphism,
    shape_matrix,
)

GF2 = FiniteField(2)
GF3 = FiniteField(3)
GF4 = FiniteField(2, 2)
GF5 = FiniteField(5)


def test_identity_is_automorphism():
    """Tests that the identity is an automorphism of every catalog algebra."""
    for name in ("L_{3,2}", "L_{4,2}", "L_{4,3}"):
        L = catalog_algebra(GF3, name)
        assert is_automorphism(L, linalg.identity(L.dim))


def test_diagonal_automorphisms():
    """Tests diag(a, a, a^2) on the Heisenberg algebra."""
    L = catalog_algebra(GF3, "L_{3,2}")
    assert is_automorphism(L, diagonal((2, 2, 1)))
    assert not is_automorphism(L, diagonal((1, 1, 2)))
    assert not is_automorphism(L, linalg.zero_matrix(3))


def test_enumeration_counts():
    """Tests the number of automorphisms found by enumerating shapes."""
    assert len(list(enumerate_automorphisms(catalog_algebra(GF2, "L_{3,2}")))) == 24
    assert len(list(enumerate_automorphisms(catalog_algebra(GF2, "L_{2,1}")))) == 6
    assert len(list(enumerate_automorphisms(catalog_algebra(GF2, "L_{4,3}")))) == 32


@pytest.mark.parametrize("name", ["L_{3,2}", "L_{4,3}", "L_{2,1}"])
def test_enumeration_matches_brute_force(name):
    """Tests that the shapes describe every automorphism over GF(2)."""
    L = catalog_algebra(GF2, name)
    assert set(enumerate_automorphisms(L)) == set(brute_force_automorphisms(L))


@pytest.mark.parametrize(
    "field, name, order",
    [
        (GF2, "L_{3,2}", 24),
        (GF3, "L_{3,2}", 432),
        (GF2, "L_{4,2}", 192),
        (GF3, "L_{4,3}", 972),
        (GF2, "L_{4,1}", 20160),
        (GF5, "L_{1,1}", 4),
    ],
)
def test_group_order(field, name, order):
    """Tests the order of Aut(L)."""
    assert automorphism_group_order(catalog_algebra(field, name)) == order


@pytest.mark.parametrize(
    "field, name",
    [(GF3, "L_{3,2}"), (GF2, "L_{4,2}"), (GF3, "L_{4,3}"), (GF4, "L_{3,2}"), (GF2, "L_{3,1}")],
)
def test_generators_generate(field, name):
    """Tests that the closure of aut_generators is the whole group."""
    L = catalog_algebra(field, name)
    generators = aut_generators(L)
    assert all(is_automorphism(L, A) for A in generators)
    assert len(group_closure(field, generators)) == automorphism_group_order(L)


def test_generators_of_dimension_one():
    """Tests that Aut(L_{1,1}) is generated by a primitive element."""
    L = catalog_algebra(GF5, "L_{1,1}")
    assert aut_generators(L) == [((GF5.primitive_element,),)]


def test_not_catalog_algebra():
    """Tests that shapes require a catalog algebra in its standard basis."""
    L = LieAlgebra(GF3, 3, {(1, 2): (1, 0, 0)})
    with pytest.raises(ValueError):
        automorphism_group_order(L)
    with pytest.raises(ValueError):
        shape_matrix(GF3, "L_{3,1}", ())


def test_enumeration_budget():
    """Tests that enumeration refuses oversized parameter spaces."""
    with pytest.raises(ValueError):
        list(enumerate_automorphisms(catalog_algebra(GF3, "L_{4,1}"), budget=1000))


def test_conjugate_identity():
    """Tests that the identity fixes every [p]-map."""
    L = catalog_algebra(GF3, "L_{4,3}")
    images = ((0, 0, 0, 1), (0, 0, 0, 2), (0, 0, 0, 1), (0, 0, 0, 0))
    assert conjugate_pmap(L, linalg.identity(4), images) == images


def test_conjugate_diagonal_char_2():
    """Tests that diag(a, a, a^2) fixes x1 -> x3, x2 -> xi x3."""
    L = catalog_algebra(GF4, "L_{3,2}")
    images = ((0, 0, 1), (0, 0, 2), (0, 0, 0))
    for a in GF4.nonzero:
        A = diagonal((a, a, GF4.mul(a, a)))
        assert conjugate_pmap(L, A, images) == images


def test_conjugate_shear_char_2():
    """Tests that replacing x1 with x1 + x2 turns the zero map into x1 -> x3."""
    L = catalog_algebra(GF2, "L_{3,2}")
    A = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    images = conjugate_pmap(L, A, ((0, 0, 0),) * 3)
    assert images[0] == (0, 0, 1)


def test_conjugate_rejects_non_automorphism():
    """Tests the membership check of conjugate_pmap."""
    L = catalog_algebra(GF3, "L_{3,2}")
    with pytest.raises(ValueError):
        conjugate_pmap(L, diagonal((1, 1, 2)), ((0, 0, 0),) * 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([GF2, GF3, GF4]))
def test_conjugation_is_an_action(seed, field):
    """Tests conjugate(AB) = conjugate(A, conjugate(B)) on L_{4,2}."""
    rng = random.Random(seed)
    L = catalog_algebra(field, "L_{4,2}")
    A, B = random_automorphism(L, rng), random_automorphism(L, rng)
    images = (
        (0, 0, rng.randrange(field.q), rng.randrange(field.q)),
        (0, 0, rng.randrange(field.q), rng.randrange(field.q)),
        (0, 0, 0, 1),
        (0, 0, 0, 0),
    )
    AB = linalg.mat_mul(field, A, B)
    assert conjugate_pmap(L, AB, images) == conjugate_pmap(L, A, conjugate_pmap(L, B, images))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["L_{3,2}", "L_{4,2}", "L_{4,3}", "L_{3,1}"]))
def test_random_automorphism(seed, name):
    """Tests that sampled matrices are automorphisms."""
    rng = random.Random(seed)
    L = catalog_algebra(GF3, name)
    assert is_automorphism(L, random_automorphism(L, rng))
