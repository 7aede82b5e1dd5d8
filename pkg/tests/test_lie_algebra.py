"""Tests for the LieAlgebra class, the catalog and the recognition of algebras."""

import pytest
from field import linalg
from field.finite_field import FiniteField
from liealg.lie_algebra import (
    CATALOG_NAMES,
    LieAlgebra,
    catalog,
    catalog_algebra,
    change_basis,
    full_catalog,
)
from liealg.recognition import recognize

GF2 = FiniteField(2)
GF3 = FiniteField(3)
GF4 = FiniteField(2, 2)


def test_catalog_sizes():
    """Tests the number of catalog algebras per dimension."""
    assert [len(catalog(GF3, n)) for n in range(1, 5)] == [1, 1, 2, 3]
    assert [L.name for L in full_catalog(GF3)] == list(CATALOG_NAMES)


def test_catalog_invalid_dimension():
    """Tests that dimensions outside [1, 4] are rejected."""
    with pytest.raises(ValueError):
        catalog(GF3, 5)
    with pytest.raises(ValueError):
        catalog_algebra(GF3, "L_{5,1}")


def test_heisenberg_bracket():
    """Tests [x1, x2] = x3 and antisymmetry in the Heisenberg algebra."""
    L = catalog_algebra(GF3, "L_{3,2}")
    x1, x2, x3 = L.basis()
    assert L.bracket(x1, x2) == x3
    assert L.bracket(x2, x1) == (0, 0, 2)
    assert L.bracket(x1, x3) == L.zero()


def test_filiform_brackets():
    """Tests the brackets of L_{4,3}."""
    L = catalog_algebra(GF3, "L_{4,3}")
    x1, x2, x3, x4 = L.basis()
    assert L.bracket(x1, x2) == x3
    assert L.bracket(x1, x3) == x4
    assert L.bracket(x2, x3) == L.zero()


def test_ad_matrix():
    """Tests that v . ad_matrix(x) = [v, x]."""
    L = catalog_algebra(GF3, "L_{4,3}")
    x = (1, 2, 0, 1)
    v = (2, 1, 1, 0)
    assert linalg.vec_mat(GF3, v, L.ad_matrix(x)) == L.bracket(v, x)


def test_invariants():
    """Tests center, derived algebra and class of the catalog algebras."""
    L32 = catalog_algebra(GF2, "L_{3,2}")
    assert L32.center() == ((0, 0, 1),)
    assert L32.derived() == ((0, 0, 1),)
    assert L32.nilpotency_class() == 2

    L42 = catalog_algebra(GF2, "L_{4,2}")
    assert L42.center() == ((0, 0, 1, 0), (0, 0, 0, 1))

    L43 = catalog_algebra(GF2, "L_{4,3}")
    assert L43.center() == ((0, 0, 0, 1),)
    assert L43.nilpotency_class() == 3
    assert len(L43.lower_central_series()) == 4

    L41 = catalog_algebra(GF2, "L_{4,1}")
    assert L41.is_abelian
    assert L41.nilpotency_class() == 1


def test_centralizer():
    """Tests the centralizer of the derived algebra of L_{4,3}."""
    L = catalog_algebra(GF3, "L_{4,3}")
    assert L.centralizer(L.derived()) == ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_jacobi_failure():
    """Tests that structure constants violating Jacobi are rejected."""
    brackets = {(0, 1): (0, 0, 1), (0, 2): (1, 0, 0)}
    with pytest.raises(ValueError):
        LieAlgebra(GF2, 3, brackets)


def test_invalid_bracket_indices():
    """Tests the validation of bracket indices and values."""
    with pytest.raises(ValueError):
        LieAlgebra(GF3, 3, {(1, 0): (0, 0, 1)})
    with pytest.raises(ValueError):
        LieAlgebra(GF3, 3, {(0, 1): (0, 0, 3)})


def test_non_nilpotent_algebra():
    """Tests that [x1, x2] = x2 gives no nilpotency class."""
    L = LieAlgebra(GF3, 2, {(0, 1): (0, 1)})
    assert L.nilpotency_class() is None
    assert not L.is_nilpotent


def test_json_round_trip():
    """Tests the JSON codec, including the catalog name."""
    L = catalog_algebra(GF4, "L_{4,3}")
    data = L.to_json()
    assert data["brackets"][0] == {"i": 1, "j": 2, "value": [[0, 0], [0, 0], [1, 0], [0, 0]]}

    back = LieAlgebra.from_json(data)
    assert back.same_structure(L)
    assert back.name == "L_{4,3}"


def test_json_reversed_indices():
    """Tests that a bracket given as [x2, x1] is stored as -[x1, x2]."""
    data = {
        "field": {"p": 3, "k": 1},
        "dim": 3,
        "brackets": [{"i": 2, "j": 1, "value": [[0], [0], [2]]}],
    }
    L = LieAlgebra.from_json(data)
    assert L.name == "L_{3,2}"


def test_change_basis():
    """Tests that swapping x1 and x2 in the Heisenberg algebra negates the bracket."""
    L = catalog_algebra(GF3, "L_{3,2}")
    M = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    changed = change_basis(L, M)
    assert changed.brackets == {(0, 1): (0, 0, 2)}


def test_recognize_catalog_members():
    """Tests that catalog algebras are recognized with an isomorphism."""
    for L in full_catalog(GF3):
        name, T = recognize(L)
        assert name == L.name
        assert linalg.is_invertible(GF3, T)


def test_recognize_permuted_heisenberg():
    """Tests the Heisenberg algebra in the basis (x2, x1, -x3)."""
    L = change_basis(catalog_algebra(GF3, "L_{3,2}"), ((0, 1, 0), (1, 0, 0), (0, 0, 2)))
    assert L.brackets == {(0, 1): (0, 0, 1)}

    L = LieAlgebra(GF3, 3, {(1, 2): (1, 0, 0)})
    name, T = recognize(L)
    assert name == "L_{3,2}"
    target = catalog_algebra(GF3, "L_{3,2}")
    for u in L.basis():
        for v in L.basis():
            image = linalg.vec_mat(GF3, L.bracket(u, v), T)
            assert image == target.bracket(linalg.vec_mat(GF3, u, T), linalg.vec_mat(GF3, v, T))


def test_recognize_hidden_filiform():
    """Tests recognition of L_{4,3} written in another basis."""
    M = ((1, 1, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1))
    L = change_basis(catalog_algebra(GF2, "L_{4,3}"), M)
    name, T = recognize(L)
    assert name == "L_{4,3}"
    target = catalog_algebra(GF2, "L_{4,3}")
    assert change_basis(target, T).same_structure(L)


def test_recognize_abelian():
    """Tests that abelian algebras are recognized with the identity."""
    L = LieAlgebra(GF3, 2)
    assert recognize(L) == ("L_{2,1}", linalg.identity(2))


def test_recognize_non_nilpotent():
    """Tests that non-nilpotent algebras are rejected."""
    with pytest.raises(ValueError):
        recognize(LieAlgebra(GF3, 2, {(0, 1): (0, 1)}))
