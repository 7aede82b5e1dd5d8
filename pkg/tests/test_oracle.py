"""Tests for the brute-force enumeration of [p]-maps and the orbit cross-check."""

import functools
import itertools
import json
import pytest
from field.finite_field import FiniteField
from liealg.lie_algebra import catalog_algebra
from aut.automorphisms import conjugate_pmap, enumerate_automorphisms
from classify.iso_label import IsoLabel, representative_images
from classify.classifier import params_equivalent
from verify import oracle
from verify.oracle import (
    SearchSpaceTooLarge,
    cross_check,
    enumerate_pnilpotent_pmaps,
    find_isomorphism,
    orbit_partition,
)

GF2 = FiniteField(2)
GF3 = FiniteField(3)
GF4 = FiniteField(2, 2)
GF5 = FiniteField(5)
GF9 = FiniteField(3, 2)


@functools.lru_cache(maxsize=None)
def orbit_index(field, name):
    """Map every [p]-nilpotent [p]-map on a catalog algebra to the index of its orbit."""
    L = catalog_algebra(field, name)
    orbits = orbit_partition(L, enumerate_pnilpotent_pmaps(L))
    return {images: i for i, orbit in enumerate(orbits) for images in orbit.members}


def test_enumerate_heisenberg():
    """Tests the number of [p]-nilpotent [p]-maps on the Heisenberg algebra."""
    assert len(enumerate_pnilpotent_pmaps(catalog_algebra(GF2, "L_{3,2}"))) == 4
    assert len(enumerate_pnilpotent_pmaps(catalog_algebra(GF3, "L_{3,2}"))) == 9


def test_enumerate_not_restrictable():
    """Tests that L_{4,3} in characteristic 2 has no [p]-map."""
    assert enumerate_pnilpotent_pmaps(catalog_algebra(GF2, "L_{4,3}")) == []


def test_enumerate_dimension_one():
    """Tests that only the zero map is [p]-nilpotent on L_{1,1}."""
    assert enumerate_pnilpotent_pmaps(catalog_algebra(GF5, "L_{1,1}")) == [((0,),)]


def test_enumerate_is_deterministic():
    """Tests that the enumeration order does not depend on the number of workers."""
    L = catalog_algebra(GF3, "L_{4,2}")
    assert enumerate_pnilpotent_pmaps(L) == enumerate_pnilpotent_pmaps(L, workers=2)


def test_orbit_sizes():
    """Tests the orbit sizes on the Heisenberg algebra."""
    L2 = catalog_algebra(GF2, "L_{3,2}")
    orbits = orbit_partition(L2, enumerate_pnilpotent_pmaps(L2))
    assert [orbit.size for orbit in orbits] == [1, 3]

    L3 = catalog_algebra(GF3, "L_{3,2}")
    orbits = orbit_partition(L3, enumerate_pnilpotent_pmaps(L3))
    assert [orbit.size for orbit in orbits] == [1, 8]
    assert orbits[0].representative == ((0, 0, 0),) * 3


@pytest.mark.parametrize(
    "field, name",
    [(GF2, "L_{3,2}"), (GF3, "L_{3,2}"), (GF2, "L_{4,3}"), (GF3, "L_{4,3}"), (GF2, "L_{2,1}")],
)
def test_generators_give_group_orbits(field, name):
    """Tests that the generators and the whole group give the same partition."""
    L = catalog_algebra(field, name)
    pmaps = enumerate_pnilpotent_pmaps(L)
    by_generators = orbit_partition(L, pmaps)
    by_group = orbit_partition(L, pmaps, generators=list(enumerate_automorphisms(L)))
    assert [orbit.members for orbit in by_generators] == [orbit.members for orbit in by_group]


@pytest.mark.parametrize(
    "field, name, orbit_count",
    [
        (GF3, "L_{3,2}", 2),
        (GF2, "L_{3,2}", 2),
        (GF3, "L_{4,2}", 8),
        (GF2, "L_{4,2}", 8),
        (GF2, "L_{4,1}", 5),
        (GF3, "L_{4,3}", 5),
        (GF5, "L_{4,3}", 5),
        (GF2, "L_{4,3}", 0),
        (GF3, "L_{3,1}", 3),
        (GF4, "L_{3,2}", 2),
        (GF5, "L_{3,2}", 2),
        (GF9, "L_{3,2}", 2),
        (GF4, "L_{4,2}", 8),
        (GF5, "L_{4,2}", 8),
        (GF9, "L_{4,3}", 5),
    ],
    ids=repr,
)
def test_cross_check(field, name, orbit_count):
    """Tests that the orbits match the class lists one to one."""
    report = cross_check(catalog_algebra(field, name))
    assert report.ok, report.mismatches
    assert len(report.orbits) == orbit_count
    assert sum(orbit["size"] for orbit in report.orbits) == report.total


def parameter_tuples(family, F):
    if family in ("K_{3,2}^1", "K_{4,2}^1", "K_{4,2}^4"):
        return [(xi,) for xi in F.elements]
    if family == "L_{4,3}^3":
        return [(beta,) for beta in F.nonzero]
    return [(alpha, beta) for alpha in F.elements for beta in F.nonzero]


@pytest.mark.parametrize(
    "family, field",
    [
        ("K_{3,2}^1", GF2),
        ("K_{3,2}^1", GF4),
        ("K_{4,2}^1", GF2),
        ("K_{4,2}^1", GF4),
        ("K_{4,2}^4", GF2),
        ("K_{4,2}^4", GF4),
        ("K_{4,3}^3", GF3),
        ("L_{4,3}^3", GF5),
    ],
    ids=repr,
)
def test_params_equivalent_matches_orbits(family, field):
    """Tests params_equivalent against orbit membership for all parameter pairs."""
    index = orbit_index(field, IsoLabel(family, parameter_tuples(family, field)[0]).algebra_name)
    orbit_of = {
        params: index[representative_images(IsoLabel(family, params))]
        for params in parameter_tuples(family, field)
    }
    for p1, p2 in itertools.product(orbit_of, repeat=2):
        assert params_equivalent(family, field, p1, p2) == (orbit_of[p1] == orbit_of[p2]), (p1, p2)


def test_cross_check_catches_mislabelled_member(monkeypatch):
    """Tests that a member labelled unlike its orbit representative is reported."""
    classify = oracle.classify
    member = ((0, 0, 1), (0, 0, 0), (0, 0, 0))

    def mislabel(R):
        if R.images == member:
            return IsoLabel("L_{3,2}^1")
        return classify(R)

    monkeypatch.setattr(oracle, "classify", mislabel)
    report = cross_check(catalog_algebra(GF3, "L_{3,2}"))
    assert not report.ok
    assert any("has a member labelled L_{3,2}^1" in m for m in report.mismatches)


def test_label_sample():
    """Tests that large orbits are sampled at evenly spaced members."""
    members = frozenset(((i,),) for i in range(10))
    orbit = oracle.Orbit(((0,),), members)
    assert oracle._label_sample(orbit, 64) == sorted(members)
    assert oracle._label_sample(orbit, 4) == [((0,),), ((3,),), ((6,),), ((9,),)]
    assert oracle._label_sample(orbit, 1) == [((0,),)]


@pytest.mark.parametrize(
    "field, name", [(GF4, "L_{2,1}"), (GF3, "L_{3,1}"), (GF2, "L_{4,1}")], ids=repr
)
def test_abelian_enumeration_matches_filter(field, name):
    """Tests the vectorized abelian enumeration against the matrix filter, in order."""
    L = catalog_algebra(field, name)
    vectors = list(itertools.product(range(field.q), repeat=L.dim))
    expected = [
        images
        for images in itertools.product(vectors, repeat=L.dim)
        if oracle._abelian_is_p_nilpotent(field, images)
    ]
    assert enumerate_pnilpotent_pmaps(L) == expected


def test_abelian_enumeration_counts():
    """Tests the number of nilpotent matrices over prime fields and the worker split."""
    assert len(enumerate_pnilpotent_pmaps(catalog_algebra(GF2, "L_{4,1}"))) == 2**12
    L = catalog_algebra(GF3, "L_{3,1}")
    pmaps = enumerate_pnilpotent_pmaps(L)
    assert len(pmaps) == 3**6
    assert enumerate_pnilpotent_pmaps(L, workers=2) == pmaps


def test_cross_check_labels_filiform():
    """Tests the orbit sizes and labels of L_{4,3} over GF(3)."""
    report = cross_check(catalog_algebra(GF3, "L_{4,3}"))
    assert report.total == 27
    assert report.group_order == 972
    assert sorted(str(orbit["label"]) for orbit in report.orbits) == [
        "K_{4,3}^1",
        "K_{4,3}^2",
        "K_{4,3}^3(0, 1)",
        "K_{4,3}^3(0, 2)",
        "K_{4,3}^3(1, 2)",
    ]
    for orbit in report.orbits:
        assert report.group_order % orbit["size"] == 0


def test_search_budget():
    """Tests that oversized searches raise SearchSpaceTooLarge."""
    L = catalog_algebra(GF3, "L_{3,2}")
    with pytest.raises(SearchSpaceTooLarge) as e:
        enumerate_pnilpotent_pmaps(L, budget=10)
    assert e.value.bound == 27
    assert e.value.budget == 10
    with pytest.raises(SearchSpaceTooLarge):
        orbit_partition(L, enumerate_pnilpotent_pmaps(L), budget=5)
    with pytest.raises(SearchSpaceTooLarge):
        cross_check(catalog_algebra(GF3, "L_{4,1}"))


def test_find_isomorphism():
    """Tests the search for an automorphism conjugating two [p]-maps."""
    L = catalog_algebra(GF3, "L_{3,2}")
    first = ((0, 0, 1), (0, 0, 0), (0, 0, 0))
    second = ((0, 0, 0), (0, 0, 2), (0, 0, 0))
    A = find_isomorphism(L, first, second)
    assert A is not None
    assert conjugate_pmap(L, A, first) == second
    assert find_isomorphism(L, first, ((0, 0, 0),) * 3) is None


def test_report_json():
    """Tests that the report serializes the same way twice."""
    report = cross_check(catalog_algebra(GF2, "L_{3,2}"))
    data = report.to_json()
    assert data["field"] == {"p": 2, "k": 1, "modulus": [0, 1]}
    assert data["orbit_count"] == 2
    assert data["mismatches"] == []
    assert [orbit["label"] for orbit in data["orbits"]] == [
        IsoLabel("K_{3,2}^1", (1,)).to_json(GF2),
        IsoLabel("K_{3,2}^1", (0,)).to_json(GF2),
    ]
    assert json.dumps(data, sort_keys=True) == json.dumps(
        cross_check(catalog_algebra(GF2, "L_{3,2}")).to_json(), sort_keys=True
    )
