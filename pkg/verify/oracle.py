"""This module verifies the classification by brute force: it enumerates every
[p]-nilpotent [p]-map on a catalog algebra, partitions them into automorphism
orbits and compares the orbits with the class lists."""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field as dataclass_field
from multiprocessing import Pool
import numpy as np
from field import linalg
from pmap.restricted import RestrictedAlgebra, ad_power_preimage, is_p_nilpotent
from aut.automorphisms import (
    aut_generators,
    automorphism_group_order,
    conjugate_pmap,
    enumerate_automorphisms,
)
from classify.classifier import classify, list_classes

BUDGET_PMAPS = 10**7
BUDGET_CONJ = 10**8
LABEL_SAMPLE = 64
ABELIAN_BLOCK = 2**15


class SearchSpaceTooLarge(ValueError):
    """
    Raised when a brute-force search would exceed its budget.

    Attributes:
        bound (int): The size of the search space.
        budget (int): The configured limit.
    """

    def __init__(self, what, bound, budget):
        super().__init__(f"search space too large: {what} needs {bound} steps, budget {budget}")
        self.what = what
        self.bound = bound
        self.budget = budget


@dataclass
class Orbit:
    """
    An automorphism orbit of [p]-maps.

    Attributes:
        representative (tuple): The smallest member, as images.
        members (frozenset): Every member.
    """

    representative: tuple
    members: frozenset

    @property
    def size(self):
        return len(self.members)


@dataclass
class OrbitReport:
    """
    The outcome of comparing brute-force orbits with the class list of an algebra.

    Attributes:
        algebra (str): The catalog name.
        field (FiniteField): The ground field.
        total (int): Number of [p]-nilpotent [p]-maps.
        group_order (int): Order of the automorphism group.
        orbits (list): Dictionaries {size, representative, label}.
        mismatches (list): Human-readable disagreements, empty on success.
    """

    algebra: str
    field: object
    total: int = 0
    group_order: int = 0
    orbits: list = dataclass_field(default_factory=list)
    mismatches: list = dataclass_field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def to_json(self):
        F = self.field
        return {
            "algebra": self.algebra,
            "field": F.spec.to_json(),
            "total": self.total,
            "group_order": self.group_order,
            "orbit_count": len(self.orbits),
            "orbits": [
                {
                    "size": orbit["size"],
                    "representative": [[F.to_coeffs(a) for a in v] for v in orbit["representative"]],
                    "label": None if orbit["label"] is None else orbit["label"].to_json(F),
                }
                for orbit in self.orbits
            ],
            "mismatches": list(self.mismatches),
        }


# ---- enumeration ----

def _central_key_indices(L, particulars, center):
    """
    Indices of the central basis vectors when every particular solution is zero
    and the center is spanned by basis vectors; None otherwise.

    In that case every image is central and [p]-nilpotency only depends on the
    images of the central basis vectors.
    """
    if any(not linalg.is_zero(b) for b in particulars):
        return None
    indices = []
    for row in center:
        nonzero = [j for j, a in enumerate(row) if a]
        if len(nonzero) != 1:
            return None
        indices.append(nonzero[0])
    return tuple(indices)


def _abelian_is_p_nilpotent(F, images):
    """
    On an abelian algebra phi^m(x) = x^(p^m) M^(p^(m-1)) ... M^(p) M, where M
    holds the images as rows and ^(p) twists every entry by Frobenius.
    """
    M = tuple(tuple(v) for v in images)
    product = M
    for _ in range(len(M) - 1):
        if all(linalg.is_zero(row) for row in product):
            return True
        product = linalg.mat_mul(F, linalg.mat_map(F.frobenius, product), M)
    return all(linalg.is_zero(row) for row in product)


def _twisted_powers_vanish(F, M):
    """
    Vectorized _abelian_is_p_nilpotent over a stack of matrices M of shape (N, n, n).

    Returns:
        numpy.ndarray: A boolean mask of the [p]-nilpotent matrices.
    """
    product = M
    for _ in range(M.shape[1] - 1):
        terms = (product**F.p)[:, :, :, np.newaxis] * M[:, np.newaxis, :, :]
        product = np.add.reduce(terms, axis=2)
    return ~np.any(product.view(np.ndarray), axis=(1, 2))


def _lex_block(q, length):
    """All vectors of the given length over range(q), in lexicographic order."""
    index = np.arange(q**length, dtype=np.int64)
    weights = q ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (index[:, np.newaxis] // weights) % q


def _abelian_slice(args):
    """
    The [p]-nilpotent maps on an abelian algebra of dimension n >= 2 whose first
    image is one of first_rows, in lexicographic order of the images.
    """
    F, n, first_rows = args
    rest = _lex_block(F.q, n * (n - 1)).reshape(-1, n - 1, n)
    result = []
    for first in first_rows:
        head = np.array(first, dtype=np.int64)
        for start in range(0, len(rest), ABELIAN_BLOCK):
            block = rest[start : start + ABELIAN_BLOCK]
            heads = np.broadcast_to(head, (len(block), 1, n))
            M = F.GF(np.concatenate([heads, block], axis=1))
            kept = M[_twisted_powers_vanish(F, M)].view(np.ndarray).tolist()
            result.extend(tuple(tuple(row) for row in matrix) for matrix in kept)
    return result


def _filter_slice(args):
    L, cosets, first_indices, key_indices = args
    F = L.field
    abelian = L.is_abelian
    result = []
    cache = {}
    for first in first_indices:
        for rest in itertools.product(*cosets[1:]):
            images = (cosets[0][first],) + rest
            if abelian:
                keep = _abelian_is_p_nilpotent(F, images)
            elif key_indices is not None:
                key = tuple(images[j] for j in key_indices)
                if key not in cache:
                    cache[key] = is_p_nilpotent(RestrictedAlgebra(L, images, check=False))
                keep = cache[key]
            else:
                keep = is_p_nilpotent(RestrictedAlgebra(L, images, check=False))
            if keep:
                result.append(images)
    return result


def enumerate_pnilpotent_pmaps(L, budget=BUDGET_PMAPS, workers=1):
    """
    Every [p]-nilpotent [p]-map on L, in deterministic order.

    For each x_i the solutions of ad(b) = ad(x_i)^p form a coset of the
    center; the candidates are the Cartesian product of these cosets.

    Args:
        L (LieAlgebra): The algebra.
        budget (int): Bound on the number of candidates.
        workers (int): Number of processes filtering disjoint slices.

    Returns:
        list: Images tuples, in lexicographic order of coset coordinates.

    Raises:
        SearchSpaceTooLarge: If |Z(L)|^dim exceeds budget.
    """
    F, n = L.field, L.dim
    particulars = [ad_power_preimage(L, i) for i in range(n)]
    if any(b is None for b in particulars):
        logging.info("%s over %r is not restrictable", L.name, F)
        return []

    center = L.center()
    bound = F.q ** (len(center) * n)
    if bound > budget:
        raise SearchSpaceTooLarge(f"[p]-maps on {L.name} over {F!r}", bound, budget)

    offsets = linalg.span_elements(F, list(center), n)
    cosets = [[linalg.vec_add(F, b, z) for z in offsets] for b in particulars]
    key_indices = _central_key_indices(L, particulars, center)
    logging.info("Filtering %d candidate [p]-maps on %s over %r", bound, L.name, F)

    indices = list(range(len(cosets[0])))
    if L.is_abelian and n > 1:
        task, make_args = _abelian_slice, lambda s: (F, n, [cosets[0][i] for i in s])
    else:
        task, make_args = _filter_slice, lambda s: (L, cosets, s, key_indices)
    if workers > 1 and len(indices) > 1:
        slices = [indices[w::workers] for w in range(workers)]
        with Pool(workers) as pool:
            parts = pool.map(task, [make_args(s) for s in slices])
        result = sorted(itertools.chain.from_iterable(parts), key=lambda im: _coset_order(cosets, im))
    else:
        result = task(make_args(indices))

    logging.info("%d [p]-nilpotent [p]-maps on %s over %r", len(result), L.name, F)
    return result


def _coset_order(cosets, images):
    return tuple(coset.index(v) for coset, v in zip(cosets, images))


# ---- orbits ----

def _with_inverses(L, matrices):
    return [(A, linalg.inverse(L.field, A)) for A in matrices]


def orbit_of(L, images, pairs, budget=BUDGET_CONJ):
    """
    The orbit of a [p]-map under the group generated by the given automorphisms.

    Args:
        L (LieAlgebra): The algebra.
        images (tuple): The starting [p]-map.
        pairs (list): Pairs (A, A^-1) of generators.
        budget (int): Bound on the number of conjugations.

    Raises:
        SearchSpaceTooLarge: If the breadth-first closure exceeds budget.
    """
    images = tuple(images)
    seen = {images}
    queue = deque([images])
    steps = 0
    while queue:
        current = queue.popleft()
        for A, A_inv in pairs:
            steps += 1
            if steps > budget:
                raise SearchSpaceTooLarge(f"orbit closure on {L.name}", steps, budget)
            image = conjugate_pmap(L, A, current, check=False, A_inv=A_inv)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def orbit_partition(L, pmaps, generators=None, budget=BUDGET_CONJ):
    """
    Partition [p]-maps into automorphism orbits.

    Args:
        L (LieAlgebra): A catalog algebra.
        pmaps (list): A conjugation-stable list of [p]-maps.
        generators (list | None): Automorphisms to close under; aut_generators(L)
            by default, or the full group for cross-validation.
        budget (int): Bound on the total number of conjugations.

    Returns:
        list: Orbits sorted by (size, representative).

    Raises:
        SearchSpaceTooLarge: If the conjugation count would exceed budget.
    """
    if generators is None:
        generators = aut_generators(L)
    pairs = _with_inverses(L, generators)
    needed = len(pmaps) * len(pairs)
    if needed > budget:
        raise SearchSpaceTooLarge(f"orbit partition on {L.name}", needed, budget)

    remaining = set(map(tuple, pmaps))
    orbits = []
    for images in pmaps:
        if images not in remaining:
            continue
        members = orbit_of(L, images, pairs, budget)
        remaining -= members
        orbits.append(Orbit(min(members), frozenset(members)))
    orbits.sort(key=lambda orbit: (orbit.size, orbit.representative))
    logging.info("%d orbits on %s over %r", len(orbits), L.name, L.field)
    return orbits


# ---- cross check ----

def _label_sample(orbit, size):
    members = sorted(orbit.members)
    step = max(1, -(-len(members) // size))
    return members[::step]


def cross_check(
    L, budget_pmaps=BUDGET_PMAPS, budget_conj=BUDGET_CONJ, workers=1, label_sample=LABEL_SAMPLE
):
    """
    Compare the brute-force orbits on a catalog algebra with its class list.

    Every orbit must carry one label: members are classified in full when the
    orbit has at most label_sample of them, otherwise at evenly spaced positions
    of the sorted orbit.

    Returns:
        OrbitReport: The report; its mismatches are empty when the orbits
        match the classes one to one.

    Raises:
        SearchSpaceTooLarge: If a search exceeds its budget.
    """
    F = L.field
    report = OrbitReport(L.name, F, group_order=automorphism_group_order(L))
    pmaps = enumerate_pnilpotent_pmaps(L, budget_pmaps, workers)
    report.total = len(pmaps)
    orbits = orbit_partition(L, pmaps, budget=budget_conj)
    classes = list_classes(L)

    if sum(orbit.size for orbit in orbits) != report.total:
        report.mismatches.append("orbit sizes do not add up to the number of [p]-maps")
    if len(orbits) != len(classes):
        report.mismatches.append(f"{len(orbits)} orbits but {len(classes)} classes")

    seen_labels = set()
    for orbit in orbits:
        if report.group_order % orbit.size:
            report.mismatches.append(
                f"orbit of size {orbit.size} does not divide |Aut| = {report.group_order}"
            )
        label = classify(RestrictedAlgebra(L, orbit.representative, check=False))
        if label in seen_labels:
            report.mismatches.append(f"label {label} is shared by two orbits")
        seen_labels.add(label)
        for images in _label_sample(orbit, label_sample):
            other = classify(RestrictedAlgebra(L, images, check=False))
            if other != label:
                report.mismatches.append(f"orbit of {label} has a member labelled {other}")
                break
        report.orbits.append(
            {"size": orbit.size, "representative": orbit.representative, "label": label}
        )

    for label, images in classes.entries:
        hits = [orbit for orbit in orbits if images in orbit.members]
        if len(hits) != 1:
            report.mismatches.append(f"representative of {label} lies in {len(hits)} orbits")
        elif classify(RestrictedAlgebra(L, hits[0].representative, check=False)) != label:
            report.mismatches.append(f"representative of {label} lies in an orbit labelled otherwise")

    if report.mismatches:
        for mismatch in report.mismatches:
            logging.error("%s over %r: %s", L.name, F, mismatch)
    else:
        logging.info("%s over %r: %d orbits match the classes", L.name, F, len(orbits))
    return report


def find_isomorphism(L, images1, images2, budget=BUDGET_CONJ):
    """
    Search the automorphism group for A with conjugate_pmap(A, images1) = images2.

    Returns:
        tuple | None: Such an automorphism, or None.
    """
    target = tuple(map(tuple, images2))
    for A in enumerate_automorphisms(L, budget):
        if conjugate_pmap(L, A, images1, check=False) == target:
            return A
    return None
