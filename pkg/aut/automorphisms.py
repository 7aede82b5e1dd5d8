"""This module describes the automorphism groups of the catalog Lie algebras:
their matrix shapes, membership, enumeration, generators and the conjugation
action on [p]-maps."""

import itertools
import logging
from collections import deque
from field import linalg
from liealg.lie_algebra import CATALOG, catalog_algebra
from pmap.restricted import RestrictedAlgebra

ENUMERATION_BUDGET = 10**7

# free parameters of each shape, in enumeration order
SHAPE_PARAMETERS = {
    "L_{3,2}": ("a11", "a12", "a13", "a21", "a22", "a23"),
    "L_{4,2}": ("a11", "a12", "a13", "a14", "a21", "a22", "a23", "a24", "a43", "a44"),
    "L_{4,3}": ("a11", "a12", "a13", "a14", "a22", "a23", "a24"),
}


def is_automorphism(L, A):
    """
    Decide whether A is an invertible matrix with [x_i A, x_j A] = [x_i, x_j] A.

    Args:
        L (LieAlgebra): The algebra.
        A (tuple): A dim x dim matrix acting on row vectors.

    Returns:
        bool: True if A is an automorphism of L.
    """
    F, n = L.field, L.dim
    if len(A) != n or any(len(row) != n for row in A):
        return False
    if not linalg.is_invertible(F, A):
        return False
    basis = L.basis()
    for i in range(n):
        for j in range(i + 1, n):
            image = linalg.vec_mat(F, L.bracket(basis[i], basis[j]), A)
            if L.bracket(A[i], A[j]) != image:
                return False
    return True


def _require_catalog(L):
    if L.name not in CATALOG or not L.same_structure(catalog_algebra(L.field, L.name)):
        raise ValueError("not a catalog algebra in its standard basis, use recognize first")


def _is_abelian_name(name):
    return name.endswith(",1}")


def shape_matrix(F, name, params):
    """
    Build the automorphism of the named catalog algebra with the given free parameters.

    Args:
        F (FiniteField): The field.
        name (str): A non-abelian catalog name.
        params (tuple): Values for SHAPE_PARAMETERS[name].

    Returns:
        tuple: The matrix (possibly singular).
    """
    mul, sub = F.mul, F.sub
    if name == "L_{3,2}":
        a11, a12, a13, a21, a22, a23 = params
        d = sub(mul(a11, a22), mul(a12, a21))
        return ((a11, a12, a13), (a21, a22, a23), (0, 0, d))
    if name == "L_{4,2}":
        a11, a12, a13, a14, a21, a22, a23, a24, a43, a44 = params
        d = sub(mul(a11, a22), mul(a12, a21))
        return ((a11, a12, a13, a14), (a21, a22, a23, a24), (0, 0, d, 0), (0, 0, a43, a44))
    if name == "L_{4,3}":
        a11, a12, a13, a14, a22, a23, a24 = params
        d1 = mul(a11, a22)
        return (
            (a11, a12, a13, a14),
            (0, a22, a23, a24),
            (0, 0, d1, mul(a11, a23)),
            (0, 0, 0, mul(a11, d1)),
        )
    raise ValueError(f"no parameterized shape for {name}")


def _shape_is_valid(F, name, params):
    if name == "L_{3,2}":
        return F.sub(F.mul(params[0], params[4]), F.mul(params[1], params[3])) != 0
    if name == "L_{4,2}":
        det = F.sub(F.mul(params[0], params[5]), F.mul(params[1], params[4]))
        return det != 0 and params[9] != 0
    return params[0] != 0 and params[4] != 0


def _gl_order(q, n):
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order


def automorphism_group_order(L):
    """
    Order of Aut(L) for a catalog algebra, from the shape of its automorphisms.
    """
    _require_catalog(L)
    q = L.field.q
    if _is_abelian_name(L.name):
        return _gl_order(q, L.dim)
    if L.name == "L_{3,2}":
        return _gl_order(q, 2) * q**2
    if L.name == "L_{4,2}":
        return _gl_order(q, 2) * q**4 * q * (q - 1)
    return (q - 1) ** 2 * q**5


def enumerate_automorphisms(L, budget=ENUMERATION_BUDGET):
    """
    Yield every automorphism of a catalog algebra.

    Matrices come in lexicographic order of the free parameters of the shape
    (all entries for abelian algebras), singular ones filtered out.

    Raises:
        ValueError: If L is not a catalog algebra or the parameter space exceeds budget.
    """
    _require_catalog(L)
    F, n = L.field, L.dim
    if _is_abelian_name(L.name):
        count = n * n
    else:
        count = len(SHAPE_PARAMETERS[L.name])
    if F.q**count > budget:
        raise ValueError(
            f"enumerating Aut({L.name}) needs {F.q}^{count} candidates, over the budget {budget}"
        )

    for params in itertools.product(F.elements, repeat=count):
        if _is_abelian_name(L.name):
            A = tuple(tuple(params[i * n:(i + 1) * n]) for i in range(n))
            if linalg.is_invertible(F, A):
                yield A
        elif _shape_is_valid(F, L.name, params):
            yield shape_matrix(F, L.name, params)


def brute_force_automorphisms(L, budget=ENUMERATION_BUDGET):
    """
    Every automorphism of L found by filtering all dim x dim matrices.

    Raises:
        ValueError: If q^(dim^2) exceeds budget.
    """
    F, n = L.field, L.dim
    if F.q ** (n * n) > budget:
        raise ValueError(f"brute force needs {F.q}^{n * n} candidates, over the budget {budget}")
    result = []
    for entries in itertools.product(F.elements, repeat=n * n):
        A = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if is_automorphism(L, A):
            result.append(A)
    return result


def random_automorphism(L, rng):
    """
    Sample an automorphism of a catalog algebra uniformly at random.

    Args:
        L (LieAlgebra): A catalog algebra.
        rng (random.Random): The random source.
    """
    _require_catalog(L)
    F, n = L.field, L.dim
    while True:
        if _is_abelian_name(L.name):
            A = tuple(tuple(rng.randrange(F.q) for _ in range(n)) for _ in range(n))
            if linalg.is_invertible(F, A):
                return A
        else:
            params = tuple(rng.randrange(F.q) for _ in SHAPE_PARAMETERS[L.name])
            if _shape_is_valid(F, L.name, params):
                return shape_matrix(F, L.name, params)


def elementary(n, i, j, c):
    """The matrix I + c e_ij (0-based)."""
    return tuple(
        tuple(c if (r, s) == (i, j) else (1 if r == s else 0) for s in range(n))
        for r in range(n)
    )


def diagonal(entries):
    n = len(entries)
    return tuple(tuple(entries[r] if r == s else 0 for s in range(n)) for r in range(n))


def gl_generators(F, n):
    """Transvections I + c e_ij for c in an additive basis, and diag(g, 1, ..., 1)."""
    gens = [
        elementary(n, i, j, c)
        for i in range(n)
        for j in range(n)
        if i != j
        for c in F.additive_basis()
    ]
    gens.append(diagonal((F.primitive_element,) + (1,) * (n - 1)))
    return gens


def aut_generators(L):
    """
    A generating set of Aut(L) made of elementary parameter moves and diagonal scalings.

    Args:
        L (LieAlgebra): A catalog algebra.

    Returns:
        list: Automorphism matrices generating the whole group.
    """
    _require_catalog(L)
    F, n, name = L.field, L.dim, L.name
    g = F.primitive_element
    basis = F.additive_basis()

    if _is_abelian_name(name):
        return gl_generators(F, n)

    if name in ("L_{3,2}", "L_{4,2}"):
        gens = []
        for G in gl_generators(F, 2):
            det = F.sub(F.mul(G[0][0], G[1][1]), F.mul(G[0][1], G[1][0]))
            if n == 3:
                gens.append(((G[0][0], G[0][1], 0), (G[1][0], G[1][1], 0), (0, 0, det)))
            else:
                gens.append(
                    (
                        (G[0][0], G[0][1], 0, 0),
                        (G[1][0], G[1][1], 0, 0),
                        (0, 0, det, 0),
                        (0, 0, 0, 1),
                    )
                )
        for i in (0, 1):
            for j in range(2, n):
                gens.extend(elementary(n, i, j, c) for c in basis)
        if n == 4:
            gens.extend(elementary(4, 3, 2, c) for c in basis)
            gens.append(diagonal((1, 1, 1, g)))
        return gens

    gens = []
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 3)):
        gens.extend(elementary(4, i, j, c) for c in basis)
    for c in basis:
        gens.append(((1, 0, 0, 0), (0, 1, c, 0), (0, 0, 1, c), (0, 0, 0, 1)))
    gens.append(diagonal((g, 1, g, F.mul(g, g))))
    gens.append(diagonal((1, g, g, g)))
    return gens


def group_closure(F, generators, budget=ENUMERATION_BUDGET):
    """
    The group generated by invertible matrices, by breadth-first closure.

    Raises:
        ValueError: If the closure grows beyond budget elements.
    """
    n = len(generators[0])
    start = linalg.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for gen in generators:
            product = linalg.mat_mul(F, current, gen)
            if product not in seen:
                seen.add(product)
                if len(seen) > budget:
                    raise ValueError(f"group closure exceeds {budget} elements")
                queue.append(product)
    logging.debug("Closure of %d generators has %d elements", len(generators), len(seen))
    return seen


def conjugate_pmap(L, A, images, check=True, A_inv=None):
    """
    Conjugate a [p]-map by an automorphism: x phi' = ((x A) phi) A^-1.

    With this convention conjugate_pmap(AB, phi) = conjugate_pmap(A, conjugate_pmap(B, phi)).

    Args:
        L (LieAlgebra): The algebra.
        A (tuple): An automorphism of L.
        images (tuple): The images x_i^[p] of phi.
        check (bool): Whether to verify that A is an automorphism.
        A_inv (tuple | None): The inverse of A, when already known.

    Returns:
        tuple: The images of phi'.

    Raises:
        ValueError: If check is set and A is not an automorphism.
    """
    F = L.field
    if check and not is_automorphism(L, A):
        raise ValueError("not an automorphism")
    if A_inv is None:
        A_inv = linalg.inverse(F, A)
    R = RestrictedAlgebra(L, images, check=False)
    return tuple(linalg.vec_mat(F, R.evaluate(row), A_inv) for row in A)
