"""Constructive recognition of nilpotent Lie algebras of dimension at most 4."""

import logging
from field import linalg
from liealg.lie_algebra import catalog_algebra, change_basis


def recognize(L):
    """
    Find the catalog algebra isomorphic to L and an explicit isomorphism.

    Args:
        L (LieAlgebra): A nilpotent Lie algebra of dimension at most 4.

    Returns:
        tuple: (name, T) where v -> vT maps coordinates in L's basis to
        coordinates in the standard basis of the catalog algebra `name`,
        and [u, v]T = [uT, vT].

    Raises:
        ValueError: If L is not nilpotent or the constructed basis fails.
    """
    F, n = L.field, L.dim
    nil_class = L.nilpotency_class()
    if nil_class is None:
        raise ValueError("not nilpotent")

    if nil_class == 1:
        return f"L_{{{n},1}}", linalg.identity(n)

    if nil_class == 2:
        name = f"L_{{{n},2}}"
        basis = _class_two_basis(L)
    elif nil_class == 3 and n == 4:
        name = "L_{4,3}"
        basis = _class_three_basis(L)
    else:
        raise ValueError(f"unsupported nilpotency class {nil_class} in dimension {n}")

    if not linalg.is_invertible(F, basis):
        raise ValueError("recognition produced a dependent basis")

    target = catalog_algebra(F, name)
    if not change_basis(L, basis).same_structure(target):
        raise ValueError(f"recognition of {name} failed to reproduce its structure constants")

    T = linalg.inverse(F, basis)
    logging.debug("Recognized %s with basis %s", name, basis)
    return name, T


def _class_two_basis(L):
    n = L.dim
    pair = next(
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) in L.brackets
    )
    u, v = L.basis()[pair[0]], L.basis()[pair[1]]
    w = L.bracket(u, v)
    basis = [u, v, w]
    if n == 4:
        span_w = linalg.rref(L.field, [w])
        z = next(c for c in L.center() if not linalg.in_span(L.field, span_w, c))
        basis.append(z)
    return tuple(basis)


def _class_three_basis(L):
    F = L.field
    derived = L.derived()
    centralizer = L.centralizer(derived)
    y1 = next(e for e in L.basis() if not linalg.in_span(F, centralizer, e))
    y2 = next(c for c in centralizer if not linalg.in_span(F, derived, c))
    y3 = L.bracket(y1, y2)
    y4 = L.bracket(y1, y3)
    return (y1, y2, y3, y4)
