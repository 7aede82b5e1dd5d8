"""This module classifies [p]-nilpotent restricted Lie algebras of dimension at most 4:
it maps a restricted algebra to its class label, decides equivalence of family
parameters and lists every class over a given finite field."""

import logging
from field import linalg
from liealg.lie_algebra import CATALOG, catalog_algebra
from liealg.recognition import recognize
from pmap.restricted import (
    RestrictedAlgebra,
    is_p_nilpotent,
    is_restrictable,
    nilpotency_index,
    restricted_span,
)
from aut.automorphisms import shape_matrix
from aut.coefficient_actions import (
    heisenberg_coefficients,
    l42_coefficients,
    l43_coefficients,
)
from classify.iso_label import (
    FAMILIES,
    XI_FAMILIES,
    ClassList,
    IsoLabel,
    representative_images,
)


# ---- parameters ----

def _require_parameterized(family):
    if FAMILIES.get(family, 0) == 0:
        raise ValueError(f"family {family!r} has no parameters")


def params_equivalent(family, F, p1, p2):
    """
    Decide whether two parameter tuples of a family give equivalent [p]-maps.

    xi-families: xi1 + xi2 lies in the Artin-Schreier subspace K.
    L_{4,3}^3(beta): beta1 / beta2 is a square.
    K_{4,3}^3(alpha, beta): beta2 / beta1 is a square r^2 and one of
    +-r alpha2 +- alpha1 lies in K_beta1.

    Raises:
        ValueError: If the family has no parameters or a beta is zero.
    """
    _require_parameterized(family)
    if family in XI_FAMILIES:
        return F.in_artin_schreier(F.add(p1[0], p2[0]))

    if family == "L_{4,3}^3":
        if p1[0] == 0 or p2[0] == 0:
            raise ValueError("beta must be nonzero")
        return F.is_square(F.div(p1[0], p2[0]))[0]

    (alpha1, beta1), (alpha2, beta2) = p1, p2
    if beta1 == 0 or beta2 == 0:
        raise ValueError("beta must be nonzero")
    found, root = F.is_square(F.div(beta2, beta1))
    if not found:
        return False
    for r in (root, F.neg(root)):
        scaled = F.mul(r, alpha2)
        if F.in_k_beta(beta1, F.add(scaled, alpha1)) or F.in_k_beta(beta1, F.sub(scaled, alpha1)):
            return True
    return False


def canonical_params(family, F, params):
    """
    The smallest parameter tuple equivalent to params.

    Returns:
        tuple: min(xi + K) for the xi-families, min(beta (F*)^2) for
        L_{4,3}^3 and the lexicographically smallest equivalent (alpha, beta)
        for K_{4,3}^3.
    """
    _require_parameterized(family)
    if family in XI_FAMILIES:
        return (min(F.add(params[0], k) for k in F.artin_schreier_subspace()),)
    if family == "L_{4,3}^3":
        return (F.square_class(params[0])[0],)
    params = tuple(params)
    return min(
        (alpha, beta)
        for alpha in F.elements
        for beta in F.nonzero
        if params_equivalent(family, F, params, (alpha, beta))
    )


def canonical_parameter_list(family, F):
    """Every canonical parameter tuple of a family over F, sorted."""
    _require_parameterized(family)
    if family in XI_FAMILIES:
        return sorted({canonical_params(family, F, (xi,)) for xi in F.elements})
    if family == "L_{4,3}^3":
        return [(beta,) for beta in F.square_classes()]
    return sorted(
        {canonical_params(family, F, (alpha, beta)) for alpha in F.elements for beta in F.nonzero}
    )


def equivalence_witness(family, F, p1, p2):
    """
    An automorphism carrying the representative with parameters p1 to the one with p2.

    Returns:
        tuple | None: The matrix A with conjugate_pmap(A, rep(p1)) = rep(p2),
        or None when the parameters are not equivalent.
    """
    if not params_equivalent(family, F, p1, p2):
        return None

    if family in XI_FAMILIES:
        target = F.add(p1[0], p2[0])
        delta = next(d for d in F.elements if F.add(d, F.mul(d, d)) == target)
        n = 3 if family == "K_{3,2}^1" else 4
        return tuple(
            tuple(delta if (r, s) == (1, 0) else (1 if r == s else 0) for s in range(n))
            for r in range(n)
        )

    if family == "L_{4,3}^3":
        eps = F.sqrt(F.div(p1[0], p2[0]))
        return shape_matrix(F, "L_{4,3}", (eps, 0, 0, 0, 1, 0, 0))

    (alpha1, beta1), (alpha2, beta2) = p1, p2
    root = F.sqrt(F.div(beta2, beta1))
    for lam in (root, F.neg(root)):
        target = F.sub(F.mul(lam, alpha2), alpha1)
        for delta in F.elements:
            if F.add(F.mul(beta1, F.power(delta, 3)), delta) == target:
                return shape_matrix(F, "L_{4,3}", (1, delta, 0, 0, lam, 0, 0))
    return None


# ---- classification ----

def standard_form(R):
    """
    Recognize the underlying algebra and move the [p]-map to its standard basis.

    Returns:
        tuple: (catalog name, RestrictedAlgebra on the catalog algebra).
    """
    name, T = recognize(R.algebra)
    target = catalog_algebra(R.field, name)
    if R.algebra.same_structure(target):
        return name, RestrictedAlgebra(target, R.images, check=False)
    return name, R.transport(T, target)


def classify(R):
    """
    The class label of a [p]-nilpotent restricted Lie algebra.

    Args:
        R (RestrictedAlgebra): A valid restricted algebra of dimension at most 4.

    Returns:
        IsoLabel: The label, with canonical parameters.

    Raises:
        ValueError: If R is not [p]-nilpotent or its algebra is not nilpotent.
    """
    if not is_p_nilpotent(R):
        raise ValueError("not [p]-nilpotent")
    name, S = standard_form(R)
    if name.endswith(",1}"):
        label = _classify_abelian(name, S)
    elif name == "L_{3,2}":
        label = _classify_heisenberg(S)
    elif name == "L_{4,2}":
        label = _classify_l42(S)
    else:
        label = _classify_l43(S)
    logging.debug("Classified %s as %s", name, label)
    return label


def _classify_abelian(name, S):
    F, n = S.field, S.algebra.dim
    image = linalg.rref(F, S.images)
    r1 = len(image)
    if n <= 3:
        return IsoLabel(f"L_{{{n},1}}^{r1 + 1}")
    if r1 == 2:
        r2 = linalg.rank(F, [S.evaluate(v) for v in image])
        return IsoLabel(f"L_{{4,1}}^{3 if r2 == 0 else 4}")
    index = {0: 1, 1: 2, 3: 5}[r1]
    return IsoLabel(f"L_{{4,1}}^{index}")


def _classify_heisenberg(S):
    F = S.field
    alpha, beta = heisenberg_coefficients(S.images)
    if F.p == 2:
        xi = F.mul(alpha, beta)
        return IsoLabel("K_{3,2}^1", canonical_params("K_{3,2}^1", F, (xi,)))
    return IsoLabel("L_{3,2}^1" if alpha == beta == 0 else "L_{3,2}^2")


def center_form(R):
    """
    The shape of the [p]-map on the center of an algebra isomorphic to L_{4,2}.

    Returns:
        str: "zero", "x3->x4" (x3^[p] != 0) or "x4->x3" (x3^[p] = 0, x4^[p] != 0),
        read in the standard basis.

    Raises:
        ValueError: If the algebra is not isomorphic to L_{4,2}.
    """
    name, S = standard_form(R)
    if name != "L_{4,2}":
        raise ValueError(f"center forms are defined on L_{{4,2}}, got {name}")
    return _center_form(S)


def _center_form(S):
    z3, z4 = S.images[2], S.images[3]
    if not linalg.is_zero(z3):
        return "x3->x4"
    if not linalg.is_zero(z4):
        return "x4->x3"
    return "zero"


def _classify_l42(S):
    F = S.field
    alpha1, alpha2, beta1, beta2 = l42_coefficients(S.images)
    form = _center_form(S)
    even = F.p == 2

    if form == "zero":
        if even:
            if beta1 == beta2 == 0:
                xi = F.mul(alpha1, alpha2)
                return IsoLabel("K_{4,2}^1", canonical_params("K_{4,2}^1", F, (xi,)))
            kernel_value = F.add(
                F.add(F.mul(beta2, alpha1), F.mul(beta1, alpha2)),
                F.sqrt(F.mul(beta1, beta2)),
            )
            return IsoLabel("K_{4,2}^2" if kernel_value == 0 else "K_{4,2}^3")
        image = linalg.rref(F, S.images[:2])
        if not image:
            return IsoLabel("L_{4,2}^1")
        if len(image) == 2:
            return IsoLabel("L_{4,2}^4")
        return IsoLabel("L_{4,2}^2" if image == ((0, 0, 1, 0),) else "L_{4,2}^3")

    if form == "x3->x4":
        w3, w4 = S.images[2][2], S.images[2][3]
        ratio = F.div(w3, w4)
        reduced = (F.sub(alpha1, F.mul(beta1, ratio)), F.sub(alpha2, F.mul(beta2, ratio)))
        if even:
            xi = F.mul(reduced[0], reduced[1])
            return IsoLabel("K_{4,2}^4", canonical_params("K_{4,2}^4", F, (xi,)))
        return IsoLabel("L_{4,2}^5" if reduced == (0, 0) else "L_{4,2}^6")

    if beta1 == beta2 == 0:
        return IsoLabel("K_{4,2}^5" if even else "L_{4,2}^7")
    return IsoLabel("K_{4,2}^6" if even else "L_{4,2}^8")


def _classify_l43(S):
    F = S.field
    if F.p == 2:
        raise ValueError("not restrictable")
    alpha, beta, gamma = l43_coefficients(S.images)
    if F.p == 3:
        if gamma:
            return IsoLabel("K_{4,3}^2")
        if beta:
            return IsoLabel("K_{4,3}^3", canonical_params("K_{4,3}^3", F, (alpha, beta)))
        return IsoLabel("K_{4,3}^1")
    if gamma:
        return IsoLabel("L_{4,3}^4")
    if beta:
        return IsoLabel("L_{4,3}^3", canonical_params("L_{4,3}^3", F, (beta,)))
    return IsoLabel("L_{4,3}^2" if alpha else "L_{4,3}^1")


def are_isomorphic(R1, R2):
    """
    Decide whether two [p]-nilpotent restricted algebras are isomorphic.

    Algebras over different fields or with non-isomorphic underlying Lie
    algebras are reported as non-isomorphic.
    """
    if R1.field != R2.field or R1.algebra.dim != R2.algebra.dim:
        return False
    if recognize(R1.algebra)[0] != recognize(R2.algebra)[0]:
        return False
    return classify(R1) == classify(R2)


def invariant_profile(R):
    """
    Basis-free invariants of a restricted algebra, used as quick non-isomorphism checks.

    Returns:
        dict: Dimensions of L^[p] (the span of all p-th powers) and of its
        meet with L', the two containments between them and the
        [p]-nilpotency index.
    """
    F, L = R.field, R.algebra
    image = restricted_span(R, L.basis())
    derived = L.derived()
    return {
        "image_dim": len(image),
        "image_meet_derived_dim": linalg.intersection_dim(F, image, derived),
        "image_in_derived": linalg.is_subspace(F, image, derived),
        "derived_in_image": linalg.is_subspace(F, derived, image),
        "nilpotency_index": nilpotency_index(R),
    }


# ---- class lists ----

def _families_for(name, p):
    if name.endswith(",1}"):
        n = CATALOG[name][0]
        count = {1: 1, 2: 2, 3: 3, 4: 5}[n]
        return [f"L_{{{n},1}}^{i}" for i in range(1, count + 1)]
    if name == "L_{3,2}":
        return ["K_{3,2}^1"] if p == 2 else ["L_{3,2}^1", "L_{3,2}^2"]
    if name == "L_{4,2}":
        if p == 2:
            return [f"K_{{4,2}}^{i}" for i in range(1, 7)]
        return [f"L_{{4,2}}^{i}" for i in range(1, 9)]
    if p == 3:
        return [f"K_{{4,3}}^{i}" for i in range(1, 4)]
    return [f"L_{{4,3}}^{i}" for i in range(1, 5)]


def list_classes(L):
    """
    One representative per class of [p]-nilpotent [p]-maps on a catalog algebra.

    Args:
        L (LieAlgebra): A catalog algebra in its standard basis.

    Returns:
        ClassList: The classes in label order; parameterized families are
        expanded over their canonical parameters. Empty with a note when L
        admits no [p]-map.
    """
    if L.name is None:
        raise ValueError("not a catalog algebra, use recognize first")
    F = L.field
    if not is_restrictable(L):
        return ClassList(F, L.name, [], note="not restrictable")

    entries = []
    for family in _families_for(L.name, F.p):
        if FAMILIES[family] == 0:
            labels = [IsoLabel(family)]
        else:
            labels = [IsoLabel(family, params) for params in canonical_parameter_list(family, F)]
        entries.extend((label, representative_images(label)) for label in labels)
    logging.info("%s over %r has %d classes", L.name, F, len(entries))
    return ClassList(F, L.name, entries)


def representative(L, label):
    """
    The representative restricted algebra of a class on the catalog algebra L.

    Raises:
        ValueError: If the label does not belong to L or to its characteristic.
    """
    if label.algebra_name != L.name:
        raise ValueError(f"{label.family} is not a class of {L.name}")
    label.check_characteristic(L.field.p)
    return RestrictedAlgebra(L, representative_images(label))
