"""Closed-form actions of automorphisms on the coefficients of [p]-maps.

Each function takes an automorphism A of a catalog algebra (in its standard
shape) and the coefficient vector of a [p]-map in one of the normal forms
below, and returns the coefficients of conjugate_pmap(A, phi). They are
independent of the generic conjugation and serve to cross-check it.

Normal forms:
    L_{3,2}: x1 -> alpha x3, x2 -> beta x3, x3 -> 0.
    L_{4,2}: x1 -> a1 x3 + b1 x4, x2 -> a2 x3 + b2 x4, with the center
        mapped by one of "zero", "x3->x4" or "x4->x3".
    L_{4,3}: x1 -> alpha x4, x2 -> beta x4, x3 -> gamma x4, x4 -> 0.
"""

CENTER_FORMS = ("zero", "x3->x4", "x4->x3")


# ---- coefficient extraction ----

def heisenberg_coefficients(images):
    return images[0][2], images[1][2]


def heisenberg_images(alpha, beta):
    return ((0, 0, alpha), (0, 0, beta), (0, 0, 0))


def l42_coefficients(images):
    """(a1, a2, b1, b2) read from the x3 and x4 coordinates of x1^[p] and x2^[p]."""
    return images[0][2], images[1][2], images[0][3], images[1][3]


def l42_images(coeffs, center_form="zero"):
    """
    Images of the L_{4,2} normal form.

    Raises:
        ValueError: On an unknown center form.
    """
    a1, a2, b1, b2 = coeffs
    if center_form == "zero":
        x3, x4 = (0, 0, 0, 0), (0, 0, 0, 0)
    elif center_form == "x3->x4":
        x3, x4 = (0, 0, 0, 1), (0, 0, 0, 0)
    elif center_form == "x4->x3":
        x3, x4 = (0, 0, 0, 0), (0, 0, 1, 0)
    else:
        raise ValueError(f"unknown center form {center_form!r}")
    return ((0, 0, a1, b1), (0, 0, a2, b2), x3, x4)


def l43_coefficients(images):
    return images[0][3], images[1][3], images[2][3]


def l43_images(coeffs):
    alpha, beta, gamma = coeffs
    return ((0, 0, 0, alpha), (0, 0, 0, beta), (0, 0, 0, gamma), (0, 0, 0, 0))


# ---- L_{3,2} ----

def heisenberg_action(F, A, coeffs):
    """
    Action on (alpha, beta) for the Heisenberg algebra.

    alpha' = (a11^p alpha + a12^p beta + e a11 a12) / d and
    beta' = (a21^p alpha + a22^p beta + e a21 a22) / d, where e = 1 in
    characteristic 2 and e = 0 otherwise.
    """
    alpha, beta = coeffs
    frob, mul, add = F.frobenius, F.mul, F.add
    d = F.sub(mul(A[0][0], A[1][1]), mul(A[0][1], A[1][0]))
    d_inv = F.inv(d)
    result = []
    for row in (A[0], A[1]):
        value = add(mul(frob(row[0]), alpha), mul(frob(row[1]), beta))
        if F.p == 2:
            value = add(value, mul(row[0], row[1]))
        result.append(mul(value, d_inv))
    return tuple(result)


# ---- L_{4,2} ----

def _l42_blocks(F, A):
    d = F.sub(F.mul(A[0][0], A[1][1]), F.mul(A[0][1], A[1][0]))
    return d, A[3][2], A[3][3]


def _require_odd(F):
    if F.p == 2:
        raise ValueError("the closed form holds in odd characteristic only")


def l42_tensor_matrix(F, A):
    """
    Matrix M with (a1, a2, b1, b2) M = coefficients after conjugation, when the
    center is mapped to zero, in odd characteristic.

    M is the Kronecker product of the inverse center block
    [[1/d, 0], [-a43/(d a44), 1/a44]] with [[a11^p, a21^p], [a12^p, a22^p]].
    """
    _require_odd(F)
    d, a43, a44 = _l42_blocks(F, A)
    frob = F.frobenius
    center_inv = (
        (F.inv(d), 0),
        (F.neg(F.div(a43, F.mul(d, a44))), F.inv(a44)),
    )
    twisted = (
        (frob(A[0][0]), frob(A[1][0])),
        (frob(A[0][1]), frob(A[1][1])),
    )
    return tuple(
        tuple(
            F.mul(center_inv[r][s], twisted[i][j])
            for s in range(2)
            for j in range(2)
        )
        for r in range(2)
        for i in range(2)
    )


def _twisted_rows(F, A, coeffs):
    a1, a2, b1, b2 = coeffs
    frob, mul, add = F.frobenius, F.mul, F.add
    alphas, betas = [], []
    for row in (A[0], A[1]):
        alphas.append(add(mul(frob(row[0]), a1), mul(frob(row[1]), a2)))
        betas.append(add(mul(frob(row[0]), b1), mul(frob(row[1]), b2)))
    return alphas, betas


def l42_x3_to_x4_action(F, A, coeffs):
    """
    Action on (a1, a2, b1, b2) when x3^[p] = x4 and x4^[p] = 0, odd characteristic.

    Only automorphisms with a43 = 0 and a44 = d^p keep this center form; on them
    a_i' = (a_i1^p a1 + a_i2^p a2) / d and b_i' = (a_i1^p b1 + a_i2^p b2 + a_i3^p) / d^p.

    Raises:
        ValueError: In characteristic 2 or if A does not keep the center form.
    """
    _require_odd(F)
    d, a43, a44 = _l42_blocks(F, A)
    if a43 != 0 or a44 != F.frobenius(d):
        raise ValueError("automorphism does not stabilize the center form x3 -> x4")
    alphas, betas = _twisted_rows(F, A, coeffs)
    d_inv, dp_inv = F.inv(d), F.inv(F.frobenius(d))
    new_alphas = [F.mul(a, d_inv) for a in alphas]
    new_betas = [
        F.mul(F.add(b, F.frobenius(row[2])), dp_inv) for b, row in zip(betas, (A[0], A[1]))
    ]
    return new_alphas[0], new_alphas[1], new_betas[0], new_betas[1]


def l42_x4_to_x3_action(F, A, coeffs):
    """
    Action on (a1, a2, b1, b2) when x4^[p] = x3 and x3^[p] = 0, odd characteristic.

    Only automorphisms with a44^p = d keep this center form; on them
    a_i' = (s_i + a_i4^p) / d - t_i a43 / (d a44) and b_i' = t_i / a44, where
    s_i = a_i1^p a1 + a_i2^p a2 and t_i = a_i1^p b1 + a_i2^p b2.

    Raises:
        ValueError: In characteristic 2 or if A does not keep the center form.
    """
    _require_odd(F)
    d, a43, a44 = _l42_blocks(F, A)
    if F.frobenius(a44) != d:
        raise ValueError("automorphism does not stabilize the center form x4 -> x3")
    alphas, betas = _twisted_rows(F, A, coeffs)
    d_inv = F.inv(d)
    shift = F.div(a43, F.mul(d, a44))
    new_alphas, new_betas = [], []
    for s, t, row in zip(alphas, betas, (A[0], A[1])):
        value = F.mul(F.add(s, F.frobenius(row[3])), d_inv)
        new_alphas.append(F.sub(value, F.mul(t, shift)))
        new_betas.append(F.div(t, a44))
    return new_alphas[0], new_alphas[1], new_betas[0], new_betas[1]


# ---- L_{4,3} ----

def l43_action(F, A, coeffs):
    """
    Action on (alpha, beta, gamma) for L_{4,3}, p >= 3.

    With d1 = a11 a22:
        alpha' = (a11^p alpha + a12^p beta + a13^p gamma + e a11^2 a12) / (a11 d1),
        beta'  = (a22^p beta + a23^p gamma) / (a11 d1),
        gamma' = d1^p gamma / (a11 d1),
    where e = 1 in characteristic 3 and e = 0 otherwise.

    Raises:
        ValueError: In characteristic 2, where L_{4,3} has no [p]-map.
    """
    if F.p == 2:
        raise ValueError("L_{4,3} is not restrictable in characteristic 2")
    alpha, beta, gamma = coeffs
    frob, mul, add = F.frobenius, F.mul, F.add
    a11, a12, a13 = A[0][0], A[0][1], A[0][2]
    a22, a23 = A[1][1], A[1][2]
    d1 = mul(a11, a22)
    scale = F.inv(mul(a11, d1))
    new_alpha = add(
        add(mul(frob(a11), alpha), mul(frob(a12), beta)), mul(frob(a13), gamma)
    )
    if F.p == 3:
        new_alpha = add(new_alpha, mul(mul(a11, a11), a12))
    new_beta = add(mul(frob(a22), beta), mul(frob(a23), gamma))
    new_gamma = mul(frob(d1), gamma)
    return mul(new_alpha, scale), mul(new_beta, scale), mul(new_gamma, scale)
