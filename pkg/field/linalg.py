"""Exact linear algebra over a FiniteField.

Vectors are tuples of field elements and act as rows; matrices are tuples of rows
and act on the right of row vectors. Subspaces are stored by their reduced row
echelon basis, so two subspaces are equal exactly when their bases are equal.
"""

import itertools
import numpy as np


def zero_vector(n):
    return (0,) * n


def unit_vector(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def is_zero(v):
    return not any(v)


def identity(n):
    return tuple(unit_vector(n, i) for i in range(n))


def zero_matrix(n, m=None):
    return tuple(zero_vector(n if m is None else m) for _ in range(n))


def vec_add(F, u, v):
    add = F.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(F, u, v):
    sub = F.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_neg(F, v):
    return tuple(F.neg(a) for a in v)


def vec_scale(F, c, v):
    mul = F.mul
    return tuple(mul(c, a) for a in v)


def vec_sum(F, vectors, n):
    """Sum of an iterable of vectors of length n."""
    total = zero_vector(n)
    for v in vectors:
        total = vec_add(F, total, v)
    return total


def vec_mat(F, v, M):
    """Row vector v times matrix M."""
    add, mul = F.add, F.mul
    result = [0] * len(M[0])
    for c, row in zip(v, M):
        if c:
            for j, a in enumerate(row):
                if a:
                    result[j] = add(result[j], mul(c, a))
    return tuple(result)


def mat_mul(F, A, B):
    return tuple(vec_mat(F, row, B) for row in A)


def mat_add(F, A, B):
    return tuple(vec_add(F, u, v) for u, v in zip(A, B))


def mat_scale(F, c, A):
    return tuple(vec_scale(F, c, row) for row in A)


def mat_pow(F, A, e):
    """A^e for e >= 0 by repeated squaring."""
    result = identity(len(A))
    while e:
        if e & 1:
            result = mat_mul(F, result, A)
        A = mat_mul(F, A, A)
        e >>= 1
    return result


def mat_map(fn, A):
    """Apply fn to every entry of A."""
    return tuple(tuple(fn(a) for a in row) for row in A)


def transpose(A):
    return tuple(zip(*A)) if A else ()


def flatten(A):
    return tuple(a for row in A for a in row)


def _array(F, rows):
    return F.GF(np.array([list(r) for r in rows], dtype=np.int64))


def _rows(array):
    return tuple(tuple(row) for row in array.view(np.ndarray).tolist())


def rref(F, rows):
    """
    Reduced row echelon basis of the span of rows.

    Args:
        F (FiniteField): The field.
        rows (iterable): Vectors of a common length.

    Returns:
        tuple: The nonzero reduced rows, as tuples.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return ()
    reduced = _array(F, rows).row_reduce().view(np.ndarray)
    return _rows(reduced[np.any(reduced, axis=1)])


def rank(F, rows):
    return len(rref(F, rows))


def in_span(F, basis, v):
    """Decide whether v lies in the span of the reduced basis."""
    residual = list(v)
    for row in basis:
        col = next(j for j, a in enumerate(row) if a)
        c = residual[col]
        if c:
            residual = [F.sub(x, F.mul(c, y)) for x, y in zip(residual, row)]
    return not any(residual)


def is_subspace(F, small, big):
    """Decide whether span(small) is contained in span(big) (big reduced)."""
    return all(in_span(F, big, v) for v in small)


def intersection_dim(F, U, V):
    """Dimension of span(U) meet span(V)."""
    return rank(F, U) + rank(F, V) - rank(F, list(U) + list(V))


def solve(F, rows, target):
    """
    Find coefficients x with sum(x[j] * rows[j]) = target.

    The free coefficients are set to zero, so a zero target gives the zero solution.

    Returns:
        tuple | None: One solution, or None if target is not in the span.
    """
    m = len(rows)
    if m == 0:
        return () if is_zero(target) else None
    system = np.vstack([_array(F, rows), _array(F, [target])]).T.view(F.GF).row_reduce()
    x = [0] * m
    for row in system.view(np.ndarray).tolist():
        pivot = next((j for j, a in enumerate(row) if a), None)
        if pivot is None:
            break
        if pivot == m:
            return None
        x[pivot] = row[m]
    return tuple(x)


def left_kernel(F, rows):
    """
    Reduced basis of {x : sum(x[j] * rows[j]) = 0}.
    """
    if not rows:
        return ()
    return rref(F, _rows(_array(F, rows).left_null_space()))


def inverse(F, A):
    """
    Inverse of a square matrix.

    Raises:
        ValueError: If A is singular.
    """
    try:
        return _rows(np.linalg.inv(_array(F, A)))
    except np.linalg.LinAlgError as e:
        raise ValueError("matrix is not invertible") from e


def is_invertible(F, A):
    return rank(F, A) == len(A)


def all_vectors(F, n):
    """Every vector of length n, in lexicographic order."""
    return itertools.product(F.elements, repeat=n)


def span_elements(F, basis, n):
    """Every element of the span of basis (vectors of length n), ordered by coefficients."""
    if not basis:
        return [zero_vector(n)]
    return [
        vec_sum(F, (vec_scale(F, c, b) for c, b in zip(coeffs, basis)), n)
        for coeffs in itertools.product(F.elements, repeat=len(basis))
    ]
