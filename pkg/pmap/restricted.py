"""This module implements [p]-maps on Lie algebras over GF(p^k): Jacobson's
correction terms, evaluation of x^[p] on arbitrary elements and the validity,
restrictability and [p]-nilpotency predicates."""

import logging
from field import linalg
from field.finite_field import FiniteField
from liealg.lie_algebra import LieAlgebra


def jacobson_si(L, a, b):
    """
    Jacobson's terms s_1(a, b), ..., s_{p-1}(a, b).

    They are read off ad(a X + b)^{p-1}(a) = sum_i i s_i(a, b) X^{i-1} in L[X],
    with ad(y)(z) = [y, z]. Polynomials are lists of vectors indexed by degree,
    truncated at degree p - 1.

    Args:
        L (LieAlgebra): The algebra.
        a (tuple): First argument.
        b (tuple): Second argument.

    Returns:
        list: The p - 1 vectors s_1, ..., s_{p-1}.
    """
    F, p, n = L.field, L.field.p, L.dim
    zero = linalg.zero_vector(n)
    poly = [a] + [zero] * (p - 1)
    for _ in range(p - 1):
        new = [zero] * p
        for d in range(p):
            term = L.bracket(b, poly[d])
            if d > 0:
                term = linalg.vec_add(F, term, L.bracket(a, poly[d - 1]))
            new[d] = term
        poly = new
    return [linalg.vec_scale(F, F.inv(F.from_int(i)), poly[i - 1]) for i in range(1, p)]


def ad_power_preimage(L, i):
    """
    Solve ad(b) = ad(x_i)^p for b.

    Returns:
        tuple | None: One solution b (any two differ by a central element),
        or None if there is none.
    """
    F = L.field
    target = linalg.flatten(linalg.mat_pow(F, L.ad_matrix(L.basis()[i]), F.p))
    rows = [linalg.flatten(L.ad_matrix(e)) for e in L.basis()]
    return linalg.solve(F, rows, target)


def is_restrictable(L):
    """
    Decide whether every ad(x_i)^p is inner, i.e. whether L admits a [p]-map.
    """
    return all(ad_power_preimage(L, i) is not None for i in range(L.dim))


def failed_axiom(L, images):
    """
    Name the first violated condition for images to define a [p]-map on L.

    Returns:
        str | None: A diagnostic, or None when images define a [p]-map.
    """
    if not is_restrictable(L):
        return "not restrictable"
    if len(images) != L.dim:
        return f"expected {L.dim} images, got {len(images)}"
    F = L.field
    for i, image in enumerate(images):
        if len(image) != L.dim:
            return f"image of x{i + 1} must have {L.dim} coordinates"
        expected = linalg.mat_pow(F, L.ad_matrix(L.basis()[i]), F.p)
        if L.ad_matrix(tuple(image)) != expected:
            return f"(ad x{i + 1})^p differs from ad(x{i + 1}^[p])"
    return None


def is_valid_pmap(L, images):
    """
    Decide whether ad(images[i]) = ad(x_i)^p for every basis element x_i.

    By Jacobson's theorem this is exactly the condition for the images to
    extend to a unique [p]-map.
    """
    return failed_axiom(L, images) is None


class RestrictedAlgebra:
    """
    A Lie algebra together with a [p]-map given by the images of the basis.

    Attributes:
        algebra (LieAlgebra): The underlying Lie algebra.
        images (tuple): images[i] = x_i^[p] as coordinate vectors.

    Methods:
        evaluate(x): x^[p] for an arbitrary element.
        transport(T, target): The same [p]-map on an isomorphic algebra.
        to_json(), from_json(data): JSON codec.
    """

    def __init__(self, algebra, images, check=True):
        if not isinstance(algebra, LieAlgebra):
            raise ValueError("algebra must be a LieAlgebra")
        self.algebra = algebra
        self.images = tuple(tuple(v) for v in images)
        if check:
            for v in self.images:
                for a in v:
                    algebra.field.check(a)
            reason = failed_axiom(algebra, self.images)
            if reason is not None:
                raise ValueError(reason)
        nil_class = algebra.nilpotency_class()
        self._semilinear = nil_class is not None and nil_class < algebra.field.p

    def __repr__(self):
        return f"RestrictedAlgebra({self.algebra!r}, images={self.images})"

    @property
    def field(self):
        return self.algebra.field

    @property
    def is_semilinear(self):
        """True when the class is below p, so that all s_i vanish."""
        return self._semilinear

    def evaluate(self, x):
        """
        Compute x^[p].

        x is expanded along the basis as a_1 x_1 + (a_2 x_2 + ...), using
        (a y)^[p] = a^p y^[p] and (u + v)^[p] = u^[p] + v^[p] + sum_i s_i(u, v).

        Args:
            x (tuple): Coordinates of x.

        Returns:
            tuple: Coordinates of x^[p].
        """
        F, L = self.field, self.algebra
        n = L.dim
        if self._semilinear:
            result = [0] * n
            add, mul, frob = F.add, F.mul, F.frobenius
            for a, image in zip(x, self.images):
                if a:
                    c = frob(a)
                    for m, w in enumerate(image):
                        if w:
                            result[m] = add(result[m], mul(c, w))
            return tuple(result)

        acc_vec = linalg.zero_vector(n)
        acc_pow = linalg.zero_vector(n)
        for i in reversed(range(n)):
            a = x[i]
            if not a:
                continue
            term = linalg.vec_scale(F, a, linalg.unit_vector(n, i))
            term_pow = linalg.vec_scale(F, F.frobenius(a), self.images[i])
            corrections = jacobson_si(L, term, acc_vec)
            acc_pow = linalg.vec_sum(F, [term_pow, acc_pow] + corrections, n)
            acc_vec = linalg.vec_add(F, term, acc_vec)
        return acc_pow

    def transport(self, T, target):
        """
        Move the [p]-map to an isomorphic algebra.

        Args:
            T (tuple): Matrix with [u, v]T = [uT, vT]_target.
            target (LieAlgebra): The algebra receiving the [p]-map.

        Returns:
            RestrictedAlgebra: The [p]-map e_i -> ((e_i T^-1)^[p]) T on target.
        """
        F = self.field
        T_inv = linalg.inverse(F, T)
        images = tuple(linalg.vec_mat(F, self.evaluate(row), T) for row in T_inv)
        return RestrictedAlgebra(target, images, check=False)

    def to_json(self):
        return {
            "algebra": self.algebra.to_json(),
            "pmap": {"images": [self.algebra.vector_to_json(v) for v in self.images]},
        }

    @classmethod
    def from_json(cls, data, max_order=FiniteField.MAX_ORDER):
        """
        Build a restricted algebra from {"algebra": ..., "pmap": {"images": ...}}.

        Raises:
            ValueError: If the algebra is invalid or the images do not define a [p]-map.
        """
        algebra = LieAlgebra.from_json(data["algebra"], max_order=max_order)
        if not is_restrictable(algebra):
            raise ValueError("not restrictable")
        images = tuple(algebra.vector_from_json(v) for v in data["pmap"]["images"])
        return cls(algebra, images)


def lie_words_span(L, V, length):
    """
    Reduced basis of the span of left-normed brackets of `length` elements of V.
    """
    F = L.field
    words = linalg.rref(F, V)
    for _ in range(length - 1):
        if not words:
            break
        words = L.bracket_span(words, V)
    return words


def restricted_span(R, V):
    """
    Span of the p-th powers of the elements of span(V).

    It is spanned by the images of a basis of V together with the Lie words
    of length p in that basis, the latter only mattering when the class is at least p.

    Returns:
        tuple: A reduced basis.
    """
    F, L = R.field, R.algebra
    basis = linalg.rref(F, V)
    vectors = [R.evaluate(v) for v in basis]
    if not R.is_semilinear:
        vectors.extend(lie_words_span(L, basis, F.p))
    return linalg.rref(F, vectors)


def nilpotency_index(R):
    """
    Least n with L^[p]^n = 0.

    Iterates V_0 = L, V_{m+1} = restricted_span(V_m) for at most dim + 1 steps.

    Returns:
        int | None: The index, or None when the chain stabilizes on a nonzero space.
    """
    current = linalg.identity(R.algebra.dim)
    for step in range(1, R.algebra.dim + 2):
        following = restricted_span(R, current)
        if not following:
            return step
        if following == current:
            return None
        current = following
    return None


def is_p_nilpotent(R):
    """Decide whether some iterate of the [p]-map annihilates the algebra."""
    return nilpotency_index(R) is not None


def find_nonadditive_pair(R):
    """
    Look for basis elements a, b with (a + b)^[p] != a^[p] + b^[p].

    Returns:
        tuple | None: A witness pair (a, b), or None if the [p]-map is
        additive on every pair of basis elements.
    """
    F, L = R.field, R.algebra
    basis = L.basis()
    for a in basis:
        for b in basis:
            if a == b:
                continue
            total = R.evaluate(linalg.vec_add(F, a, b))
            parts = linalg.vec_add(F, R.evaluate(a), R.evaluate(b))
            if total != parts:
                logging.debug("Non-additive pair %s, %s", a, b)
                return a, b
    return None
