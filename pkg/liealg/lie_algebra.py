"""This module defines Lie algebras given by structure constants over a FiniteField,
the catalog of nilpotent Lie algebras of dimension at most 4 and their structural invariants."""

import logging
from field import linalg
from field.finite_field import FiniteField, FieldSpec

MAX_DIM = 4

# name -> (dimension, {(i, j): {m: c}}) with 0-based i < j and [x_i, x_j] = sum c x_m
CATALOG = {
    "L_{1,1}": (1, {}),
    "L_{2,1}": (2, {}),
    "L_{3,1}": (3, {}),
    "L_{3,2}": (3, {(0, 1): {2: 1}}),
    "L_{4,1}": (4, {}),
    "L_{4,2}": (4, {(0, 1): {2: 1}}),
    "L_{4,3}": (4, {(0, 1): {2: 1}, (0, 2): {3: 1}}),
}
CATALOG_NAMES = tuple(CATALOG)


class LieAlgebra:
    """
    A Lie algebra of dimension at most 4 over a finite field, given by the
    brackets [x_i, x_j] = sum_m c_ij^m x_m for i < j.

    Elements are coordinate row vectors in the fixed basis x_1, ..., x_n
    (0-based internally, 1-based in JSON).

    Attributes:
        field (FiniteField): The ground field.
        dim (int): The dimension.
        name (str | None): The catalog name, when the algebra is a catalog member
            in its standard basis.
        brackets (dict): Nonzero brackets {(i, j): vector} with i < j.

    Methods:
        bracket(u, v): The bilinear bracket.
        ad_matrix(x): The matrix of ad x acting on row vectors.
        center(), derived(), lower_central_series(), nilpotency_class():
            Structural invariants.
        centralizer(subspace): Elements commuting with a subspace.
        invariants(): All of the above in one dictionary.
        to_json(), from_json(data): JSON codec.
    """

    def __init__(self, field, dim, brackets=None, name=None):
        if not isinstance(field, FiniteField):
            raise ValueError("field must be a FiniteField")

        if not isinstance(dim, int) or dim < 1 or dim > MAX_DIM:
            raise ValueError(f"dimension must lie in [1, {MAX_DIM}], got {dim}")

        self.field = field
        self.dim = dim
        self.name = name
        self.brackets = {}

        zero = linalg.zero_vector(dim)
        self._table = [[zero] * dim for _ in range(dim)]
        for (i, j), value in sorted((brackets or {}).items()):
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices must satisfy 1 <= i < j <= {dim}")
            value = tuple(value)
            if len(value) != dim:
                raise ValueError(f"bracket value must have {dim} coordinates")
            for a in value:
                field.check(a)
            if linalg.is_zero(value):
                continue
            self.brackets[(i, j)] = value
            self._table[i][j] = value
            self._table[j][i] = linalg.vec_neg(field, value)

        self._check_jacobi()
        self._class = self._compute_class()

    def __repr__(self):
        return f"LieAlgebra({self.name or 'unnamed'}, dim={self.dim}, {self.field!r})"

    def _check_jacobi(self):
        F, n = self.field, self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    xi, xj, xk = (linalg.unit_vector(n, m) for m in (i, j, k))
                    total = linalg.vec_sum(
                        F,
                        (
                            self.bracket(self.bracket(xi, xj), xk),
                            self.bracket(self.bracket(xj, xk), xi),
                            self.bracket(self.bracket(xk, xi), xj),
                        ),
                        n,
                    )
                    if not linalg.is_zero(total):
                        raise ValueError(
                            f"Jacobi identity fails on x{i + 1}, x{j + 1}, x{k + 1}"
                        )

    # ---- bracket ----

    def basis(self):
        return [linalg.unit_vector(self.dim, i) for i in range(self.dim)]

    def zero(self):
        return linalg.zero_vector(self.dim)

    def bracket(self, u, v):
        """
        Bilinear extension of the structure constants.

        Args:
            u (tuple): Coordinates of the left argument.
            v (tuple): Coordinates of the right argument.

        Returns:
            tuple: Coordinates of [u, v].
        """
        if not self.brackets:
            return self.zero()
        F = self.field
        add, mul = F.add, F.mul
        result = [0] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                c = mul(a, b)
                for m, w in enumerate(row[j]):
                    if w:
                        result[m] = add(result[m], mul(c, w))
        return tuple(result)

    def ad_matrix(self, x):
        """
        The matrix of ad x on row vectors: v . ad_matrix(x) = [v, x].
        """
        return tuple(self.bracket(e, x) for e in self.basis())

    def structure_table(self):
        """The full table [x_i, x_j] for all i, j."""
        return tuple(tuple(row) for row in self._table)

    def same_structure(self, other):
        """Decide whether other has the same field and structure constants."""
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.brackets == other.brackets
        )

    # ---- invariants ----

    @property
    def is_abelian(self):
        return not self.brackets

    def derived(self):
        """Reduced basis of the derived subalgebra [L, L]."""
        return linalg.rref(self.field, self.brackets.values())

    def bracket_span(self, U, V):
        """Reduced basis of span{[u, v] : u in U, v in V}."""
        return linalg.rref(self.field, [self.bracket(u, v) for u in U for v in V])

    def centralizer(self, subspace):
        """
        Reduced basis of {v : [v, s] = 0 for every s in subspace}.
        """
        if not subspace:
            return linalg.identity(self.dim)
        rows = [
            tuple(a for s in subspace for a in self.bracket(e, s))
            for e in self.basis()
        ]
        return linalg.left_kernel(self.field, rows)

    def center(self):
        """Reduced basis of the center."""
        return self.centralizer(self.basis())

    def lower_central_series(self):
        """
        The terms gamma_1 = L, gamma_{i+1} = [gamma_i, L] as reduced bases.

        The series stops at the first zero term (kept in the list) or when it
        stabilizes on a nonzero term.
        """
        series = [linalg.identity(self.dim)]
        while series[-1]:
            term = self.bracket_span(series[-1], self.basis())
            if term == series[-1]:
                break
            series.append(term)
        return series

    def _compute_class(self):
        series = self.lower_central_series()
        if series[-1]:
            return None
        return len(series) - 1

    def nilpotency_class(self):
        """Least c with gamma_{c+1} = 0, or None when the algebra is not nilpotent."""
        return self._class

    @property
    def is_nilpotent(self):
        return self._class is not None

    def invariants(self):
        """
        Returns:
            dict: center, derived, lcs (lower central series) and class.
        """
        return {
            "center": self.center(),
            "derived": self.derived(),
            "lcs": self.lower_central_series(),
            "class": self.nilpotency_class(),
        }

    # ---- codec ----

    def vector_to_json(self, v):
        return [self.field.to_coeffs(a) for a in v]

    def vector_from_json(self, data):
        if len(data) != self.dim:
            raise ValueError(f"vector must have {self.dim} coordinates, got {len(data)}")
        return tuple(self.field.from_coeffs(c) for c in data)

    def to_json(self):
        """
        Convert the algebra to a JSON object with 1-based bracket indices.
        """
        return {
            "field": self.field.spec.to_json(),
            "dim": self.dim,
            "brackets": [
                {"i": i + 1, "j": j + 1, "value": self.vector_to_json(value)}
                for (i, j), value in sorted(self.brackets.items())
            ],
        }

    @classmethod
    def from_json(cls, data, max_order=FiniteField.MAX_ORDER):
        """
        Build an algebra from its JSON object.

        Raises:
            ValueError: On an invalid field, dimension, bracket or Jacobi failure.
        """
        field = FiniteField.from_spec(FieldSpec.from_json(data["field"]), max_order=max_order)
        dim = int(data["dim"])
        algebra = cls(field, dim)
        brackets = {}
        for entry in data.get("brackets", []):
            i, j = int(entry["i"]) - 1, int(entry["j"]) - 1
            if i == j:
                raise ValueError("bracket indices must satisfy i < j")
            value = algebra.vector_from_json(entry["value"])
            if i > j:
                i, j = j, i
                value = linalg.vec_neg(field, value)
            brackets[(i, j)] = value
        result = cls(field, dim, brackets)
        result.name = result.catalog_name()
        return result

    def catalog_name(self):
        """The catalog name if this algebra equals a catalog member in its standard basis."""
        for name, (dim, _) in CATALOG.items():
            if dim == self.dim and self.same_structure(catalog_algebra(self.field, name)):
                return name
        return None


def catalog_algebra(field, name):
    """
    Build a catalog algebra in its standard basis.

    Raises:
        ValueError: If the name is unknown.
    """
    if name not in CATALOG:
        raise ValueError(f"unknown algebra {name!r}, expected one of {', '.join(CATALOG_NAMES)}")
    dim, table = CATALOG[name]
    brackets = {
        pair: tuple(coeffs.get(m, 0) for m in range(dim)) for pair, coeffs in table.items()
    }
    return LieAlgebra(field, dim, brackets, name=name)


def catalog(field, dim):
    """
    Return the nilpotent Lie algebras of the given dimension.

    Args:
        field (FiniteField): The ground field.
        dim (int): The dimension, in [1, 4].

    Returns:
        list: The catalog algebras of that dimension, abelian first.
    """
    if not isinstance(dim, int) or dim < 1 or dim > MAX_DIM:
        raise ValueError(f"dimension must lie in [1, {MAX_DIM}], got {dim}")
    algebras = [catalog_algebra(field, name) for name, (d, _) in CATALOG.items() if d == dim]
    logging.debug("Catalog of dimension %d over %r: %d algebras", dim, field, len(algebras))
    return algebras


def full_catalog(field):
    """Every catalog algebra over field, in catalog order."""
    return [catalog_algebra(field, name) for name in CATALOG_NAMES]


def change_basis(L, M):
    """
    Express L in the basis y_i = row i of M.

    Args:
        L (LieAlgebra): The algebra.
        M (tuple): An invertible dim x dim matrix over the field.

    Returns:
        LieAlgebra: The algebra with brackets [y_i, y_j] written in the y-basis.

    Raises:
        ValueError: If M is singular.
    """
    F = L.field
    M_inv = linalg.inverse(F, M)
    brackets = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            w = L.bracket(M[i], M[j])
            brackets[(i, j)] = linalg.vec_mat(F, w, M_inv)
    return LieAlgebra(F, L.dim, brackets)
