"""This module provides exact arithmetic in small finite fields GF(p^k),
together with the Frobenius map and the additive subsets used by the classification."""

import logging
from dataclasses import dataclass
import galois
import numpy as np


@dataclass(frozen=True)
class FieldSpec:
    """
    The description of a finite field GF(p^k).

    Attributes:
        p (int): The characteristic.
        k (int): The extension degree.
        modulus (tuple): The monic defining polynomial, little-endian
            (modulus[0] is the constant term). Prime fields use (0, 1).
    """

    p: int
    k: int
    modulus: tuple

    @property
    def order(self):
        """Number of elements of the field."""
        return self.p**self.k

    def to_json(self):
        """
        Convert the field description to a JSON object.

        Returns:
            dict: {"p": int, "k": int, "modulus": [int, ...]}.
        """
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data):
        """
        Build a FieldSpec from its JSON object. The modulus may be omitted when k = 1.

        Args:
            data (dict): The JSON object.

        Returns:
            FieldSpec: The parsed description (not yet validated).
        """
        p = int(data["p"])
        k = int(data.get("k", 1))
        modulus = data.get("modulus")
        if modulus is None:
            if k != 1:
                raise ValueError("modulus is required when k > 1")
            modulus = (0, 1)
        return cls(p, k, tuple(int(c) for c in modulus))


class FiniteField:
    """
    Exact arithmetic in GF(p^k) through precomputed tables.

    Elements are plain integers in [0, p^k). The integer a stands for the
    polynomial sum(c_i t^i) whose coefficients c_i are the base-p digits of a,
    which is also the integer representation used by galois. The total order
    on elements used for canonical representatives is the order of these integers.

    Attributes:
        MAX_ORDER (int): Default bound on the field size.
        CANONICAL_MODULI (dict): Shipped moduli for (p, k), little-endian.
        spec (FieldSpec): The validated field description.
        p (int): The characteristic.
        k (int): The extension degree.
        q (int): The number of elements.
        GF (type): The galois field class backing the tables.

    Methods:
        add(a, b), sub(a, b), mul(a, b), neg(a), inv(a), div(a, b), power(a, n):
            Field arithmetic.
        frobenius(a), frobenius_root(a):
            The map x -> x^p and its inverse.
        is_square(a) -> tuple:
            Squareness test with a witness.
        in_artin_schreier(x), in_k_beta(beta, x):
            Membership in the additive subsets K and K_beta.
        to_coeffs(a), from_coeffs(coeffs):
            JSON codec of elements.
    """

    MAX_ORDER = 25
    CANONICAL_MODULI = {
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (2, 4): (1, 1, 0, 0, 1),
        (3, 2): (1, 0, 1),
        (5, 2): (1, 1, 1),
    }

    def __init__(self, p, k=1, modulus=None, max_order=MAX_ORDER):
        if not isinstance(p, int) or not isinstance(k, int):
            raise ValueError("p and k must be integers")

        if not galois.is_prime(p):
            raise ValueError(f"p = {p} is not a prime")

        if k < 1:
            raise ValueError("k must be a positive integer")

        if p**k > max_order:
            raise ValueError(f"field of order {p**k} exceeds the bound {max_order}")

        if modulus is None:
            modulus = self.default_modulus(p, k)
        modulus = tuple(int(c) for c in modulus)
        self._check_modulus(p, k, modulus)

        self.spec = FieldSpec(p, k, modulus)
        self.max_order = max_order
        self.p = p
        self.k = k
        self.q = p**k

        if k == 1:
            self.GF = galois.GF(p)
        else:
            poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
            self.GF = galois.GF(p**k, irreducible_poly=poly)

        self._build_tables()
        logging.debug("Built GF(%d^%d) with modulus %s", p, k, list(modulus))

    def __reduce__(self):
        return (FiniteField, (self.p, self.k, self.spec.modulus, self.max_order))

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    @classmethod
    def from_spec(cls, spec, max_order=MAX_ORDER):
        """
        Build the field described by a FieldSpec.

        Args:
            spec (FieldSpec): The field description.
            max_order (int): Bound on the field size.

        Returns:
            FiniteField: The validated field.
        """
        return cls(spec.p, spec.k, spec.modulus, max_order=max_order)

    @classmethod
    def default_modulus(cls, p, k):
        """
        Return the shipped modulus for GF(p^k): a canonical one when available,
        otherwise the Conway polynomial.
        """
        if k == 1:
            return (0, 1)
        if (p, k) in cls.CANONICAL_MODULI:
            return cls.CANONICAL_MODULI[(p, k)]
        conway = galois.conway_poly(p, k)
        return tuple(int(c) for c in reversed(conway.coeffs))

    @staticmethod
    def _check_modulus(p, k, modulus):
        if len(modulus) != k + 1:
            raise ValueError(f"modulus must have {k + 1} coefficients, got {len(modulus)}")

        if any(c < 0 or c >= p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {p})")

        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")

        if k == 1:
            if modulus != (0, 1):
                raise ValueError("prime fields use the modulus [0, 1]")
            return

        poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
        if not poly.is_irreducible():
            raise ValueError(f"modulus {list(modulus)} is not irreducible over GF({p})")

    def _build_tables(self):
        els = self.GF.elements
        self._add = (els[:, np.newaxis] + els[np.newaxis, :]).view(np.ndarray).tolist()
        self._mul = (els[:, np.newaxis] * els[np.newaxis, :]).view(np.ndarray).tolist()
        self._neg = (-els).view(np.ndarray).tolist()
        self._inv = [None] + (els[1:] ** -1).view(np.ndarray).tolist()
        self._frob = (els**self.p).view(np.ndarray).tolist()
        self._root = [0] * self.q
        for a, b in enumerate(self._frob):
            self._root[b] = a

        self._sqrt = {}
        for y in range(self.q):
            self._sqrt.setdefault(self._mul[y][y], y)

        self.primitive_element = int(self.GF.primitive_element)

    # ---- arithmetic ----

    @property
    def elements(self):
        """All field elements in increasing order."""
        return range(self.q)

    @property
    def nonzero(self):
        """All nonzero field elements in increasing order."""
        return range(1, self.q)

    def check(self, a):
        """
        Validate that a is an element of this field.

        Raises:
            ValueError: If a is not an integer in [0, q).
        """
        if not isinstance(a, int) or a < 0 or a >= self.q:
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        """
        Return the multiplicative inverse of a.

        Raises:
            ValueError: If a is zero.
        """
        if a == 0:
            raise ValueError("zero has no inverse")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def power(self, a, n):
        """Return a^n for an integer n >= 0 (negative n for nonzero a)."""
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            n >>= 1
        return result

    def from_int(self, n):
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def frobenius(self, a):
        return self._frob[a]

    def frobenius_root(self, a):
        return self._root[a]

    def additive_basis(self):
        """
        Return the basis 1, t, ..., t^(k-1) of the field over GF(p).
        """
        return [self.p**i for i in range(self.k)]

    # ---- squares and special subsets ----

    def is_square(self, a):
        """
        Decide whether a is a square.

        Args:
            a (int): A field element.

        Returns:
            tuple: (True, y) with y*y = a and y the smallest such element,
            or (False, None).
        """
        if a in self._sqrt:
            return True, self._sqrt[a]
        return False, None

    def sqrt(self, a):
        """
        Return the smallest square root of a.

        Raises:
            ValueError: If a is not a square.
        """
        found, root = self.is_square(a)
        if not found:
            raise ValueError(f"{a} is not a square in {self!r}")
        return root

    def squares(self):
        """Sorted list of the nonzero squares."""
        return sorted(s for s in self._sqrt if s != 0)

    def square_class(self, a):
        """Return the coset a * (F*)^2 as a sorted list."""
        if a == 0:
            raise ValueError("zero has no square class")
        return sorted({self._mul[a][s] for s in self.squares()})

    def square_classes(self):
        """Canonical (smallest) representatives of F* / (F*)^2."""
        return sorted({self.square_class(a)[0] for a in self.nonzero})

    def artin_schreier_subspace(self):
        """
        Return the subset K = {d + d^2} of a field of characteristic 2, sorted.

        Raises:
            ValueError: If the characteristic is not 2.
        """
        if self.p != 2:
            raise ValueError("the Artin-Schreier subspace is defined in characteristic 2")
        return sorted({self._add[d][self._mul[d][d]] for d in self.elements})

    def in_artin_schreier(self, x):
        """
        Decide whether x = d + d^2 for some d in the field.

        Raises:
            ValueError: If the characteristic is not 2.
        """
        if self.p != 2:
            raise ValueError("the Artin-Schreier subspace is defined in characteristic 2")
        return any(self._add[d][self._mul[d][d]] == x for d in self.elements)

    def k_beta_subspace(self, beta):
        """
        Return the subset K_beta = {beta d^3 + d} of a field of characteristic 3, sorted.

        Raises:
            ValueError: If the characteristic is not 3 or beta is zero.
        """
        self._check_k_beta(beta)
        return sorted({self._add[self._mul[beta][self.power(d, 3)]][d] for d in self.elements})

    def in_k_beta(self, beta, x):
        """
        Decide whether x = beta d^3 + d for some d in the field.

        Raises:
            ValueError: If the characteristic is not 3 or beta is zero.
        """
        self._check_k_beta(beta)
        return any(self._add[self._mul[beta][self.power(d, 3)]][d] == x for d in self.elements)

    def _check_k_beta(self, beta):
        if self.p != 3:
            raise ValueError("K_beta is defined in characteristic 3")
        if beta == 0:
            raise ValueError("K_beta requires beta != 0")

    # ---- codec ----

    def to_coeffs(self, a):
        """
        Convert an element to its coefficient list (coeffs[0] is the constant term).
        """
        coeffs = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            coeffs.append(c)
        return coeffs

    def from_coeffs(self, coeffs):
        """
        Convert a coefficient list back to an element.

        Raises:
            ValueError: If the list has the wrong length or unreduced entries.
        """
        coeffs = list(coeffs)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        if any(not isinstance(c, int) or c < 0 or c >= self.p for c in coeffs):
            raise ValueError(f"coefficients must be integers in [0, {self.p})")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def format(self, a):
        """Human-readable polynomial form of an element, e.g. 't + 1'."""
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.to_coeffs(a)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"
