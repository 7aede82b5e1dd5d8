"""This module defines the class labels of [p]-nilpotent restricted Lie algebras of
dimension at most 4, their representative [p]-maps and the ClassList container."""

import re
from dataclasses import dataclass, field as dataclass_field

# family -> number of field parameters
FAMILIES = {
    "L_{1,1}^1": 0,
    "L_{2,1}^1": 0,
    "L_{2,1}^2": 0,
    **{f"L_{{3,1}}^{i}": 0 for i in range(1, 4)},
    "L_{3,2}^1": 0,
    "L_{3,2}^2": 0,
    "K_{3,2}^1": 1,
    **{f"L_{{4,1}}^{i}": 0 for i in range(1, 6)},
    **{f"L_{{4,2}}^{i}": 0 for i in range(1, 9)},
    "K_{4,2}^1": 1,
    "K_{4,2}^2": 0,
    "K_{4,2}^3": 0,
    "K_{4,2}^4": 1,
    "K_{4,2}^5": 0,
    "K_{4,2}^6": 0,
    "L_{4,3}^1": 0,
    "L_{4,3}^2": 0,
    "L_{4,3}^3": 1,
    "L_{4,3}^4": 0,
    "K_{4,3}^1": 0,
    "K_{4,3}^2": 0,
    "K_{4,3}^3": 2,
}

XI_FAMILIES = ("K_{3,2}^1", "K_{4,2}^1", "K_{4,2}^4")

_FAMILY_PATTERN = re.compile(r"^([LK])_\{(\d),(\d)\}\^(\d)$")


@dataclass(frozen=True)
class IsoLabel:
    """
    A class label: a family name and its canonical parameters.

    Attributes:
        family (str): The family, e.g. "K_{4,3}^3".
        params (tuple): Field elements, canonical for the family.
    """

    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.params) != FAMILIES[self.family]:
            raise ValueError(
                f"{self.family} takes {FAMILIES[self.family]} parameters, got {len(self.params)}"
            )
        object.__setattr__(self, "params", tuple(self.params))

    def __str__(self):
        if not self.params:
            return self.family
        return f"{self.family}({', '.join(str(a) for a in self.params)})"

    @property
    def algebra_name(self):
        """The catalog algebra carrying this family, e.g. "L_{4,3}"."""
        match = _FAMILY_PATTERN.match(self.family)
        return f"L_{{{match.group(2)},{match.group(3)}}}"

    @property
    def dimension(self):
        return int(_FAMILY_PATTERN.match(self.family).group(2))

    @property
    def index(self):
        return int(_FAMILY_PATTERN.match(self.family).group(4))

    @property
    def is_characteristic_family(self):
        """True for the K-families, which only occur in characteristic 2 or 3."""
        return self.family.startswith("K")

    def check_characteristic(self, p):
        """
        Raises:
            ValueError: If the family does not occur in characteristic p.
        """
        name = self.algebra_name
        if name == "L_{4,3}":
            if p == 2:
                raise ValueError("L_{4,3} has no [p]-map in characteristic 2")
            if self.is_characteristic_family != (p == 3):
                raise ValueError(f"{self.family} does not occur in characteristic {p}")
        elif name in ("L_{3,2}", "L_{4,2}"):
            if self.is_characteristic_family != (p == 2):
                raise ValueError(f"{self.family} does not occur in characteristic {p}")

    def to_json(self, F):
        return {"family": self.family, "params": [F.to_coeffs(a) for a in self.params]}

    @classmethod
    def from_json(cls, data, F):
        return cls(data["family"], tuple(F.from_coeffs(c) for c in data.get("params", [])))


def _images(n, mapping):
    """Images from {source: {target: coefficient}} with 1-based indices."""
    rows = []
    for i in range(1, n + 1):
        targets = mapping.get(i, {})
        rows.append(tuple(targets.get(m, 0) for m in range(1, n + 1)))
    return tuple(rows)


_ABELIAN_CHAINS = {
    1: {1: {}},
    2: {1: {}, 2: {1: {2: 1}}},
    3: {1: {}, 2: {1: {2: 1}}, 3: {1: {2: 1}, 2: {3: 1}}},
    4: {
        1: {},
        2: {1: {2: 1}},
        3: {1: {2: 1}, 3: {4: 1}},
        4: {1: {2: 1}, 2: {3: 1}},
        5: {1: {2: 1}, 2: {3: 1}, 3: {4: 1}},
    },
}

_FIXED = {
    "L_{3,2}^1": {},
    "L_{3,2}^2": {1: {3: 1}},
    "L_{4,2}^1": {},
    "L_{4,2}^2": {1: {3: 1}},
    "L_{4,2}^3": {1: {4: 1}},
    "L_{4,2}^4": {1: {3: 1}, 2: {4: 1}},
    "L_{4,2}^5": {3: {4: 1}},
    "L_{4,2}^6": {3: {4: 1}, 2: {3: 1}},
    "L_{4,2}^7": {4: {3: 1}},
    "L_{4,2}^8": {4: {3: 1}, 2: {4: 1}},
    "K_{4,2}^2": {1: {4: 1}},
    "K_{4,2}^3": {1: {3: 1}, 2: {4: 1}},
    "K_{4,2}^5": {4: {3: 1}},
    "K_{4,2}^6": {4: {3: 1}, 2: {4: 1}},
    "L_{4,3}^1": {},
    "L_{4,3}^2": {1: {4: 1}},
    "L_{4,3}^4": {3: {4: 1}},
    "K_{4,3}^1": {},
    "K_{4,3}^2": {3: {4: 1}},
}


def representative_images(label):
    """
    The representative [p]-map of a class, as images of the standard basis.

    Args:
        label (IsoLabel): The class.

    Returns:
        tuple: images[i] = x_i^[p].
    """
    family, params = label.family, label.params
    n = label.dimension
    if label.algebra_name.endswith(",1}"):
        return _images(n, _ABELIAN_CHAINS[n][label.index])
    if family in _FIXED:
        return _images(n, _FIXED[family])
    if family == "K_{3,2}^1":
        return _images(3, {1: {3: 1}, 2: {3: params[0]}})
    if family == "K_{4,2}^1":
        return _images(4, {1: {3: 1}, 2: {3: params[0]}})
    if family == "K_{4,2}^4":
        return _images(4, {3: {4: 1}, 1: {3: 1}, 2: {3: params[0]}})
    if family == "L_{4,3}^3":
        return _images(4, {2: {4: params[0]}})
    alpha, beta = params
    return _images(4, {1: {4: alpha}, 2: {4: beta}})


@dataclass
class ClassList:
    """
    One representative per class of [p]-nilpotent [p]-maps on a catalog algebra.

    Attributes:
        field (FiniteField): The ground field.
        algebra (str): The catalog name.
        entries (list): Pairs (IsoLabel, images).
        note (str | None): Why the list is empty, when it is.
    """

    field: object
    algebra: str
    entries: list = dataclass_field(default_factory=list)
    note: str = None

    def __len__(self):
        return len(self.entries)

    def labels(self):
        return [label for label, _ in self.entries]

    def to_json(self):
        F = self.field
        return {
            "algebra": self.algebra,
            "restrictable": self.note is None,
            "reason": self.note,
            "classes": [
                {
                    "label": label.to_json(F),
                    "pmap": {"images": [[F.to_coeffs(a) for a in v] for v in images]},
                }
                for label, images in self.entries
            ],
        }
