# app/group/entity/group.py
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Dict, List, Literal, Optional, Tuple

from app.group.entity.element import Cyclic, Dihedral, GroupElement, Perm, Product

GroupKind = Literal["Sn", "An", "Dn", "Zn", "Product"]


@dataclass(eq=False)
class FiniteGroup:
    """A fully enumerable finite group; the element list is built on first use."""

    kind: GroupKind
    n: int = 0
    factors: Tuple["FiniteGroup", ...] = ()
    _elements: Optional[List[GroupElement]] = field(default=None, repr=False)
    _index: Optional[Dict[GroupElement, int]] = field(default=None, repr=False)

    @property
    def spec(self) -> str:
        if self.kind == "Product":
            return "x".join(f"({f.spec})" for f in self.factors)
        return f"{self.kind}:{self.n}"

    @property
    def order(self) -> int:
        if self.kind == "Sn":
            return factorial(self.n)
        if self.kind == "An":
            return max(factorial(self.n) // 2, 1)
        if self.kind == "Dn":
            return 2 * self.n
        if self.kind == "Zn":
            return self.n
        return prod(f.order for f in self.factors)

    @property
    def identity(self) -> GroupElement:
        if self.kind in ("Sn", "An"):
            return Perm(tuple(range(self.n)))
        if self.kind == "Dn":
            return Dihedral(0, 0, self.n)
        if self.kind == "Zn":
            return Cyclic(0, self.n)
        return Product(tuple(f.identity for f in self.factors))

    @property
    def generators(self) -> List[GroupElement]:
        """Fixed generating list; its order drives every breadth-first sweep."""
        if self.kind == "Sn":
            if self.n < 2:
                return []
            gens = [Perm.from_cycles([(1, 2)], self.n)]
            if self.n > 2:
                gens.append(Perm.from_cycles([tuple(range(1, self.n + 1))], self.n))
            return gens
        if self.kind == "An":
            return [Perm.from_cycles([(1, 2, k)], self.n) for k in range(3, self.n + 1)]
        if self.kind == "Dn":
            gens = [Dihedral(0, 1 % self.n, self.n), Dihedral(1, 0, self.n)]
            return [g for g in gens if not g.is_identity()]
        if self.kind == "Zn":
            return [Cyclic(1, self.n)] if self.n > 1 else []
        gens = []
        ident = [f.identity for f in self.factors]
        for pos, f in enumerate(self.factors):
            for g in f.generators:
                parts = list(ident)
                parts[pos] = g
                gens.append(Product(tuple(parts)))
        return gens

    def _enumerate(self) -> List[GroupElement]:
        if self.kind == "Sn":
            return [Perm(p) for p in itertools.permutations(range(self.n))]
        if self.kind == "An":
            return [p for p in (Perm(q) for q in itertools.permutations(range(self.n))) if p.sign() == 1]
        if self.kind == "Dn":
            return [Dihedral(a, b, self.n) for a in (0, 1) for b in range(self.n)]
        if self.kind == "Zn":
            return [Cyclic(r, self.n) for r in range(self.n)]
        return [Product(parts) for parts in itertools.product(*(f.elements for f in self.factors))]

    @property
    def elements(self) -> List[GroupElement]:
        if self._elements is None:
            self._elements = self._enumerate()
            self._index = {g: i for i, g in enumerate(self._elements)}
        return self._elements

    def rank(self, g: GroupElement) -> int:
        """Position of g in the enumeration order."""
        self.elements
        return self._index[g]

    def contains(self, g: GroupElement) -> bool:
        if self.kind in ("Sn", "An"):
            if not isinstance(g, Perm) or g.degree != self.n:
                return False
            return self.kind == "Sn" or g.sign() == 1
        if self.kind == "Dn":
            return isinstance(g, Dihedral) and g.n == self.n
        if self.kind == "Zn":
            return isinstance(g, Cyclic) and g.n == self.n
        return (
            isinstance(g, Product)
            and len(g.parts) == len(self.factors)
            and all(f.contains(p) for f, p in zip(self.factors, g.parts))
        )

    def parse_element(self, text: str) -> GroupElement:
        if self.kind in ("Sn", "An"):
            g = Perm.parse(text, self.n)
        elif self.kind == "Dn":
            g = Dihedral.parse(text, self.n)
        elif self.kind == "Zn":
            g = Cyclic(int(text.strip()) % self.n, self.n)
        else:
            pieces = text.split("|")
            if len(pieces) != len(self.factors):
                raise ValueError(f"expected {len(self.factors)} components separated by '|' in {text!r}")
            g = Product(tuple(f.parse_element(p) for f, p in zip(self.factors, pieces)))
        if not self.contains(g):
            raise ValueError(f"{text!r} is not an element of {self.spec}")
        return g

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a.commutes_with(b) for a in gens for b in gens)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec})"


@dataclass(frozen=True)
class CycleType:
    """Multiplicities (m_1, ..., m_n) with sum j*m_j = n."""

    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.multiplicities):
            raise ValueError(f"negative multiplicity in {self.multiplicities}")

    @classmethod
    def from_perm(cls, p: Perm) -> "CycleType":
        counts = [0] * p.degree
        for cycle in p.cycles(include_fixed=True):
            counts[len(cycle) - 1] += 1
        return cls(tuple(counts))

    @classmethod
    def from_lengths(cls, lengths: List[int], degree: int) -> "CycleType":
        fixed = degree - sum(lengths)
        if fixed < 0 or any(length < 1 for length in lengths):
            raise ValueError(f"cycle lengths {lengths} do not fit degree {degree}")
        counts = [0] * degree
        for length in lengths:
            counts[length - 1] += 1
        counts[0] += fixed
        return cls(tuple(counts))

    @property
    def degree(self) -> int:
        return sum((j + 1) * m for j, m in enumerate(self.multiplicities))

    def m(self, j: int) -> int:
        if 1 <= j <= len(self.multiplicities):
            return self.multiplicities[j - 1]
        return 0

    @property
    def parity(self) -> int:
        """+1 for even permutations, -1 for odd ones."""
        even_cycles = sum(m for j, m in enumerate(self.multiplicities, start=1) if j % 2 == 0)
        return -1 if even_cycles % 2 else 1

    @property
    def is_even(self) -> bool:
        return self.parity == 1

    def render(self) -> str:
        parts = []
        for j, m in enumerate(self.multiplicities, start=1):
            if m == 1:
                parts.append(str(j))
            elif m > 1:
                parts.append(f"{j}^{m}")
        return "(" + ", ".join(parts) + ")"


@dataclass(eq=False)
class ConjugacyClass:
    """Orbit t_1 = s, ..., t_M with representatives g_i, g_i ▷ s = t_i, g_1 = e."""

    group: FiniteGroup
    base: GroupElement
    elements: Tuple[GroupElement, ...]
    representatives: Tuple[GroupElement, ...]
    _index: Dict[GroupElement, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {t: i for i, t in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, t: GroupElement) -> int:
        return self._index[t]

    def contains(self, t: GroupElement) -> bool:
        return t in self._index

    def render(self) -> str:
        return "{" + ", ".join(t.render() for t in self.elements) + "}"


@dataclass(eq=False)
class Subgroup:
    """A subgroup given by its element list, with a best-effort structure label."""

    group: FiniteGroup
    elements: Tuple[GroupElement, ...]
    label: str
    is_abelian: bool
    generators: Tuple[GroupElement, ...] = ()
    base: Optional[GroupElement] = None
    _members: frozenset = field(default_factory=frozenset, repr=False)

    def __post_init__(self):
        self._members = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, g: GroupElement) -> bool:
        return g in self._members

    @property
    def is_dihedral(self) -> bool:
        return self.label.startswith("D") and not self.is_abelian
