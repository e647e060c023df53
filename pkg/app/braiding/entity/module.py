# app/braiding/entity/module.py
"""
Braided vector spaces attached to a conjugacy class and a representation.

Basis vectors of M(O, ρ) are pairs (i, u): the u-th basis vector of V placed
in the component g_i ⊗ V. Indices are 0-based internally and printed 1-based.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.errors import AlgebraError
from app.group.entity.element import GroupElement
from app.group.entity.group import ConjugacyClass, Subgroup
from app.reps.entity.irrep import Irrep
from pkg.cyclo import RootOfUnity, Vector

BasisPair = Tuple[int, int]


@dataclass(eq=False)
class YDModule:
    cls: ConjugacyClass
    rep: Irrep
    centralizer: Subgroup
    _factors: Dict[Tuple[int, int], Tuple[int, GroupElement]] = field(default_factory=dict, repr=False)

    @property
    def degree(self) -> int:
        return self.cls.size * self.rep.degree

    @property
    def basis(self) -> List[BasisPair]:
        return [(i, u) for i in range(self.cls.size) for u in range(self.rep.degree)]

    def factor(self, i: int, j: int) -> Tuple[int, GroupElement]:
        """(h, γ) with t_i g_j = g_h γ and γ in the centralizer of s."""
        key = (i, j)
        cached = self._factors.get(key)
        if cached is not None:
            return cached
        t = self.cls.elements
        g = self.cls.representatives
        h = self.cls.index_of(t[j].conjugate_by(t[i]))
        gamma = g[h].inverse() * t[i] * g[j]
        if not self.centralizer.contains(gamma):
            raise AlgebraError(f"t_{i + 1} g_{j + 1} does not factor through g_{h + 1}")
        self._factors[key] = (h, gamma)
        return h, gamma


@dataclass(frozen=True)
class Subrack:
    indices: Tuple[int, ...]
    abelian: bool
    maximal: bool

    @property
    def size(self) -> int:
        return len(self.indices)

    def render(self, cls: ConjugacyClass) -> str:
        return "{" + ", ".join(cls.elements[i].render() for i in self.indices) + "}"


@dataclass(frozen=True)
class QMatrix:
    """Diagonal braiding c(v_i ⊗ v_j) = q_ij v_j ⊗ v_i."""

    entries: Tuple[Tuple[RootOfUnity, ...], ...]
    indices: Tuple[int, ...] = ()
    tag: Optional[Vector] = field(default=None, compare=False)

    def __post_init__(self):
        if any(len(row) != len(self.entries) for row in self.entries):
            raise ValueError("q-matrix must be square")

    @classmethod
    def of(cls, rows: Sequence[Sequence[RootOfUnity | int]], indices: Sequence[int] = ()) -> "QMatrix":
        """Rows of roots of unity; the integers 1 and -1 are accepted as shorthands."""
        def coerce(q):
            if isinstance(q, RootOfUnity):
                return q
            if q == 1:
                return RootOfUnity.one()
            if q == -1:
                return RootOfUnity.minus_one()
            raise ValueError(f"{q!r} is not a root of unity")
        return cls(tuple(tuple(coerce(q) for q in row) for row in rows), tuple(indices))

    @property
    def size(self) -> int:
        return len(self.entries)

    def q(self, i: int, j: int) -> RootOfUnity:
        return self.entries[i][j]

    def is_negative(self) -> bool:
        """All q_ii = -1 and q_ij q_ji = 1 for i ≠ j."""
        n = self.size
        return all(self.q(i, i).is_minus_one() for i in range(n)) and all(
            (self.q(i, j) * self.q(j, i)).is_one() for i in range(n) for j in range(n) if i != j
        )

    def restricted(self, positions: Sequence[int]) -> "QMatrix":
        rows = tuple(tuple(self.entries[a][b] for b in positions) for a in positions)
        idx = tuple(self.indices[p] for p in positions) if self.indices else ()
        return QMatrix(rows, idx, self.tag)

    def render(self) -> List[List[str]]:
        return [[q.render() for q in row] for row in self.entries]


@dataclass
class RackDecomposition:
    """Blocks of a reflection class of D_n, each isomorphic to the reflection class of D_d."""

    n: int
    d: int
    blocks: List[Tuple[int, ...]]
    isomorphisms: List[Dict[int, GroupElement]]
    quotient: Dict[int, GroupElement]
