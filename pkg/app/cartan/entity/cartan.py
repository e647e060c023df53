# app/cartan/entity/cartan.py
from dataclasses import dataclass, field
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class CartanMatrix:
    """Generalized Cartan matrix: a_ii = 2, a_ij ≤ 0 off the diagonal."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
            if row[i] != 2:
                raise ValueError(f"diagonal entry a_{i + 1}{i + 1} = {row[i]} is not 2")
            if any(a > 0 for j, a in enumerate(row) if j != i):
                raise ValueError(f"row {i + 1} has a positive off-diagonal entry")

    @classmethod
    def of(cls, rows) -> "CartanMatrix":
        return cls(tuple(tuple(int(a) for a in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def render(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class NotCartanType:
    """No exponent a with q_ii^a = q_ij q_ji for the pair (i, j)."""

    i: int
    j: int


@dataclass(frozen=True)
class InfiniteImmediately:
    """q_ii = 1: the line spanned by v_i already has an infinite Nichols algebra."""

    i: int


@dataclass(frozen=True)
class DynkinComponent:
    label: Optional[str]
    indices: Tuple[int, ...]
    determinant: int

    @property
    def finite(self) -> bool:
        return self.label is not None


@dataclass
class FiniteTypeReport:
    components: List[DynkinComponent] = field(default_factory=list)

    @property
    def finite(self) -> bool:
        return all(c.finite for c in self.components)

    @property
    def labels(self) -> List[str]:
        return [c.label or f"non-finite{list(i + 1 for i in c.indices)}" for c in self.components]

    def __bool__(self) -> bool:
        return self.finite


@dataclass(frozen=True)
class HilbertPrefix:
    """dim B^0, ..., dim B^D of a Nichols algebra."""

    degree_cap: int
    coefficients: Tuple[int, ...]

    @property
    def terminated(self) -> bool:
        return 0 in self.coefficients

    @property
    def total(self) -> Optional[int]:
        """dim B when the series reached zero within the cap."""
        return sum(self.coefficients) if self.terminated else None
