# app/reps/entity/irrep.py
from dataclasses import dataclass, field
from typing import Dict, Literal, Tuple

from app.core.errors import PreconditionError
from app.group.entity.element import GroupElement
from app.group.entity.group import Subgroup
from pkg.cyclo import CycloMatrix, CycloNumber


@dataclass(eq=False)
class Irrep:
    """A representation of ``domain`` given by its full table of matrices."""

    domain: Subgroup
    degree: int
    label: str
    images: Dict[GroupElement, CycloMatrix] = field(repr=False)

    def __call__(self, g: GroupElement) -> CycloMatrix:
        try:
            return self.images[g]
        except KeyError:
            raise PreconditionError(f"{g.render()} is not in the domain of {self.label}") from None

    def character(self, g: GroupElement) -> CycloNumber:
        return self(g).trace()

    @property
    def modulus(self) -> int:
        return next(iter(self.images.values())).modulus

    def __repr__(self) -> str:
        return f"Irrep({self.label}, degree={self.degree}, domain={self.domain.label})"


@dataclass(eq=False)
class Index2Data:
    """
    Restriction of an irrep η of G^s to a subgroup H^s of index two.

    Case "i": η and its sign twist differ, and ``components`` holds the
    irreducible restriction. Case "ii": they agree, and ``components`` holds
    the two conjugate summands of the restriction.
    """

    big: Subgroup
    small: Subgroup
    eta: Irrep
    case: Literal["i", "ii"]
    components: Tuple[Irrep, ...]
