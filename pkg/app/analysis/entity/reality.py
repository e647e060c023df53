# app/analysis/entity/reality.py
"""
Records for the group-theoretic hypotheses the screener consumes.
"""

from typing import NamedTuple, Optional

from pydantic import BaseModel, ConfigDict

from app.group.entity.element import GroupElement


class RealityReport(BaseModel):
    """Whether s is conjugate to s^-1, and whether an involution does it."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    is_real: bool
    is_absolutely_real: bool
    inverting_witness: Optional[GroupElement] = None
    involution_witness: Optional[GroupElement] = None


class PowerWitness(BaseModel):
    """σ s σ^-1 = s^j with s^j ≠ s in the class of s."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    j: int
    sigma: GroupElement
    sigma_order: int
    distinct3: bool
    square_returns: bool

    def render(self) -> str:
        return f"j={self.j}, sigma={self.sigma.render()}"


class AbsoluteRealityCriteria(NamedTuple):
    fixed_points: bool
    translation_parity: bool

    @property
    def holds(self) -> bool:
        return self.fixed_points or self.translation_parity
