# app/screener/entity/verdict.py
"""
Verdict models.

``Verdict`` is what a screen returns; ``VerdictRecord`` is the flat row that
tables, scans and the command line emit (JSON field order is the row order).
"""

from dataclasses import dataclass
from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from app.core.config import settings

VerdictTag = Literal["InfiniteDim", "FiniteDim", "Undetermined"]


class Verdict(BaseModel):
    tag: VerdictTag
    dimension: Optional[int] = None
    reasons: List[str] = Field(default_factory=list)
    witness: Optional[str] = None
    negative_braiding: bool = False
    # QMatrix and subrack indices kept for cross-checks, never serialized
    witness_q: Optional[Any] = Field(default=None, exclude=True)
    witness_subrack: Optional[Tuple[int, ...]] = Field(default=None, exclude=True)

    @model_validator(mode="after")
    def check_shape(self):
        if self.tag == "InfiniteDim" and not self.reasons:
            raise ValueError("an infinite verdict needs at least one reason")
        if self.tag == "FiniteDim" and (self.dimension is None or not self.reasons):
            raise ValueError("a finite verdict needs a dimension and the rule certifying it")
        if self.tag != "FiniteDim" and self.dimension is not None:
            raise ValueError("only finite verdicts carry a dimension")
        return self

    @classmethod
    def infinite(cls, reason: str, **kwargs) -> "Verdict":
        return cls(tag="InfiniteDim", reasons=[reason], **kwargs)

    @property
    def is_infinite(self) -> bool:
        return self.tag == "InfiniteDim"


class VerdictRecord(BaseModel):
    group: str
    class_rep: str
    class_size: int
    centralizer: str
    rep: str
    q_ss: str
    verdict: VerdictTag
    dimension: Optional[int] = None
    reasons: List[str] = Field(default_factory=list)
    witness: Optional[str] = None
    negative_braiding: bool = False


@dataclass
class ScreenOptions:
    subrack_bound: int = settings.SUBRACK_CLASS_BOUND
    # R5 is rerun as corroboration after an earlier rule fired, for classes up to this size
    corroboration_bound: int = 12
    confirm_finite: bool = True
    max_degree: int = settings.MAX_DEGREE
    budget: int = settings.BUDGET
    verify: bool = False


class TableSummaryRow(BaseModel):
    """One line of a dihedral table: rows sharing orbit family, verdict, dimension and sign data."""

    orbit: str
    centralizer: str
    reps: List[str]
    verdict: VerdictTag
    dimension: Optional[int] = None
    negative_braiding: bool = False
    count: int

    @property
    def dimension_text(self) -> str:
        if self.verdict == "InfiniteDim":
            return "∞"
        if self.verdict == "FiniteDim":
            return str(self.dimension)
        return "negative braiding" if self.negative_braiding else "?"
