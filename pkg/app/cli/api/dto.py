# app/cli/api/dto.py
from enum import Enum
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from app.core.config import settings

Verb = Literal["classes", "screen", "table-dn", "scan-an", "rack-decompose", "reality"]


class OutputFormat(str, Enum):
    text = "text"
    json = "json"
    csv = "csv"


class Command(BaseModel):
    """One parsed invocation: exactly one verb plus the specs it needs."""

    verb: Verb
    group: Optional[str] = None
    class_rep: Optional[str] = None
    rep: Optional[str] = None
    n: List[int] = Field(default_factory=list)
    d: Optional[int] = None
    max_degree: int = settings.MAX_DEGREE
    budget: int = settings.BUDGET
    jobs: int = settings.JOBS
    verify: bool = False
    format: OutputFormat = OutputFormat.text

    @field_validator("max_degree", "budget", "jobs")
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value


class ClassRow(BaseModel):
    index: int
    class_rep: str
    size: int
    order: int
    centralizer_order: int
    centralizer: str
    splits: Optional[bool] = None


class RealityRow(BaseModel):
    group: str
    class_rep: str
    order: int
    is_real: bool
    is_absolutely_real: bool
    inverting_witness: Optional[str] = None
    involution_witness: Optional[str] = None
    power_witnesses: List[str] = Field(default_factory=list)
    commutes_with_odd: Optional[bool] = None
    criterion_fixed_points: Optional[bool] = None
    criterion_translation_parity: Optional[bool] = None


class RackBlockRow(BaseModel):
    block: int
    elements: List[str]
    images: List[str]
    quotient: str
