from __future__ import annotations
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class ScanRecord(BaseModel):
    """One row of the extremal scan."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    rank: int = Field(..., ge=1, description="1-based position under descending lambda")
    triangulation: str = Field(..., description="Text form of the scanned triangulation")
    canonical: str = Field(..., description="Text form of its dihedral canonical form")
    lambda_: float = Field(..., alias="lambda", description="Spectral radius, NaN on failure")
    gap_to_fan: float = Field(..., description="lambda(F_n) minus lambda")
    residual: float = Field(..., description="Eigenequation defect of the solve")
    iterations: int = Field(default=0, ge=0, description="Power iterations spent")
    is_fan: bool = Field(..., description="Whether the triangulation is a fan")
    tie_class: int = Field(default=0, ge=0, description="Index of the numerical tie class")
    error: Optional[str] = Field(default=None, description="Solver failure message")

    @property
    def failed(self) -> bool:
        """Whether the solve for this row failed."""
        return self.error is not None or math.isnan(self.lambda_)


class ScanSummary(BaseModel):
    """Flags derived from a finished scan."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Polygon size")
    raw_count: int = Field(..., description="Number of triangulations of the n-gon")
    canonical_count: int = Field(..., description="Number of distinct symmetry classes")
    lambda_fan: float = Field(..., description="Spectral radius of the fan")
    fan_rank_one: bool = Field(..., description="Whether rank 1 is the fan")
    top_gap: Optional[float] = Field(
        default=None,
        description="Gap between the best class and the next distinct class",
    )
    top_gap_exceeds: bool = Field(default=False, description="Whether top_gap > 1e-8")
    violations: tuple[str, ...] = Field(
        default=(),
        description="Non-fan classes with lambda above lambda(F_n) + 1e-9",
    )
    failures: int = Field(default=0, ge=0, description="Rows whose solve failed")


class BoundReport(BaseModel):
    """Fan spectral radius checked against the witness lower bound."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="Vertex count")
    lambda_fan: float = Field(..., description="lambda(F_n) from the solver")
    bound: float = Field(..., description="cbrt(4(n-1)) * (1 - 1/(n-1))")
    ratio_to_cbrt4n: float = Field(..., description="lambda(F_n) / cbrt(4n)")
    ok: bool = Field(..., description="lambda_fan >= bound - 1e-9")
