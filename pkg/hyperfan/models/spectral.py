from __future__ import annotations
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self


class Normalization(str, Enum):
    """How a reported eigenvector is scaled."""

    UNIT_R_NORM = "unit-r-norm"
    MAX_ENTRY_ONE = "max-entry-one"


class SolverConfig(BaseModel):
    """Knobs of the shifted power iteration.

    Attributes:
        tol: Stop once the Collatz-Wielandt bracket is narrower than this.
        max_iter: Iteration budget per connected component.
        shift: Diagonal shift added to every iterate, subtracted on report.
        seed: Seed of the perturbation applied to the uniform starting vector.
        normalization: Scaling of the reported vector.

    """

    model_config = ConfigDict(frozen=True)

    tol: float = Field(1e-10, gt=0, description="Bracket width at which to stop")
    max_iter: int = Field(1_000_000, ge=1, description="Iteration budget")
    shift: float = Field(1.0, ge=0, description="Non-negative diagonal shift")
    seed: int = Field(0, description="Seed for the starting vector")
    normalization: Normalization = Field(
        Normalization.UNIT_R_NORM,
        description="Scaling of the reported vector",
    )


class PerronResult(BaseModel):
    """Spectral radius estimate with its certificate."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(..., alias="lambda", ge=0, description="Spectral radius estimate")
    vector: tuple[float, ...] = Field(..., description="Perron vector, zero off the winning component")
    bracket_low: float = Field(..., description="Collatz-Wielandt lower bound")
    bracket_high: float = Field(..., description="Collatz-Wielandt upper bound")
    residual: float = Field(..., ge=0, description="Max eigenequation defect")
    iterations: int = Field(..., ge=0, description="Power iterations spent")
    normalization: Normalization = Field(
        Normalization.UNIT_R_NORM,
        description="Scaling of the vector",
    )
    degenerate: bool = Field(default=False, description="True when the hypergraph has no edges")
    component: tuple[int, ...] = Field(
        default=(),
        description="Vertices of the component achieving the radius",
    )

    @model_validator(mode="after")
    def _check_bracket(self) -> Self:
        if not self.bracket_low <= self.lambda_ <= self.bracket_high:
            msg = (
                f"lambda {self.lambda_} outside bracket "
                f"[{self.bracket_low}, {self.bracket_high}]"
            )
            raise ValueError(msg)
        return self
