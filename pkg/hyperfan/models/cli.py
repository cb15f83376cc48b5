from __future__ import annotations
from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from .spectral import SolverConfig


class Subcommand(str, Enum):
    """Commands understood by the ``hyperfan`` executable."""

    FAN = "fan"
    LAMBDA = "lambda"
    ENUMERATE = "enumerate"
    SCAN = "scan"
    BOUND = "bound"
    ASYMPTOTICS = "asymptotics"
    CHECK = "check"


CacheChoice = Literal["none", "memory", "redis"]

_NEEDS_N = {Subcommand.FAN, Subcommand.ENUMERATE, Subcommand.SCAN, Subcommand.BOUND}
_MIN_N = {
    Subcommand.FAN: 3,
    Subcommand.ENUMERATE: 3,
    Subcommand.SCAN: 4,
    Subcommand.BOUND: 3,
}


class CliInvocation(BaseModel):
    """A validated command line.

    Args:
        subcommand (Subcommand): What to run.
        n (Optional[int]): Vertex count for ``fan``, ``enumerate``, ``scan`` and ``bound``.
        ns (tuple[int, ...]): Vertex counts for ``asymptotics``. Empty means the default table.
        input_path (str): Hypergraph document for ``lambda`` and ``check``; ``-`` is stdin.
        tol (float): Solver bracket tolerance.
        max_iter (int): Solver iteration budget.
        seed (int): Solver seed.
        shift (float): Solver diagonal shift.
        dedupe (bool): One triangulation per symmetry class.
        workers (int): Solver processes for ``scan``.
        max_n (int): Largest ``n`` accepted by ``scan``.
        cache (CacheChoice): Result cache backend.
        redis_host (str): Redis host when ``cache`` is ``redis``.
        redis_port (int): Redis port when ``cache`` is ``redis``.
        output (Optional[str]): Output file. None writes to stdout.

    """

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand = Field(..., description="What to run")
    n: Optional[int] = Field(default=None, description="Vertex count")
    ns: tuple[int, ...] = Field(default=(), description="Vertex counts for the asymptotic table")
    input_path: str = Field(default="-", description="Input document path, '-' for stdin")
    tol: float = Field(default=1e-10, gt=0, description="Solver bracket tolerance")
    max_iter: int = Field(default=1_000_000, ge=1, description="Solver iteration budget")
    seed: int = Field(default=0, description="Solver seed")
    shift: float = Field(default=1.0, ge=0, description="Solver diagonal shift")
    dedupe: bool = Field(default=False, description="Scan one triangulation per class")
    workers: int = Field(default=1, ge=1, description="Solver processes")
    max_n: int = Field(default=12, ge=4, description="Largest n accepted by scan")
    cache: CacheChoice = Field(default="none", description="Result cache backend")
    redis_host: str = Field(default="localhost", description="Redis host")
    redis_port: int = Field(default=6379, ge=1, le=65535, description="Redis port")
    output: Optional[str] = Field(default=None, description="Output file, stdout if omitted")

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if self.subcommand in _NEEDS_N:
            if self.n is None:
                msg = f"{self.subcommand.value} needs n"
                raise ValueError(msg)
            low = _MIN_N[self.subcommand]
            if self.n < low:
                msg = f"{self.subcommand.value} needs n >= {low}, got {self.n}"
                raise ValueError(msg)
        if self.subcommand is Subcommand.SCAN and self.n is not None and self.n > self.max_n:
            msg = f"scan needs n <= {self.max_n}, got {self.n}"
            raise ValueError(msg)
        if any(v < 3 for v in self.ns):  # noqa: PLR2004
            msg = "asymptotics needs every n >= 3"
            raise ValueError(msg)
        return self

    def solver_config(self) -> SolverConfig:
        """The solver settings carried by this invocation."""
        return SolverConfig(tol=self.tol, max_iter=self.max_iter, seed=self.seed, shift=self.shift)
