"""
Data models for framewigner: enums, reports, command configuration and JSON documents
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class FrameKind(str, Enum):
    """Named starting frames"""
    POLYGON = "polygon"
    TETRAHEDRON = "tetrahedron"
    ICOSAHEDRON = "icosahedron"
    ORTHONORMAL = "orthonormal"
    MERCEDES = "mercedes"


class StatePreset(str, Enum):
    """Named preset states"""
    PURE1 = "pure1"    # (1, -i)/sqrt(2)
    MIXED1 = "mixed1"  # (1/3)[[1, i], [-i, 2]]
    BELL = "bell"      # (|01> + |10>)/sqrt(2)


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    PGM = "pgm"


class TraceOut(str, Enum):
    """Which factor of a bipartite table is summed out"""
    FIRST = "first"
    SECOND = "second"


class FrameSpec(BaseModel):
    """A frame kind plus its integer parameter, parsed from e.g. 'polygon:30'"""
    kind: FrameKind
    param: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "FrameSpec":
        name, _, param = text.partition(":")
        return cls(kind=name.strip().lower(), param=int(param) if param else None)

    def __str__(self) -> str:
        return self.kind.value if self.param is None else f"{self.kind.value}:{self.param}"


class CommandConfig(BaseModel):
    """Resolved options of one CLI invocation"""
    command: str
    frame: Optional[FrameSpec] = None
    state: Optional[str] = None  # preset name or path to a matrix JSON file
    output: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    seed: int = 0
    epsilon: float = 0.01
    trials: int = 2000

    @field_validator("epsilon")
    @classmethod
    def _positive_epsilon(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("epsilon must be positive")
        return v

    @field_validator("trials")
    @classmethod
    def _positive_trials(cls, v: int) -> int:
        if v < 1:
            raise ValueError("trials must be at least 1")
        return v


class ConvergenceRecord(BaseModel):
    """N_m and C_m over increasing polygon frames, with the large-m estimates"""
    m_values: List[int]
    N_values: List[float]
    C_values: List[float]
    N_limit: float
    C_limit: float
    N_spread: float
    C_spread: float
    limit_spread: float

    @model_validator(mode="after")
    def _same_lengths(self):
        if not (len(self.m_values) == len(self.N_values) == len(self.C_values)):
            raise ValueError("m_values, N_values and C_values must share length")
        return self


class NoiseExperimentReport(BaseModel):
    """Outcome of the perturbed-coefficient reconstruction experiment"""
    epsilon: float
    trials: int
    seed: int
    generator: str = "numpy.PCG64/SeedSequence(seed, spawn_key=(trial,))"
    frame_errors: List[float] = Field(repr=False)
    basis_errors: List[float] = Field(repr=False)
    mean_frame: float
    mean_basis: float
    stderr_frame: float
    stderr_basis: float

    def summary(self) -> dict:
        """The fields written to report JSON"""
        return self.model_dump(include={
            "epsilon", "trials", "seed", "generator", "mean_frame", "mean_basis",
            "stderr_frame", "stderr_basis",
        })


# Wire documents. Complex numbers travel as [re, im] pairs.
ComplexPair = Tuple[float, float]


class FrameDocument(BaseModel):
    d: int
    vectors: List[List[ComplexPair]]

    @model_validator(mode="after")
    def _consistent(self):
        for k, v in enumerate(self.vectors):
            if len(v) != self.d:
                raise ValueError(f"vector {k} has {len(v)} entries, expected d={self.d}")
        return self


class MatrixDocument(BaseModel):
    rows: int
    cols: int
    entries: List[List[ComplexPair]]

    @model_validator(mode="after")
    def _consistent(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        return self


class WignerDocument(BaseModel):
    """Real table on array positions 0..count-1"""
    count: int
    values: List[List[float]]

    @model_validator(mode="after")
    def _square(self):
        if len(self.values) != self.count or any(len(r) != self.count for r in self.values):
            raise ValueError(f"values do not form a {self.count}x{self.count} grid")
        return self
