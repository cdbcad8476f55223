"""
Linear Representation Schema

Pydantic model for the exported (L, (A_r), C) document.
"""

from typing import Dict, List

from pydantic import BaseModel, Field, model_validator


class LinearRepDocument(BaseModel):
    """JSON form of a linear representation; matrices are row-major."""

    p: int = Field(..., ge=2, description="Field characteristic")
    dx: int = Field(..., ge=0, description="Rectangle bound in x")
    dy: int = Field(..., ge=0, description="Rectangle bound in y")
    L: List[int]
    C: List[int]
    A: Dict[str, List[List[int]]] = Field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return (1 + self.dx) * (1 + self.dy)

    @model_validator(mode="after")
    def check_shapes(self) -> "LinearRepDocument":
        dim = self.dimension
        if len(self.L) != dim or len(self.C) != dim:
            raise ValueError(f"L and C must have length {dim}")
        for key, matrix in self.A.items():
            if not key.isdigit() or int(key) >= self.p:
                raise ValueError(f"digit key {key!r} outside [0, {self.p})")
            if len(matrix) != dim or any(len(row) != dim for row in matrix):
                raise ValueError(f"A[{key}] must be {dim}x{dim}")
        values = [*self.L, *self.C, *(v for m in self.A.values() for row in m for v in row)]
        if any(not 0 <= v < self.p for v in values):
            raise ValueError(f"entries must be residues in [0, {self.p})")
        return self
