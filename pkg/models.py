# models.py
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class PluckerVectorModel(BaseModel):
    """A Plücker vector: pair keys like "12" mapped to Gaussian-rational literals."""
    n: int = 5
    coords: Dict[str, str]


class PolytopeModel(BaseModel):
    """An admissible polytope with its type tag and face counts."""
    vertices: List[List[int]]
    dim: int
    type: Optional[str] = None
    f_vector: List[int] = Field(default_factory=list)


class HomologyDegreeModel(BaseModel):
    """One nontrivial homology group."""
    degree: int
    free_rank: int
    torsion: List[int] = Field(default_factory=list)


class HomologyProfileModel(BaseModel):
    """The nontrivial homology groups of a space."""
    space: str
    coefficients: str
    degrees: List[HomologyDegreeModel]
    euler_characteristic: int


class MomentRequest(BaseModel):
    """A plane given by exactly one of: a Plücker vector, a matrix, or an admissible set."""
    plucker: Optional[PluckerVectorModel] = None
    matrix: Optional[List[List[str]]] = None
    sigma: Optional[List[List[int]]] = None
    n: int = 5


class MomentResponse(BaseModel):
    """The moment image of a plane and the stratum it lies in."""
    plucker: PluckerVectorModel
    support: List[List[int]]
    moment: List[str]
    dmu_rank: int
    regular_point: bool
    in_relative_interior: bool
    polytope: PolytopeModel


class EmbedRequest(BaseModel):
    """A point of the universal space of parameters, or a main-stratum plane."""
    matrix: Optional[List[List[str]]] = None
    triple: Optional[List[str]] = None
    direction: Optional[str] = None


class CheckResult(BaseModel):
    """Outcome of one acceptance check."""
    name: str
    passed: bool
    detail: str = ""


class Report(BaseModel):
    """The machine-readable payload of a command plus a cosmetic table."""
    command: str
    seed: Optional[int] = None
    payload: Dict[str, Any]
    table: str = ""
