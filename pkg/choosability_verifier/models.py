"""
Data models for the choosability verifier
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field
from pydantic.alias_generators import to_camel


class ReportModel(BaseModel):
    """Base for every serialized document: camelCase keys, stable field order"""
    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


# === Neighbor classification ===

class BaseClass(str, Enum):
    """Face pattern around an edge"""
    WEAK = "Weak"
    SEMI_WEAK = "SemiWeak"
    OTHER = "Other"


class SpecialClass(str, Enum):
    """Refinement of weak degree-5 neighbors of degree-7/8 vertices"""
    E2 = "E2"
    E3 = "E3"
    E4 = "E4"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    NONE = "None"


class NeighborClass(ReportModel):
    model_config = ConfigDict(frozen=True, alias_generator=to_camel, populate_by_name=True)

    base: BaseClass
    special: SpecialClass = SpecialClass.NONE


# === Configurations ===

class ConfigId(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    C10 = "C10"
    C11 = "C11"


class ConfigMatch(ReportModel):
    """A binding of a configuration's named vertices into a host graph"""
    config: ConfigId
    binding: Dict[str, int] = Field(..., description="Role name (u, v1, w, ...) -> host vertex id")
    witness_faces: List[int] = Field(default_factory=list, description="Faces certifying weak/semi-weak clauses")

    def vertices(self) -> List[int]:
        return list(self.binding.values())

    def sort_key(self):
        return (sorted(self.binding.values()), list(self.binding.values()))


# === Discharging ===

class ElementKind(str, Enum):
    VERTEX = "vertex"
    FACE = "face"


class Element(ReportModel):
    """A vertex or a face of an embedded graph"""
    model_config = ConfigDict(frozen=True, alias_generator=to_camel, populate_by_name=True)

    kind: ElementKind
    id: int

    def __str__(self) -> str:
        prefix = "v" if self.kind == ElementKind.VERTEX else "f"
        return f"{prefix}{self.id}"


class Transfer(ReportModel):
    """One rule instance moving charge (in twelfths) between two elements"""
    source: Element
    target: Element
    amount: int = Field(..., description="Charge moved, in twelfths")
    rule: str = Field(..., description="Rule id R1..R11")
    multiplicity: int = Field(default=1, description="Facial-walk appearances covered by this transfer")


class ChargeLedger(BaseModel):
    """Exact charges (integer twelfths) per vertex and face plus the transfer log"""
    vertex_charge: Dict[int, int] = Field(default_factory=dict)
    face_charge: Dict[int, int] = Field(default_factory=dict)
    log: List[Transfer] = Field(default_factory=list)
    applied: bool = False

    def total(self) -> int:
        return sum(self.vertex_charge.values()) + sum(self.face_charge.values())

    def charge_of(self, element: Element) -> int:
        if element.kind == ElementKind.VERTEX:
            return self.vertex_charge[element.id]
        return self.face_charge[element.id]


class NegativeElement(ReportModel):
    element: str
    charge: str


class AuditReport(ReportModel):
    """Conservation audit of one discharging run"""
    initial_total: str
    final_total: str
    negatives: List[NegativeElement] = Field(default_factory=list)
    configs_found: Dict[str, int] = Field(default_factory=dict)
    contradiction_flag: bool = False
    locality_misses: List[str] = Field(default_factory=list, description="Negative elements with no match within the locality radius")
    components: int = 1


# === Verdicts ===

class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    BUDGET = "BUDGET"


class Tier(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"
    BOTH = "both"


class Verdict(ReportModel):
    """Outcome of a choosability, lemma or reducibility check"""
    status: Status
    witness: Optional[Dict[str, Any]] = Field(default=None, description="Bad list assignment, coloring or instance")
    instances: int = Field(default=0, description="Assignments or instances examined")
    deferred: int = Field(default=0, description="Samples handed over to a recoloring sub-claim")
    detail: Optional[str] = None
    elapsed: float = Field(default=0.0, exclude=True)

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS


class ClaimVerdict(ReportModel):
    claim: str
    variant: str
    tier: Tier
    status: Status
    instances: int = 0
    deferred: int = 0
    witness: Optional[Dict[str, Any]] = None


class RunReport(ReportModel):
    status: Status
    claims: List[ClaimVerdict] = Field(default_factory=list)


# === Requests ===

class CommandRequest(BaseModel):
    """A parsed CLI invocation"""
    subcommand: str
    input_path: Optional[str] = None
    options: Dict[str, Any] = Field(default_factory=dict)


class GraphRequest(BaseModel):
    """Request body carrying a graph in rotation-file format"""
    graph: str = Field(..., description="Rotation system text, one '<id>: <neighbors>' line per vertex")


class ClassifyRequest(GraphRequest):
    u: int
    v: int


class MatchRequest(GraphRequest):
    config: Optional[ConfigId] = Field(default=None, description="Restrict to one configuration")


class ExplainRequest(GraphRequest):
    element: str = Field(..., description="Vertex id, or f:<index> for a face")


class VerifyConfigRequest(BaseModel):
    tier: Tier = Field(default=Tier.BOTH, description="Which verification tier to run")
    samples: Optional[int] = Field(default=None, description="Samples per gadget for the sampled tier")
    seed: Optional[int] = None


class Explanation(ReportModel):
    """Transfers touching one element and the case it falls under"""
    element: str
    branch: str
    initial_charge: str
    final_charge: str
    transfers: List[Transfer] = Field(default_factory=list)


# === Graph reports ===

class FaceInfo(ReportModel):
    index: int
    degree: int
    vertices: List[int] = Field(..., description="Facial walk, one entry per appearance")


class FacesReport(ReportModel):
    vertices: int
    edges: int
    euler_characteristic: int
    faces: List[FaceInfo] = Field(default_factory=list)


class ClassifyReport(ReportModel):
    u: int
    v: int
    base: BaseClass
    special: SpecialClass
    witness_faces: List[int] = Field(default_factory=list)


class MatchReport(ReportModel):
    summary: Dict[str, int] = Field(default_factory=dict)
    matches: List[ConfigMatch] = Field(default_factory=list)
