"""
Pydantic schemas for verification and identity reports
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Outcome of a verification run"""

    PASSED = "passed"
    FAILED = "failed"


class CheckName(str, Enum):
    """Individual checks performed on a family"""

    INJECTIVITY = "injectivity"
    DISJOINTNESS = "disjointness"
    EXACT_COVER = "exact_cover"
    CARDINALITY = "cardinality"
    ROUND_TRIP = "round_trip"
    CLASSIFIER = "classifier"
    DECOMPOSE = "decompose"


class Failure(BaseModel):
    """A failed check with a concrete witness"""

    check: CheckName
    detail: str
    witness: Optional[str] = None


class CellReport(BaseModel):
    """Checks for one (layer, vertex) cell"""

    n: int
    vertex: str
    size: int
    expected: int
    failures: List[Failure] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class VerificationReport(BaseModel):
    """Result of verifying a family against its graph"""

    family: str
    graph: str
    n_max: int
    status: CheckStatus = CheckStatus.PASSED
    cells: List[CellReport] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == CheckStatus.PASSED

    @property
    def failures(self) -> List[Failure]:
        return [failure for cell in self.cells for failure in cell.failures]

    def layer_sizes(self, n: int) -> List[int]:
        """Cell sizes of layer n in vertex order"""
        return [cell.size for cell in self.cells if cell.n == n]


class CatalanReport(BaseModel):
    """Result of checking a bra-ket decomposition exhaustively"""

    sequence: str
    graph: str
    n_max: int
    member_counts: List[int] = Field(default_factory=list)
    expected_counts: List[int] = Field(default_factory=list)
    status: CheckStatus = CheckStatus.PASSED
    failures: List[Failure] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == CheckStatus.PASSED


class IdentityReport(BaseModel):
    """Basis count against the sum of squared half counts"""

    algebra: str
    n: int
    basis_count: int
    half_counts: Dict[str, int] = Field(default_factory=dict)
    sum_of_squares: int
    status: CheckStatus

    @property
    def ok(self) -> bool:
        return self.status == CheckStatus.PASSED


class WeightDimReport(BaseModel):
    """Hook-law dimensions against weight-lattice walk counts"""

    n: int
    dimensions: Dict[str, int] = Field(default_factory=dict)
    walk_counts: Dict[str, int] = Field(default_factory=dict)
    hook_side: int
    walk_side: int
    permutation_side: int
    status: CheckStatus

    @property
    def ok(self) -> bool:
        return self.status == CheckStatus.PASSED
