"""
Exceptions raised by the choosability verifier
"""
from typing import Optional


class VerifierError(Exception):
    """Base class for every structured error of the package"""


class EmbeddingError(VerifierError):
    """Invalid rotation system (asymmetry, duplicates, loops, bad syntax)"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAnEdgeError(VerifierError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"({u}, {v}) is not an edge")


class UnknownElementError(VerifierError):
    """A vertex or face id that does not exist in the graph"""


class DisconnectedGraphError(VerifierError):
    def __init__(self, components: int):
        self.components = components
        super().__init__(f"graph is disconnected ({components} components)")


class GenerationError(VerifierError):
    """Random generator could not satisfy its parameters"""


class BudgetExceededError(VerifierError):
    """Instance too large for the exhaustive tier"""


class ResidualSizeError(VerifierError):
    """Gadget inconsistent with the palette: some residual list is empty"""


class MalformedInstanceError(VerifierError):
    """Ill-formed list assignment, coloring or recoloring instance"""


class RulesAlreadyAppliedError(VerifierError):
    def __init__(self):
        super().__init__("discharging rules were already applied to this ledger")


class UnknownGadgetError(VerifierError):
    """Configuration id / variant pair not in the gadget catalog"""
