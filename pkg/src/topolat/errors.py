"""Exception types shared across the package."""


class TopolatError(Exception):
    pass


class InvalidInput(TopolatError, ValueError):
    """Input does not satisfy an operation's precondition."""


class TopologyAxiomError(InvalidInput):
    """A family of sets fails one of the topology axioms.

    ``axiom`` names the violated axiom and ``witness`` holds the offending
    sets (as point-index lists) so the diagnostic can be reproduced.
    """

    def __init__(self, axiom, witness, message=None):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"not a topology: {axiom} fails for {list(self.witness)}")


class InternalInconsistency(TopolatError, AssertionError):
    """Two characterizations that must agree gave different answers."""


class UnsupportedCombination(TopolatError):
    """A symbolic construction would leave the representable catalog."""
