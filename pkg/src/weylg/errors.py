"""Typed errors shared across the package.

The CLI maps WeylgError subclasses to exit code 2 (typed failure) and
treats report mismatches as exit code 1 (validation failure).
"""


class WeylgError(Exception):
    """Base class for all typed errors raised by this package."""


class InvalidArguments(WeylgError, ValueError):
    pass


class SchemaError(WeylgError, ValueError):
    """Malformed JSON input; message carries the offending path."""


class UndefinedCartanEntry(WeylgError):
    """No m up to the search bound satisfies the vanishing condition.

    The braiding has no groupoid within the bound; carries the pair and
    the bound that was exhausted.
    """

    def __init__(self, pair, m_max):
        self.pair = pair
        self.m_max = m_max
        super().__init__(
            f"no Cartan entry for pair {pair} with m <= {m_max}"
        )


class OddDegreeError(WeylgError):
    """Groupoid-level operations require an even tensor degree."""


class ObjectLimitExceeded(WeylgError):
    """Reflection closure grew past max_objects (possibly infinite)."""


class AxiomViolation(WeylgError):
    """A generated closure violates the Cartan-graph axioms.

    The vanishing condition is preserved at m = -c across a reflection
    (the eigenvector argument), but nothing forces minimality below m
    for degree >= 4, and concrete tensors do violate it; the closure is
    then not a Cartan graph.  Carries the offending checks.
    """

    def __init__(self, failures):
        self.failures = failures
        first = failures[0][0] if failures else "unknown"
        super().__init__(
            f"closure violates the Cartan-graph axioms ({first}, "
            f"{len(failures)} failed checks)"
        )


class DepthExceeded(WeylgError):
    """Root closure did not stabilize within the composition depth cap."""


class NonPeriodic(WeylgError):
    """The alternating reflection walk hit its step cap without recurring."""


class NotAQuiddityCycle(WeylgError):
    """Ear-cutting failed: the sequence does not encode a triangulation."""


class BoundExceeded(WeylgError):
    """Cell enumeration or matrix size exceeded the configured bounds."""


class CellShapeError(WeylgError, ValueError):
    """A cochain was evaluated on a cell shape it does not define."""
