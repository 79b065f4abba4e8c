"""Exception hierarchy shared by every module.

Errors fall in three groups, which the CLI maps to distinct exit codes:

* ``InputError``: the caller handed us something malformed (bad PD text,
  a link instead of a knot, a composite "prime", ...).
* ``InvariantViolation``: a consistency check that the mathematics
  guarantees has failed.  Seeing one of these means a bug.
* everything else derived from ``KnotColorError`` (resource caps).
"""


class KnotColorError(Exception):
    pass


class InputError(KnotColorError, ValueError):
    pass


class InvariantViolation(KnotColorError, AssertionError):
    pass


# -- diagram -----------------------------------------------------------------

class DiagramError(InputError):
    pass


class MalformedToken(DiagramError):
    pass


class LabelUsedOtherThanTwice(DiagramError):
    pass


class MultiComponent(DiagramError):
    pass


class DisconnectedDiagram(DiagramError):
    pass


class NonPlanarDiagram(DiagramError):
    """Face tracing did not give crossings + 2 faces."""


class ShadingInconsistent(InvariantViolation):
    pass


# -- exact linear algebra -----------------------------------------------------

class NotSquare(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class NotPrime(InputError):
    pass


class SolutionSetTooLarge(KnotColorError):
    def __init__(self, count, cap):
        super().__init__(
            f"solution set has {count} elements, above the enumeration cap {cap}; "
            f"raise KNOTCOLOR_MAX_SOLUTIONS or ask for counts only"
        )
        self.count = count
        self.cap = cap


# -- colorings ----------------------------------------------------------------

class ZeroCrossingDiagram(InputError):
    pass


class SearchSpaceTooLarge(KnotColorError):
    pass


class NotAColoring(InputError):
    pass


# -- goeritz ------------------------------------------------------------------

class NoShadedRegion(InputError):
    pass


class InconsistentDifferences(InvariantViolation):
    pass


class NotInNullspace(InputError):
    pass


class AuxiliaryMismatch(InvariantViolation):
    pass


# -- pretzel ------------------------------------------------------------------

class InvalidPretzelSpec(InputError):
    pass


class NotAKnot(InputError):
    pass


class RouteDisagreement(InvariantViolation):
    """Two independent computations of the same invariant differ."""
