"""Exception hierarchy shared across the package."""


class FormsymError(Exception):
    """Base class for all package errors."""


class InputError(FormsymError):
    """Malformed user input (files, manifests, coefficient specs)."""


class PreconditionError(FormsymError):
    """An operation was called on data violating its stated precondition."""


class DisjointnessError(PreconditionError):
    """Opens required to be pairwise disjoint overlap.

    Carries a witness simplex shared by two of the opens.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OrientabilityError(PreconditionError):
    """A (sub)complex is not orientable for the requested coefficients."""


class FunctorialityError(FormsymError):
    """Two composition paths through a diagram disagree.

    ``square`` names the offending (source, via, target) data.
    """

    def __init__(self, message, square=None):
        super().__init__(message)
        self.square = square


class UnsupportedError(FormsymError):
    """Input outside the implemented fragment (infinite carriers, etc.)."""


class BudgetError(FormsymError):
    """A combinatorial enumeration exceeded its configured budget."""
