"""Domain errors shared across the workbench.

These signal violated preconditions or falsified structure on the inputs; the
CLI maps all of them to exit code 2.  Plain ValueError is reserved for
programmer-level misuse (shape mismatches and the like).
"""


class WorkbenchError(Exception):
    """Base class for domain-level failures."""


class InvalidParameters(WorkbenchError):
    """Identity parameters (beta, gamma) = (0, 0) or outside the field."""


class NotIdempotent(WorkbenchError):
    """The supplied element does not satisfy e*e = e with e != 0."""


class IdentityFails(WorkbenchError):
    """The algebra does not satisfy the defining identity for these parameters."""


class MinimalPolynomialViolation(WorkbenchError):
    """An operator's minimal polynomial escapes the case polynomial.

    Signals that the input is not in the variety for these parameters, or
    that the case analysis is violated.
    """


class BaseAlgebraNotGaj(WorkbenchError):
    """Representation checks need the base algebra to satisfy the identity."""


class RepresentationInvalid(WorkbenchError):
    """An operation required a valid representation and did not get one."""


class ModuleNotM1(WorkbenchError):
    """Associative-module check requires the module to be all of M_1."""


class HypothesisNotMet(WorkbenchError):
    """A scalar hypothesis of a theorem-level check fails; lists which one."""


class ClassificationFailed(WorkbenchError):
    """No classification case matched; carries the computed decomposition."""

    def __init__(self, message, decomposition=None):
        super().__init__(message)
        self.decomposition = decomposition


class DocumentError(WorkbenchError):
    """Invalid input document; carries the offending path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
