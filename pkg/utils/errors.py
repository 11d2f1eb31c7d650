"""
Error hierarchy for the Hopf/Nichols toolkit.

Library code raises these; verification routines return reports instead of
raising on a failed axiom. Only the CLI maps them to exit codes.
"""

from typing import Any, Optional


class AlgebraError(Exception):
    """Root of every error raised by the toolkit"""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        payload = {'error': type(self).__name__, 'message': str(self)}
        if self.details:
            payload['details'] = {k: str(v) for k, v in sorted(self.details.items())}
        return payload


class DivisionByZero(AlgebraError):
    """Division by the zero scalar"""


class DivisionByZeroDivisor(AlgebraError):
    """Division by a nonzero element whose norm re^2 - c th^2 vanishes"""


class NonInvertiblePivot(AlgebraError):
    """Elimination found only non-invertible candidates in a pivot column"""


class CapExceeded(AlgebraError):
    """A configured size cap (matrix rows, words, dimension) was exceeded"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} of size {size} exceeds cap {cap}", what=what, size=size, cap=cap)
        self.size = size
        self.cap = cap


class StepCapExceeded(AlgebraError):
    """Rewriting did not terminate within the step cap"""


class IsoCheckFailed(AlgebraError):
    """A candidate Hopf morphism failed one of its checks"""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message, witness=witness)
        self.witness = witness


class YDViolation(AlgebraError):
    """Action and coaction are not Yetter-Drinfeld compatible"""


class NotInLambda(AlgebraError):
    """(i, j) violates pi - j != 0 mod 2p"""

    def __init__(self, p: int, i: int, j: int):
        super().__init__(f"(i, j) = ({i}, {j}) is not in Lambda_{p}: p*i - j = 0 mod {2 * p}", p=p, i=i, j=j)
        self.p, self.i, self.j = p, i, j


class RelationNotInKernel(AlgebraError):
    """A claimed Nichols relation is not annihilated by all skew-derivations"""

    def __init__(self, relation: Any, degree: int):
        super().__init__(f"relation {relation} of degree {degree} is not in the Nichols ideal",
                         relation=relation, degree=degree)
        self.relation = relation
        self.degree = degree


class DimMismatch(AlgebraError):
    """Truncated ideal and Nichols ideal disagree in some degree"""

    def __init__(self, degree: int, expected: int, found: int):
        super().__init__(f"degree {degree}: expected dimension {expected}, found {found}",
                         degree=degree, expected=expected, found=found)
        self.degree = degree
        self.expected = expected
        self.found = found


class FamilyConstraintViolated(AlgebraError):
    """Lifting parameters violate a congruence of the family"""

    def __init__(self, family: str, congruence: str):
        super().__init__(f"{family}: constraint '{congruence}' fails", family=family, congruence=congruence)
        self.family = family
        self.congruence = congruence


class BialgebraAxiomFailed(AlgebraError):
    """A presented algebra with coalgebra data is not a bialgebra"""


class AntipodeNotFound(AlgebraError):
    """No antipode satisfies the convolution identities"""


class UnsupportedP(AlgebraError):
    """p outside the supported range of an operation"""


class VerificationFailed(AlgebraError):
    """A verification report came back with failures"""
