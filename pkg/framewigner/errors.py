"""
Exception hierarchy for framewigner
"""
from typing import Optional


class FrameWignerError(Exception):
    """Base class for all framewigner errors"""


class InputError(FrameWignerError, ValueError):
    """Malformed or mismatched input (dimensions, hermiticity, unitarity, parameters)"""


class PreconditionError(InputError):
    """An operation was called on a value that does not satisfy its precondition"""


class NotAFrameError(InputError):
    """The frame operator is singular, so the family does not span the space"""


class UnsupportedDimensionError(InputError):
    """The Weyl machinery is only defined for odd dimensions"""


class RotationCoverError(InputError):
    """A group element does not map the frame into itself"""

    def __init__(self, message: str, element_index: Optional[int] = None):
        super().__init__(message)
        self.element_index = element_index


class NumericalError(FrameWignerError, ArithmeticError):
    """A quantity is numerically undefined for the given input"""


class GaussianConstructionError(NumericalError):
    """The unnormalized Gaussian synthesis has non-positive trace"""
