from src import constants
from src.core.exceptions import ArgumentError, NumericalError


class LengthMismatchError(ArgumentError):
    message = constants.LENGTH_MISMATCH


class NotSymmetricError(ArgumentError):
    message = constants.NOT_SYMMETRIC


class EigenCountError(ArgumentError):
    message = constants.EIGEN_COUNT


class NotUnitVectorError(ArgumentError):
    message = constants.NOT_UNIT_VECTOR


class ZeroDegreeError(NumericalError):
    """
    Raised when a Laplacian is requested for a similarity matrix with a non-positive degree.
    """

    message = constants.ZERO_DEGREE


class EigenConvergenceError(NumericalError):
    message = constants.EIGEN_NOT_CONVERGED


class EigenResidualError(NumericalError):
    message = constants.EIGEN_RESIDUAL


class QuadraticFormError(NumericalError):
    message = constants.QUADRATIC_FORM_MISMATCH
