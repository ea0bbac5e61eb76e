from src import constants
from src.core.exceptions import ArgumentError, ScenarioError


class DomainError(ScenarioError):
    """
    Raised when a point lies outside the support of the density.
    """

    message = constants.OUTSIDE_SUPPORT


class TooFewPointsError(ArgumentError):
    message = constants.TOO_FEW_POINTS


class TooFewNodesError(ArgumentError):
    message = constants.TOO_FEW_NODES
