from src import constants
from src.core.exceptions import ArgumentError, ScenarioError


class DegenerateEigenvalueError(ScenarioError):
    message = constants.DEGENERATE_LIMIT


class NotEnoughRatePointsError(ArgumentError):
    message = constants.NOT_ENOUGH_RATE_POINTS


class InvalidNListError(ArgumentError):
    message = constants.N_LIST_INVALID
