from src import constants
from src.core.exceptions import ArgumentError, ScenarioError


class AnalyticDegreeError(ArgumentError):
    message = constants.ANALYTIC_DEGREE_KERNEL


class TooFewProbesError(ArgumentError):
    message = constants.TOO_FEW_PROBES


class DegreeBelowBoundError(ScenarioError):
    """
    Raised when a grid degree falls below the kernel lower bound l.
    """

    message = constants.DEGREE_BELOW_BOUND


class EssentialSpectrumError(ScenarioError):
    """
    Raised when an eigenvalue lies in (or too close to) the essential spectrum, where the
    extension formula has no well-defined denominator.
    """

    message = constants.ESSENTIAL_SPECTRUM


class ContinuousSpectrumError(ScenarioError):
    message = constants.CONTINUOUS_SPECTRUM
