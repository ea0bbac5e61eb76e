from typing import Any, Optional

from src import constants

EXIT_USAGE = 2
EXIT_SCENARIO = 3
EXIT_NUMERICAL = 4


class CustomException(Exception):
    """
    A custom exception class to raise necessary exceptions in the lab.

    The class-level ``message`` may contain ``str.format`` fields; keyword context passed to the
    constructor fills them in. ``exit_code`` is the process exit status the CLI reports.
    """

    exit_code = EXIT_SCENARIO
    message = constants.SOMETHING_WENT_WRONG

    def __init__(self, message: Optional[str] = None, **context: Any):
        if message:
            self.message = message
        elif context:
            self.message = self.message.format(**context)
        self.context = context
        super().__init__(self.message)


class UsageError(CustomException):
    """
    Custom exception for an invalid command line or configuration value (exit 2).
    """

    exit_code = EXIT_USAGE
    message = constants.INVALID_USAGE


class ArgumentError(CustomException):
    """
    Custom exception for an operation called with arguments violating its preconditions (exit 2).
    """

    exit_code = EXIT_USAGE
    message = constants.INVALID_ARGUMENT


class ScenarioError(CustomException):
    """
    Custom exception for a scenario or domain precondition that does not hold (exit 3).
    """

    exit_code = EXIT_SCENARIO


class NumericalError(CustomException):
    """
    Custom exception for solver failures and violated numerical contracts (exit 4).
    """

    exit_code = EXIT_NUMERICAL
