from src import constants
from src.core.exceptions import ScenarioError, UsageError


class InvalidConfigError(UsageError):
    message = constants.INVALID_CONFIG


class ConfigFileError(UsageError):
    message = constants.CONFIG_FILE_UNREADABLE


class MissingFigureDataError(ScenarioError):
    message = constants.MISSING_FIGURE_DATA
