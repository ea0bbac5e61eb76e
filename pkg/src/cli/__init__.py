from src.cli.enums import CommandEnum, SvgKindEnum
from src.cli.exceptions import ConfigFileError, InvalidConfigError, MissingFigureDataError
from src.cli.schemas import OutputBundle, RunConfig
from src.cli.services import RunService, dispatch, parse_config
from src.cli.svg import emit_svg

__all__ = [
    "CommandEnum",
    "SvgKindEnum",
    "ConfigFileError",
    "InvalidConfigError",
    "MissingFigureDataError",
    "OutputBundle",
    "RunConfig",
    "RunService",
    "dispatch",
    "parse_config",
    "emit_svg",
]
