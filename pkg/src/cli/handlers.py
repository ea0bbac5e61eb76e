import functools
from typing import Any, Callable, TypeVar

import typer
from pydantic import ValidationError

from src import constants
from src.cli.exceptions import InvalidConfigError
from src.core.exceptions import CustomException
from src.core.utils import cli_logger

Command = TypeVar("Command", bound=Callable[..., Any])


def transform_validation_errors(exc: ValidationError) -> InvalidConfigError:
    """
    Turn a pydantic :class:`ValidationError` into a usage error naming every offending field.
    """
    transformed_errors = [
        f"{'.'.join(str(part) for part in error['loc']) if error.get('loc') else 'config'}: {error['msg']}"
        for error in exc.errors()
    ]
    return InvalidConfigError(detail="; ".join(transformed_errors))


def exception_handler(command: Command) -> Command:
    """
    Wrap a typer command so every :class:`CustomException` ends the process with its exit code.

    The message is echoed to stderr as ``ERROR: <message>``.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as exc:
            error = transform_validation_errors(exc)
        except CustomException as exc:
            error = exc

        cli_logger.error(f"{command.__name__} failed with exit code {error.exit_code}: {error.message}")
        typer.echo(f"{constants.ERROR}: {error.message}", err=True)
        raise typer.Exit(code=error.exit_code)

    return wrapper  # type: ignore[return-value]
