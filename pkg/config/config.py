import os

from dotenv import find_dotenv, load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv(find_dotenv())


class AppSettings(BaseSettings):
    model_config = SettingsConfigDict(extra="allow", env_file="./.env", env_file_encoding="utf-8")

    APP_NAME: str = "speclab"
    APP_VERSION: str = "0.1.0"
    LOG_LEVEL: str = "INFO"


class LabSettings(BaseSettings):
    model_config = SettingsConfigDict(
        extra="allow", env_file="./.env", env_file_encoding="utf-8", env_prefix="SPECLAB_"
    )

    THREADS: int | None = Field(default=None, validate_default=True)
    GRID_N: int = 4000
    MARGIN: float = 0.05
    REPS: int = 20
    PROBES: int = 2000
    OUTPUT_DIR: str = "out"

    @field_validator("THREADS", mode="before")
    def default_threads(cls, val) -> int:
        """
        Cap the worker count at the available cores when SPECLAB_THREADS is unset or empty.
        """
        if val in (None, ""):
            return os.cpu_count() or 1

        threads = int(val)
        if threads < 1:
            raise ValueError("SPECLAB_THREADS must be a positive integer")
        return threads


app_settings = AppSettings()
lab_settings = LabSettings()
