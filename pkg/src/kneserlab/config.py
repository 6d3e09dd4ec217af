"""Layered settings: init kwargs > environment > YAML file > defaults."""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)

CONFIG_FILE_ENV = "KNESERLAB_CONFIG_FILE"
DEFAULT_CONFIG_FILE = Path("config/settings.yaml")


class SearchSettings(BaseModel):
    """Budgets and pruning for the exhaustive base-case search."""

    max_nodes: int = Field(default=10**8, ge=1)
    max_seconds: float = Field(default=300.0, gt=0)
    symmetry_breaking: bool = True


class DescentSettings(BaseModel):
    """Where reductions stop; the effective threshold is max(2k, limit)."""

    base_case_limit: int = Field(default=0, ge=0)


class TuckerSettings(BaseModel):
    full_ball_cap: int = Field(default=12, ge=1)
    exhaust_cap: int = Field(default=2**20, ge=1)


class TranslateSettings(BaseModel):
    counting: Literal["unary", "carry_save"] = "unary"
    solver: str = "minisat22"


class GreedySettings(BaseModel):
    sweeps: int = Field(default=3, ge=0)


class LoggingSettings(BaseModel):
    level: str = "INFO"
    json_output: bool = Field(default=False, alias="json")

    model_config = {"populate_by_name": True}


class Settings(BaseSettings):
    """Application settings."""

    search: SearchSettings = SearchSettings()
    descent: DescentSettings = DescentSettings()
    tucker: TuckerSettings = TuckerSettings()
    translate: TranslateSettings = TranslateSettings()
    greedy: GreedySettings = GreedySettings()
    logging: LoggingSettings = LoggingSettings()

    model_config = SettingsConfigDict(
        env_prefix="KNESERLAB_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        yaml_file = config_file()
        return (
            init_settings,
            env_settings,
            YamlConfigSettingsSource(settings_cls, yaml_file=yaml_file),
        )


_config_file: Path | None = None


def config_file() -> Path:
    """The YAML file settings are read from: explicit choice, then environment, then default."""
    if _config_file is not None:
        return _config_file
    return Path(os.environ.get(CONFIG_FILE_ENV, DEFAULT_CONFIG_FILE))


def use_config_file(path: Path | None) -> None:
    """Read settings from ``path`` from now on (None restores the default lookup)."""
    global _config_file
    _config_file = path
    reset_settings()


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads every source."""
    get_settings.cache_clear()
