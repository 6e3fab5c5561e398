"""
Configuration Settings

Handles application configuration using Pydantic for validation.
Supports loading from environment variables and configuration files.
"""

import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings

VALID_SCOPES = ["all", "reider", "singularities", "coverings", "appendix2", "registry"]

SECTION_NAMES = ["logging", "verifier", "registry"]


def find_config_file() -> Optional[str]:
    """Find configuration file using priority order:
    1. BALLQ_CONFIG_FILE environment variable
    2. ./ballq_verify.yaml (project-specific)
    3. ./config.local.yaml (local override)
    """
    env_config = os.getenv("BALLQ_CONFIG_FILE")
    if env_config and Path(env_config).exists():
        return env_config

    project_config = Path("ballq_verify.yaml")
    if project_config.exists():
        return str(project_config)

    local_config = Path("config.local.yaml")
    if local_config.exists():
        return str(local_config)

    return None


class LoggingSettings(BaseSettings):
    """Logging configuration settings."""

    enabled: bool = Field(default=True, description="Enable logging")
    level: str = Field(default="WARNING", description="Log level")
    format: str = Field(default="console", description="Log format: json or console")
    file_path: Optional[str] = Field(default=None, description="Log file path")
    max_file_size: int = Field(
        default=10485760, description="Max log file size in bytes (10MB)"
    )
    backup_count: int = Field(default=5, description="Number of log file backups")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("format")
    @classmethod
    def validate_format(cls, v):
        valid_formats = ["json", "console"]
        if v.lower() not in valid_formats:
            raise ValueError(f"Log format must be one of: {valid_formats}")
        return v.lower()

    model_config = ConfigDict(env_prefix="BALLQ_LOG_")


class VerifierSettings(BaseSettings):
    """Proof replay settings."""

    default_scope: str = Field(default="all", description="Default report scope")
    output_format: str = Field(
        default="text", description="Report format: text or json"
    )
    fail_on_flagged: bool = Field(
        default=False, description="Treat FLAGGED checks as failures"
    )
    parallel: bool = Field(default=True, description="Evaluate checks in parallel")
    max_workers: int = Field(default=4, description="Maximum parallel workers")
    hyperbolic_filter: bool = Field(
        default=True,
        description="Exclude curves of arithmetic genus <= 1 in Reider enumeration",
    )
    manifest_file: Optional[str] = Field(
        default=None, description="Override for the shipped check manifest"
    )

    @field_validator("default_scope")
    @classmethod
    def validate_scope(cls, v):
        if v.lower() not in VALID_SCOPES:
            raise ValueError(f"Scope must be one of: {VALID_SCOPES}")
        return v.lower()

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v):
        valid_formats = ["text", "json"]
        if v.lower() not in valid_formats:
            raise ValueError(f"Output format must be one of: {valid_formats}")
        return v.lower()

    @field_validator("max_workers")
    @classmethod
    def validate_max_workers(cls, v):
        if v < 1:
            raise ValueError("max_workers must be at least 1")
        return v

    model_config = ConfigDict(env_prefix="BALLQ_VERIFIER_")


class RegistrySettings(BaseSettings):
    """Fake projective plane registry settings."""

    data_file: Optional[str] = Field(
        default=None, description="Override for the shipped registry CSV"
    )

    model_config = ConfigDict(env_prefix="BALLQ_REGISTRY_")


class Settings(BaseSettings):
    """Main application settings."""

    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    verifier: VerifierSettings = Field(default_factory=VerifierSettings)
    registry: RegistrySettings = Field(default_factory=RegistrySettings)

    config_file: Optional[str] = Field(
        default=None, description="Configuration file path"
    )
    debug: bool = Field(default=False, description="Enable debug mode")

    model_config = ConfigDict(env_prefix="BALLQ_", case_sensitive=False)

    def __init__(self, **kwargs):
        super().__init__(**kwargs)

        # Fields set from the environment win over the YAML file
        self._store_env_fields()

        if not self.config_file:
            self.config_file = find_config_file()

        if self.config_file and Path(self.config_file).exists():
            self._load_from_file(self.config_file)

    def _store_env_fields(self):
        """Store which fields were set from environment variables."""
        self._env_fields = {}
        for field_name in SECTION_NAMES:
            subsetting = getattr(self, field_name)
            if hasattr(subsetting, "model_fields_set"):
                self._env_fields[field_name] = subsetting.model_fields_set.copy()

    def _load_from_file(self, config_path: str):
        """Load configuration from YAML file."""
        try:
            with open(config_path, "r") as f:
                config_data = yaml.safe_load(f) or {}

            for key, value in config_data.items():
                if not hasattr(self, key) or value is None:
                    continue
                if isinstance(value, dict):
                    current_value = getattr(self, key)
                    if hasattr(current_value, "__dict__"):
                        env_set_fields = self._env_fields.get(key, set())

                        for sub_key, sub_value in value.items():
                            if sub_key in env_set_fields:
                                continue
                            if hasattr(current_value, sub_key):
                                setattr(current_value, sub_key, sub_value)
                elif key not in self.model_fields_set:
                    setattr(self, key, value)
        except Exception as e:
            # Don't fail startup on config file errors, just report
            print(
                f"Warning: Could not load config file {config_path}: {e}",
                file=sys.stderr,
            )

    def to_dict(self) -> Dict[str, Any]:
        """Convert settings to dictionary."""
        return {
            "logging": self.logging.model_dump(),
            "verifier": self.verifier.model_dump(),
            "registry": self.registry.model_dump(),
            "debug": self.debug,
            "config_file": self.config_file,
        }


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def initialize_settings(**kwargs) -> Settings:
    """Initialize settings with custom values."""
    global _settings
    _settings = Settings(**kwargs)
    return _settings
