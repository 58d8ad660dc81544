#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./config/ConfigManager.py

"""
Configuration manager for the B-diagram toolkit

This class handles the configuration of the whole application:
1. Loading override files (YAML/JSON)
2. Environment overrides with the BDIAG_ prefix
3. Validation of required values and numeric ranges
4. Dot-path access to values, with defaults as fallback
"""

import os
import copy
import yaml
import json
import logging
from pathlib import Path
from typing import Dict, Any, Optional, Union, List, Mapping
from dataclasses import dataclass

# Used when no file or environment value overrides a key
DEFAULT_CONFIG = {
    "general": {
        "loglevel": "WARNING",
        "rich": True,
        "colors": {
            "enumeration": "cyan",
            "algebra": "blue",
            "oracle": "magenta",
            "selftest": "green",
            "error": "red",
            "warning": "yellow"
        }
    },
    "enumeration": {
        "workers": 1,
        "maxweight": 7
    },
    "selftest": {
        "samples": 200,
        "seed": 2016,
        "level": "quick"
    }
}

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Loaded by the command line when no --config file is given
SHIPPED_CONFIG_PATH = Path(__file__).resolve().parent / "bdiagram_config.json"


@dataclass
class ValidationError:
    """A configuration value that failed validation"""
    path: str
    message: str
    value: Any = None


class ConfigManager:
    """Application configuration manager"""

    def __init__(self, config_path: Optional[Union[str, Path]] = None,
                 env_prefix: str = "BDIAG_", environ: Optional[Mapping[str, str]] = None):
        """
        Args:
            config_path: Override file (YAML/JSON)
            env_prefix: Prefix of environment variables that override the configuration
            environ: Environment to read, os.environ when omitted
        """
        self.logger = logging.getLogger(__name__)
        self.config = copy.deepcopy(DEFAULT_CONFIG)
        self.env_prefix = env_prefix
        self.validation_errors: List[ValidationError] = []
        self.load_errors: List[ValidationError] = []

        if config_path:
            self.load_config(config_path)

        self._override_from_env(os.environ if environ is None else environ)

        self.validate()

        if self.validation_errors:
            self.logger.warning(f"Configuration validation found {len(self.validation_errors)} problem(s):")
            for error in self.validation_errors:
                self.logger.warning(f"  - {error.path}: {error.message}")

    def load_config(self, config_path: Union[str, Path]) -> bool:
        """
        Merges an override file into the configuration

        Args:
            config_path: Path to a .yaml/.yml or .json file

        Returns:
            bool: True on success; failures are recorded in load_errors
        """
        config_path = Path(config_path)

        if not config_path.exists():
            self._add_load_error(str(config_path), "configuration file not found")
            return False

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                if config_path.suffix in ['.yaml', '.yml']:
                    loaded_config = yaml.safe_load(f) or {}
                elif config_path.suffix == '.json':
                    loaded_config = json.load(f)
                else:
                    self._add_load_error(str(config_path), f"unknown configuration file type {config_path.suffix}")
                    return False
        except (OSError, yaml.YAMLError, json.JSONDecodeError) as e:
            self._add_load_error(str(config_path), f"cannot read configuration: {e}")
            return False

        if not isinstance(loaded_config, dict):
            self._add_load_error(str(config_path), "configuration file must hold a mapping")
            return False

        self._update_dict_recursive(self.config, loaded_config)
        self.logger.info(f"Configuration loaded from {config_path}")
        return True

    def _add_load_error(self, path: str, message: str) -> None:
        self.logger.error(f"{message}: {path}")
        self.load_errors.append(ValidationError(path=path, message=message))

    def _update_dict_recursive(self, target: Dict[str, Any], source: Dict[str, Any]) -> None:
        for key, value in source.items():
            if key in target and isinstance(target[key], dict) and isinstance(value, dict):
                self._update_dict_recursive(target[key], value)
            else:
                target[key] = value

    @staticmethod
    def _coerce(raw: str) -> Any:
        """Digit strings become int before boolean words are considered"""
        lowered = raw.lower()
        if raw.isdigit():
            return int(raw)
        if lowered in ('true', 'yes'):
            return True
        if lowered in ('false', 'no'):
            return False
        if raw.replace('.', '', 1).isdigit() and raw.count('.') == 1:
            return float(raw)
        return raw

    def _override_from_env(self, environ: Mapping[str, str]) -> None:
        """Applies BDIAG_SECTION_KEY=value overrides"""
        for env_name, env_value in environ.items():
            if not env_name.startswith(self.env_prefix):
                continue

            config_path = env_name[len(self.env_prefix):].lower().split('_')
            if not all(config_path):
                self.logger.warning(f"Ignoring malformed override {env_name}")
                continue

            current = self.config
            for part in config_path[:-1]:
                if not isinstance(current.get(part), dict):
                    current[part] = {}
                current = current[part]

            current[config_path[-1]] = self._coerce(env_value)
            self.logger.debug(f"{env_name} overrides {'.'.join(config_path)}")

    def get(self, key_path: str, default: Any = None) -> Any:
        """
        Reads a value by dot path

        Args:
            key_path: e.g. "enumeration.workers"
            default: Returned when the path does not exist
        """
        current = self.config
        try:
            for part in key_path.split('.'):
                current = current[part]
            return current
        except (KeyError, TypeError):
            return default

    def set(self, key_path: str, value: Any) -> None:
        parts = key_path.split('.')
        current = self.config
        for part in parts[:-1]:
            if part not in current:
                current[part] = {}
            current = current[part]
        current[parts[-1]] = value

    def validate(self) -> List[ValidationError]:
        """
        Validates the configuration

        Returns:
            List[ValidationError]: Load errors followed by value errors
        """
        self.validation_errors = list(self.load_errors)

        required_paths = [
            "general.loglevel",
            "enumeration.workers",
            "enumeration.maxweight",
            "selftest.samples",
            "selftest.seed"
        ]
        for path in required_paths:
            if self.get(path) is None:
                self._add_validation_error(path, "missing required configuration value")

        level = self.get("general.loglevel")
        if level is not None and str(level).upper() not in LOG_LEVELS:
            self._add_validation_error("general.loglevel", f"unknown log level {level!r}", level)

        if not isinstance(self.get("general.rich", True), bool):
            self._add_validation_error("general.rich", "must be a boolean", self.get("general.rich"))

        numeric_ranges = {
            "enumeration.workers": (1, 256),
            "enumeration.maxweight": (0, 7),
            "selftest.samples": (1, 100000),
            "selftest.seed": (0, 2 ** 32 - 1)
        }
        for path, (min_val, max_val) in numeric_ranges.items():
            value = self.get(path)
            if value is None:
                continue
            if not isinstance(value, int) or isinstance(value, bool):
                self._add_validation_error(path, f"value {value!r} is not an integer", value)
            elif not min_val <= value <= max_val:
                self._add_validation_error(path, f"value {value} is outside [{min_val}, {max_val}]", value)

        if self.get("selftest.level", "quick") not in ("quick", "deep"):
            self._add_validation_error("selftest.level", "must be 'quick' or 'deep'", self.get("selftest.level"))

        return self.validation_errors

    def _add_validation_error(self, path: str, message: str, value: Any = None) -> None:
        self.validation_errors.append(ValidationError(path=path, message=message, value=value))

    def save_config(self, file_path: Union[str, Path]) -> bool:
        """
        Writes the current configuration as YAML or JSON

        Args:
            file_path: Target file; the suffix picks the format

        Returns:
            bool: True on success
        """
        file_path = Path(file_path)

        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, 'w', encoding='utf-8') as f:
                if file_path.suffix in ['.yaml', '.yml']:
                    yaml.dump(self.config, f, default_flow_style=False, sort_keys=False)
                elif file_path.suffix == '.json':
                    json.dump(self.config, f, ensure_ascii=False, indent=2)
                else:
                    self.logger.error(f"Unknown configuration file type: {file_path.suffix}")
                    return False
        except OSError as e:
            self.logger.error(f"Could not save configuration to {file_path}: {e}")
            return False

        self.logger.info(f"Configuration saved to {file_path}")
        return True

    def print_config(self, section: Optional[str] = None) -> None:
        """
        Prints the effective configuration as JSON to stdout

        Args:
            section: Top-level section to print, or None for everything
        """
        if section:
            print(json.dumps(self.get(section, {}), ensure_ascii=False, indent=2))
        else:
            print(json.dumps(self.config, ensure_ascii=False, indent=2))
