"""
Utility Helper Functions

This module contains logging, configuration and formatting helpers used
throughout the application.
"""

import copy
import json
import logging
import logging.handlers
import math
import os
import re
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import colorlog
import yaml
from dotenv import dotenv_values


OUTPUT_ENV_VAR = "HERMANN_FLOW_OUT"
SIGNIFICANT_DIGITS = 10

DEFAULT_CONFIG: Dict[str, Any] = {
    "application": {
        "name": "hermann-flow",
        "version": "1.0.0",
    },
    "field": {
        "wall_eps": 1e-9,
    },
    "solver": {
        "newton_tol": 1e-12,
        "max_iter": 100,
        "max_halvings": 30,
        "edge_tol": 1e-12,
    },
    "flow": {
        "t_max": 50.0,
        "delta_stop": 1e-6,
        "rtol": 1e-10,
        "atol": 1e-10,
        "step_cap_factor": 0.25,
        "equilibrium_tol": 1e-10,
        "initial_step": 1e-4,
        "max_steps": 200000,
    },
    "grid": {
        "default_resolution": 60,
        "workers": 1,
    },
    "verify": {
        "oracle_samples": 100,
        "field_samples": 20,
        "workers": 1,
    },
    "svg": {
        "width": 640,
        "height": 640,
        "max_arrows": 400,
        "arrows": True,
        "color_by_magnitude": True,
    },
    "output": {
        "directory": "output",
    },
    "logging": {
        "level": "WARNING",
        "file_logging": False,
    },
}


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None,
                  file_logging: bool = False) -> None:
    """
    Set up application logging configuration.

    Console output goes to stderr so stdout only carries command output.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file path, implies file logging
        file_logging: Write a rotating log under logs/
    """

    log_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    date_format = '%Y-%m-%d %H:%M:%S'
    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level}")

    logger = logging.getLogger()
    logger.setLevel(level)
    logger.handlers.clear()

    console_handler = colorlog.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(colorlog.ColoredFormatter(
        '%(log_color)s' + log_format, date_format,
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'bold_red',
        },
    ))
    logger.addHandler(console_handler)

    if log_file or file_logging:
        if log_file:
            file_path = Path(log_file)
            file_path.parent.mkdir(parents=True, exist_ok=True)
        else:
            log_dir = Path("logs")
            log_dir.mkdir(exist_ok=True)
            file_path = log_dir / "hermann_flow.log"

        file_handler = logging.handlers.RotatingFileHandler(
            file_path,
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(log_format, date_format))
        logger.addHandler(file_handler)


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
    return base


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load application configuration from a JSON or YAML file.

    Args:
        config_path: Path to configuration file, config/settings.json by default

    Returns:
        Defaults deep-merged with the file contents

    Raises:
        ValueError: If an explicitly requested file is missing or unreadable
    """

    explicit = config_path is not None
    path = Path(config_path) if explicit else Path("config") / "settings.json"
    config = copy.deepcopy(DEFAULT_CONFIG)

    if not path.exists():
        if explicit:
            raise ValueError(f"Config file not found: {path}")
        return config

    try:
        with open(path, 'r', encoding='utf-8') as f:
            if path.suffix.lower() in (".yaml", ".yml"):
                file_config = yaml.safe_load(f) or {}
            else:
                file_config = json.load(f)
    except (json.JSONDecodeError, yaml.YAMLError, IOError) as e:
        if explicit:
            raise ValueError(f"Failed to load config file {path}: {e}")
        logging.warning(f"Failed to load config file {path}: {e}")
        return config

    if not isinstance(file_config, dict):
        raise ValueError(f"Config file {path} must contain a mapping")
    return _deep_merge(config, file_config)


def get_output_dir(config: Dict[str, Any]) -> Path:
    """
    Resolve the output directory.

    The process environment wins over a .env file in the working directory,
    which wins over the configuration. The .env file is read, not exported.
    """

    value = os.environ.get(OUTPUT_ENV_VAR)
    if not value:
        env_file = Path(".env")
        if env_file.exists():
            value = dotenv_values(env_file).get(OUTPUT_ENV_VAR)
    if not value:
        value = config.get("output", {}).get("directory", "output")
    return Path(value)


def format_number(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """
    Format a number with a fixed count of significant digits.

    Rounding is half-to-even and independent of the locale. Values whose
    decimal exponent lies in [-6, 10) print in fixed notation, others in
    scientific notation. Zero of either sign prints as 0 with the full
    fraction.

    Args:
        value: Number to format
        digits: Significant digits

    Returns:
        Formatted string
    """

    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0:
        return "0." + "0" * digits

    number = Decimal(repr(float(value)))
    exponent = number.adjusted()
    rounded = number.quantize(Decimal(1).scaleb(exponent - digits + 1), rounding=ROUND_HALF_EVEN)
    # rounding can carry into the next decade
    if rounded.adjusted() != exponent:
        exponent = rounded.adjusted()
        rounded = number.quantize(Decimal(1).scaleb(exponent - digits + 1), rounding=ROUND_HALF_EVEN)

    if -6 <= exponent < 10:
        places = max(digits - 1 - exponent, 0)
        return f"{rounded:.{places}f}"
    mantissa = rounded.scaleb(-exponent)
    return f"{mantissa:.{digits - 1}f}E{exponent:+03d}"


def parse_point(text: str) -> Tuple[float, float]:
    """
    Parse an ``X1,X2`` pair.

    Raises:
        ValueError: If the text is not two finite numbers separated by a comma
    """

    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"Expected X1,X2 but got '{text}'")
    try:
        x1, x2 = float(parts[0]), float(parts[1])
    except ValueError:
        raise ValueError(f"Expected two numbers but got '{text}'")
    if not (math.isfinite(x1) and math.isfinite(x2)):
        raise ValueError(f"Coordinates must be finite: '{text}'")
    return x1, x2


_PARAM = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*$")


def parse_params(items: Optional[list]) -> Dict[str, int]:
    """
    Parse repeated ``name=value`` integer parameters.

    Raises:
        ValueError: On malformed or repeated parameters
    """

    params: Dict[str, int] = {}
    for item in items or []:
        match = _PARAM.match(item)
        if not match:
            raise ValueError(f"Expected name=integer but got '{item}'")
        name, value = match.group(1), int(match.group(2))
        if name in params:
            raise ValueError(f"Parameter {name} given twice")
        params[name] = value
    return params


def sanitize_filename(filename: str) -> str:
    """
    Sanitize filename by removing invalid characters.

    Args:
        filename: Original filename

    Returns:
        Sanitized filename
    """

    invalid_chars = '<>:"/\\|?*[]=,'

    for char in invalid_chars:
        filename = filename.replace(char, '_')

    filename = filename.strip(' .')

    if not filename:
        filename = "untitled"

    return filename
