"""
Configuration handling utilities for the Coprime Toolkit
"""

import json
import logging
from pathlib import Path
from dataclasses import dataclass, field, fields, asdict
from typing import Dict, Optional, Any


@dataclass
class GeneralConfig:
    """General configuration settings"""
    log_directory: str = "logs"
    log_to_file: bool = False
    log_level: str = "WARNING"


@dataclass
class SweepConfig:
    """Goldbach verification sweep settings"""
    workers: Optional[int] = None
    stride: int = 2 ** 16
    checkpoint_path: str = "goldbach.ckpt"
    segment_size: int = 2 ** 18
    max_target: int = 10 ** 8


@dataclass
class RenderConfig:
    """Cayley table and raster output settings"""
    cell_px: int = 1
    max_image_side: int = 16384
    max_table_order: int = 4096


@dataclass
class Config:
    """Main configuration class"""
    CONFIG_PATH = "config.json"

    general: GeneralConfig = field(default_factory=GeneralConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    render: RenderConfig = field(default_factory=RenderConfig)


def config_to_dict(config: Config) -> Dict[str, Any]:
    """Convert config object to dictionary for JSON serialization"""
    return asdict(config)


def dict_to_config(config_dict: Dict[str, Any]) -> Config:
    """Convert dictionary to config object, ignoring unknown keys"""
    config = Config()

    for section_field in fields(config):
        section_values = config_dict.get(section_field.name)
        if not isinstance(section_values, dict):
            continue
        section = getattr(config, section_field.name)
        for key, value in section_values.items():
            if hasattr(section, key):
                setattr(section, key, value)

    return config


def load_config(path: Optional[str] = None) -> Config:
    """Load configuration from file, falling back to defaults"""
    config_path = Path(path or Config.CONFIG_PATH)

    if not config_path.exists():
        return Config()

    try:
        with open(config_path, 'r') as f:
            config_dict = json.load(f)
        return dict_to_config(config_dict)
    except (OSError, ValueError) as e:
        logging.getLogger('coprime_toolkit').warning(
            f"Error loading config {config_path}: {str(e)}. Using default configuration."
        )
        return Config()


def save_config(config: Config, path: Optional[str] = None) -> bool:
    """Save configuration to file"""
    config_path = Path(path or Config.CONFIG_PATH)

    try:
        with open(config_path, 'w') as f:
            json.dump(config_to_dict(config), f, indent=2)
        return True
    except OSError as e:
        logging.getLogger('coprime_toolkit').error(f"Error saving config: {str(e)}")
        return False
