"""
Serialization Utilities

JSON artifacts (linear representations, self-check reports) and YAML
benchmark specifications.
"""

import json
from pathlib import Path
from typing import Any, Dict
import logging

import yaml

logger = logging.getLogger(__name__)


def save_json(data: Any, path: str) -> None:
    """Save data to JSON file, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, default=str)
    logger.info(f"Saved JSON to {path}")


def load_yaml(path: str) -> Dict[str, Any]:
    """Load a YAML mapping (benchmark specs)."""
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{path} must contain a YAML mapping")
    logger.info(f"Loaded YAML spec from {path}")
    return data
