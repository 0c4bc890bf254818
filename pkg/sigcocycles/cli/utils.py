"""
Filename: utils.py
Author: William Bowley
Version: 2.0
Date: 2026-10-14

Description:
    Helpers for reading JSON documents and the self-test
    configuration.
"""

import logging

from collections.abc import Mapping


def require(key: str, group: Mapping) -> object:
    """
    Retrieve a required key from a mapping-like section.

    Args:
        key: The name of the required entry.
        group: The dictionary-like section to search.

    Returns:
        The value associated with the given key.
    """

    if not isinstance(group, Mapping) or key not in group:
        msg = f"Missing required key '{key}' in section {group}"
        logging.critical(msg)
        raise KeyError(msg)

    return group[key]


def scaled(count: int, divisor: int, floor: int) -> int:
    """Trial count shrunk for a quick run, never below floor."""
    return max(floor, count // divisor)
