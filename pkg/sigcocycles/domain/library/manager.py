"""
Filename: manager.py
Author: William Bowley
Version: 2.0
Date: 2026-10-05
Description:
    Serves the packaged data files: the convention lock file
    and the documented cohomology table.

    NOTE:
        The lock file is read-only at runtime. Recalibrating a
        convention means editing conventions.toml and rerunning
        the calibration criterion of the self-test.
"""

import logging
import tomllib

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Any
from importlib import resources


PACKAGE_LIBRARY = "sigcocycles.library"
CONVENTIONS_FILE = "conventions.toml"
COHOMOLOGY_FILE = "cohomology.toml"


class LibraryManager:
    """
    Loads the convention lock file and the cohomology table,
    from the package or from user supplied paths.
    """
    def __init__(
        self,
        conventions_path: Optional[str] = None,
        cohomology_path: Optional[str] = None
    ) -> None:
        """
        Initialization of the library manager

        Args:
            conventions_path: Optional path to an external lock file (TOML)
            cohomology_path: Optional path to an external cohomology table
        """
        self.conventions = self._load(CONVENTIONS_FILE, conventions_path)
        self.cohomology_table = self._load(COHOMOLOGY_FILE, cohomology_path)

    def sign(self, section: str, key: str) -> int:
        """
        Returns a +1/-1 convention sign from the lock file.

        Raises:
            KeyError: if the section or key is missing.
            ValueError: if the stored value is not +1 or -1.
        """
        try:
            value = self.conventions[section][key]
        except KeyError as error:
            msg = f"Convention '{section}.{key}' missing from lock file"
            logging.error(msg)
            raise KeyError(msg) from error

        if value not in (1, -1):
            msg = f"Convention '{section}.{key}' must be +1 or -1, got {value}"
            logging.error(msg)
            raise ValueError(msg)
        return value

    def calibration_table(self) -> tuple[list[Fraction], list[list[int]]]:
        """
        Returns the frozen rotation angles and Meyer table.
        """
        section = self.conventions.get("calibration", {})
        angles = [Fraction(text) for text in section.get("angles", [])]
        table = [list(row) for row in section.get("table", [])]
        if len(table) != len(angles) or any(
            len(row) != len(angles) for row in table
        ):
            msg = "Calibration table shape does not match its angle list"
            logging.error(msg)
            raise ValueError(msg)
        return angles, table

    def cohomology(self, genus: int) -> dict[str, Any]:
        """
        Documented cohomology row for a genus.

        Raises:
            KeyError: if no row covers the genus.
        """
        for row in self.cohomology_table.get("range", []):
            upper = row.get("to")
            if row["from"] <= genus and (upper is None or genus <= upper):
                return {
                    key: value for key, value in row.items()
                    if key not in ("from", "to")
                }
        raise KeyError(f"No cohomology row covers genus {genus}")

    @property
    def maximal_signature_modulus(self) -> int:
        return self.cohomology_table.get("maximal_signature_modulus", 8)

    def _load(self, name: str, path: Optional[str]) -> dict[str, Any]:
        if path is None:
            return self._load_from_package(name)
        return self._load_from_path(path)

    def _load_from_package(self, name: str) -> dict[str, Any]:
        """
        Loads a data file that is included in sigcocycles
        """
        try:
            text = resources.files(PACKAGE_LIBRARY).joinpath(name).read_text(
                encoding="utf-8"
            )
            return tomllib.loads(text)

        except Exception as error:
            msg = (
                f"Failed to load '{name}' from package resources: {error}"
            )
            raise RuntimeError(msg) from error

    def _load_from_path(self, path: str) -> dict[str, Any]:
        """
        Loads a user data file from path
        """
        try:
            with open(path, "rb") as file:
                return tomllib.load(file)

        except Exception as error:
            msg = f"Failed to load library file from '{path}': {error}"
            raise RuntimeError(msg) from error


@lru_cache(maxsize=1)
def default_library() -> LibraryManager:
    """Shared manager over the packaged files, loaded on first use."""
    return LibraryManager()
