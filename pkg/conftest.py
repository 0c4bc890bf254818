"""
Puts the repository root on sys.path so that `pytest unit_tests`
imports sigcocycles without an install.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
