"""Shared fixtures; puts the project root on sys.path the way main.py does."""

import os
import sys

import pytest

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, PROJECT_ROOT)

from utils.config import override_settings  # noqa: E402


@pytest.fixture
def small_caps():
    """Caps low enough that modest inputs trip them."""
    with override_settings(element_cap=50, subset_cap=4, closed_set_cap=10, vector_cap=100) as settings:
        yield settings
